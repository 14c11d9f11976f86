#pragma once

// Summability operators applied to concrete functions: error curves along
// index sequences, moduli of continuity, Lebesgue-constant curves, and the
// weak-type experiments for the maximal operators.

#include <optional>
#include <string>
#include <vector>

#include "wlm/grid.hpp"
#include "wlm/kernels.hpp"
#include "wlm/variation.hpp"

namespace wlm {

struct TestFunction {
    std::string name;
    std::string smoothness;  // descriptor only
    std::function<GridD(int)> sample;            // at requested resolution
    std::function<GridQ(int)> sample_exact;      // empty when not exactly rational
};

// constant, identity (midpoint-sampled x), walshpoly:k, indicator:m,
// spike:m, logmod.  Parameterized members accept "name:param".
std::vector<TestFunction> corpus();
TestFunction test_function(const std::string& spec);

// L_n f (or any kernel mean): plain XOR convolution with the kernel.
template <class S>
GridFunction<S> apply_mean(const GridFunction<S>& kernel, const GridFunction<S>& f) {
    return xor_convolve(f, kernel);
}

struct ErrorPoint {
    int A = 0;
    index_t n;
    double error_sup = 0.0;
    double error_l1 = 0.0;
};

// Per-A error ||L_{m_A} f - f|| with f re-sampled at resolution |m_A|+1.
std::vector<ErrorPoint> error_curve(const IndexSequence& seq, const TestFunction& f, int A_max);

struct ModulusPoint {
    int k = 0;
    double omega = 0.0;
};

// omega(2^{-k}, f) = max over representable dyadic shifts 0 < h <= 2^{-k}
// of ||f(.+h) - f||; XOR-translate on the grid.
std::vector<ModulusPoint> modulus(const GridD& f, bool sup_not_l1, int k_max);

struct LebesguePoint {
    int A = 0;
    index_t n;
    double f_l1 = 0.0;
    double vl_value = 0.0;
    double ratio = 0.0;  // f_l1 / (1 + vl)
};

std::vector<LebesguePoint> lebesgue_constant_curve(const IndexSequence& seq, int A_max);

struct WeakTypePoint {
    int m = 0;           // spike depth, f = 2^m on I_m(0)
    double fitted = 0.0; // max over dyadic lambda of lambda * |{T f > lambda}|
};

struct WeakTypeReport {
    std::vector<WeakTypePoint> points;
    double fitted_constant = 0.0;  // max over spikes (||f||_1 = 1)
};

// Maximal function E*: lambda |{E* f > lambda}| <= C ||f||_1.
WeakTypeReport estar_weak_type(int m_max, int resolution);

// sup_A |f * H1_{m_A}| / |m_A| over pow2minus1 members with |m_A| < resolution.
WeakTypeReport h1_maximal_weak_type(int m_max, int A_max, int resolution);

}  // namespace wlm
