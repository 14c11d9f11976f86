#pragma once

// Binary-digit variation functionals and the index-sequence families used
// by the convergence criteria.

#include <functional>
#include <string>
#include <vector>

#include "wlm/dyadic.hpp"

namespace wlm {

// V_S(n) = sum_{i>=0} |eps_i - eps_{i+1}| + eps_0 = twice the number of 1-runs.
long vs(const index_t& n);

// V_L(n) = (1/|n|) sum_{k=1}^{|n|} |eps_k - eps_{k+1}| l_{n(k-1)}.
double vl(const index_t& n);
// Exact rational version; requires every edge truncation within the exact
// harmonic table (covers n < 2^13).
mpq_class vl_exact(const index_t& n);

// (1/|n|) sum_{k=1}^{|n|} eps_k(n) l_{n(k-1)}.
double mem_sum(const index_t& n);
mpq_class mem_sum_exact(const index_t& n);

struct IndexSequence {
    std::string name;
    // m_A for A >= 1; strictly increasing.  Members below 2 are degenerate
    // placeholders (pow2minus1 and alternating start at 1) and are skipped
    // by every consumer that needs an actual kernel index.
    std::function<index_t(int)> member;
};

// Families: pow2 (2^A), pow2minus1 (2^A - 1), konyagin (2^{A^2} sum_{i<=A} 4^i),
// alternating (bits at P, P-2, ..., with P = ceil(A^2/6); the superlinear
// length schedule is what makes its Lebesgue constants grow by a testable
// factor across a short A-window while V_L stays linear in the bit length).
IndexSequence sequence(const std::string& name);
std::vector<std::string> sequence_names();

// First A whose member is a usable index (>= 2).
int first_usable_A(const IndexSequence& seq);

struct ConditionRow {
    int A = 0;
    index_t n;
    long vs_value = 0;
    double vl_value = 0.0;
    double mem_value = 0.0;
    double running_max_vl = 0.0;
    double running_max_mem = 0.0;
};

struct ConditionProfile {
    std::vector<ConditionRow> rows;
    // quarter-max heuristic: last-quarter max > 1.5x first-quarter max
    bool vl_growing = false;
    bool mem_growing = false;
    std::string classify_vl() const { return vl_growing ? "growing" : "bounded-so-far"; }
    std::string classify_mem() const { return mem_growing ? "growing" : "bounded-so-far"; }
};

ConditionProfile condition_profile(const IndexSequence& seq, int A_max);

}  // namespace wlm
