#include <doctest.h>

#include <cmath>
#include <random>

#include "wlm/means.hpp"
#include "wlm/reference.hpp"

using namespace wlm;

TEST_CASE("means act diagonally on walsh functions") {
    // L_n w_k = (l_{n-k} / l_n) w_k, exactly
    const std::uint64_t n = 10;
    const int N = 4;
    const GridQ kernel = norlund_log_kernel<mpq_class>(n, N);
    const mpq_class ln = harmonic_l_exact(static_cast<long>(n));
    for (std::uint64_t k = 0; k < 16; ++k) {
        const GridQ w = walsh_function<mpq_class>(k, N);
        const GridQ Lw = apply_mean(kernel, w);
        const mpq_class factor = k < n ? mpq_class(harmonic_l_exact(static_cast<long>(n - k)) / ln) : mpq_class(0);
        for (std::size_t c = 0; c < w.size(); ++c) CHECK(Lw.values[c] == factor * w.values[c]);
    }
}

TEST_CASE("mean application agrees with the direct convolution sum") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridD f(4);
    for (double& v : f.values) v = dist(rng);
    const GridD kernel = norlund_log_kernel<double>(5, 4);
    const GridD fast = apply_mean(kernel, f);
    const GridD slow = ref::naive_xor_convolve(f, kernel);
    for (std::size_t c = 0; c < f.size(); ++c) CHECK(fast.values[c] == doctest::Approx(slow.values[c]).epsilon(1e-12));
}

TEST_CASE("young inequality on random data") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (std::uint64_t n : {4ULL, 23ULL, 64ULL}) {
        GridD f(7);
        for (double& v : f.values) v = dist(rng);
        const GridD kernel = norlund_log_kernel<double>(n, 7);
        const GridD Lf = apply_mean(kernel, f);
        CHECK(l1_norm(Lf) <= l1_norm(f) * l1_norm(kernel) + 1e-12);
        CHECK(sup_norm(Lf) <= sup_norm(f) * l1_norm(kernel) + 1e-12);
    }
}

TEST_CASE("test function corpus") {
    const auto fns = corpus();
    CHECK(fns.size() == 6);

    // spike integrates to one at any resolution that contains it
    const GridQ spike = test_function("spike:4").sample_exact(9);
    CHECK(integral(spike) == 1);
    CHECK(l1_norm(spike) == 1);

    // midpoint-sampled identity has mean 1/2 exactly
    const GridQ id = test_function("identity").sample_exact(8);
    CHECK(integral(id) == mpq_class(1, 2));

    // exactly representable members are refinement-invariant
    for (const char* name : {"constant", "walshpoly:7", "indicator:2", "spike:3"}) {
        const TestFunction tf = test_function(name);
        const GridQ coarse = tf.sample_exact(6);
        const GridQ fine = tf.sample_exact(9);
        const GridQ lifted = refine(coarse, 9);
        for (std::size_t c = 0; c < fine.size(); ++c) CHECK(fine.values[c] == lifted.values[c]);
    }

    CHECK_THROWS_AS(test_function("sawtooth"), std::invalid_argument);
    CHECK_THROWS_AS(test_function("indicator:9").sample(5), std::domain_error);
}

TEST_CASE("modulus of continuity: exact shapes") {
    // identity is sharply lipschitz: omega(2^-k) = 2^-k
    const GridD id = test_function("identity").sample(10);
    for (const auto& p : modulus(id, true, 8)) CHECK(p.omega == doctest::Approx(std::ldexp(1.0, -p.k)).epsilon(1e-13));

    // constants do not move
    const GridD cst = test_function("constant").sample(8);
    for (const auto& p : modulus(cst, true, 8)) CHECK(p.omega == 0.0);

    // indicator of I_m(0): jump visible until the shift drops below 2^-m
    const GridD ind = test_function("indicator:3").sample(9);
    const auto pts = modulus(ind, true, 6);
    CHECK(pts[2].k == 3);
    CHECK(pts[2].omega == 1.0);  // shift 2^-3 still crosses the boundary
    CHECK(pts[3].omega == 0.0);  // 2^-4 never does
    CHECK(pts[4].omega == 0.0);

    // L1 modulus never exceeds the sup modulus
    const auto sup_pts = modulus(ind, true, 6);
    const auto l1_pts = modulus(ind, false, 6);
    for (std::size_t i = 0; i < sup_pts.size(); ++i) CHECK(l1_pts[i].omega <= sup_pts[i].omega + 1e-15);
}

TEST_CASE("logarithmic-modulus function sits in the dyadic Lip-log class") {
    const int N = 16;
    const GridD f = test_function("logmod").sample(N);
    const auto pts = modulus(f, true, 12);
    for (const auto& p : pts) {
        if (p.k < 4) continue;
        const double scaled = p.k * p.omega;
        // exact value 1 - k/(N+1)
        CHECK(scaled == doctest::Approx(1.0 - static_cast<double>(p.k) / (N + 1)).epsilon(1e-12));
        CHECK(scaled >= 0.25);
        CHECK(scaled <= 0.80);
    }
}

TEST_CASE("error curves decay for smooth data") {
    const auto curve = error_curve(sequence("pow2"), test_function("identity"), 10);
    REQUIRE(curve.size() >= 8);
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        if (curve[i].A < 3) continue;
        CHECK(curve[i + 1].error_sup < curve[i].error_sup);
        CHECK(curve[i + 1].error_l1 < curve[i].error_l1);
    }
    // band-limited data is reproduced up to the explicit eigenvalue defect:
    // L_n w_k = (l_{n-k}/l_n) w_k, so the error on a polynomial is a short sum
    const auto wp = error_curve(sequence("pow2"), test_function("walshpoly:3"), 8);
    for (const auto& p : wp) {
        if (p.n <= 3) continue;
        const long n = static_cast<long>(to_u64(p.n));
        double sum = 0.0;
        for (int k = 1; k <= 3; ++k) sum += (1.0 - harmonic_l(n - k) / harmonic_l(n)) / (k + 1.0);
        const double top = (1.0 - harmonic_l(n - 3) / harmonic_l(n)) / 4.0;  // coefficient of w_3
        CHECK(p.error_sup <= sum + 1e-12);
        CHECK(p.error_sup >= top - 1e-12);
    }
}

TEST_CASE("lebesgue constants along families") {
    const auto pow2 = lebesgue_constant_curve(sequence("pow2"), 12);
    for (const auto& p : pow2) {
        CHECK(p.vl_value == 0.0);
        CHECK(p.f_l1 >= 1.0 - 1e-12);
        CHECK(p.f_l1 <= 1.8);
        CHECK(p.ratio == p.f_l1);
    }
    const auto alt = lebesgue_constant_curve(sequence("alternating"), 10);
    REQUIRE(alt.size() >= 2);
    CHECK(alt.back().f_l1 > alt.front().f_l1);
}

TEST_CASE("weak type fits") {
    const WeakTypeReport estar = estar_weak_type(8, 10);
    CHECK(estar.points.size() == 9);
    CHECK(estar.fitted_constant == doctest::Approx(0.5).epsilon(1e-12));
    for (const auto& p : estar.points) CHECK(p.fitted <= 0.5 + 1e-12);

    const WeakTypeReport h1 = h1_maximal_weak_type(6, 10, 11);
    CHECK(std::isfinite(h1.fitted_constant));
    CHECK(h1.fitted_constant > 0.0);
    CHECK(h1.fitted_constant <= 2.0);
}
