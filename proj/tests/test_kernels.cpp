#include <doctest.h>

#include <cmath>

#include "wlm/kernels.hpp"
#include "wlm/reference.hpp"
#include "wlm/variation.hpp"

using namespace wlm;

TEST_CASE("dirichlet kernels match the pointwise definition") {
    const int N = 6;
    for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 5ULL, 17ULL, 32ULL, 64ULL}) {
        const GridQ fast = dirichlet<mpq_class>(n, N);
        const GridQ slow = ref::naive_dirichlet<mpq_class>(n, N);
        for (std::size_t c = 0; c < fast.size(); ++c) CHECK(fast.values[c] == slow.values[c]);
    }
    CHECK_THROWS_AS(dirichlet<mpq_class>(129, 7), std::domain_error);
}

TEST_CASE("paley shift identity, including the endpoint k = 2^j") {
    for (int j = 1; j <= 5; ++j)
        for (std::uint64_t k = 1; k <= (1uLL << j); ++k) CHECK(paley_shift_identity_check(j, k, j + 2));
}

TEST_CASE("fejer and riesz kernels against term-by-term sums") {
    const int N = 5;
    for (std::uint64_t n : {1ULL, 2ULL, 7ULL, 12ULL, 32ULL}) {
        std::vector<std::pair<std::uint64_t, mpq_class>> fejer_terms, riesz_terms;
        for (std::uint64_t k = 1; k <= n; ++k) fejer_terms.emplace_back(k, mpq_class(1, static_cast<long>(n)));
        for (std::uint64_t k = 1; k < n; ++k) riesz_terms.emplace_back(k, mpq_class(1, static_cast<long>(k)));

        const GridQ kf = fejer<mpq_class>(n, N);
        const GridQ kf_ref = ref::naive_kernel_sum(fejer_terms, N);
        for (std::size_t c = 0; c < kf.size(); ++c) CHECK(kf.values[c] == kf_ref.values[c]);
        CHECK(integral(kf) == 1);

        if (n >= 2) {
            const mpq_class ln = harmonic_l_exact(static_cast<long>(n));
            const GridQ kr = riesz_log_kernel<mpq_class>(n, N);
            GridQ kr_ref = ref::naive_kernel_sum(riesz_terms, N);
            for (auto& v : kr_ref.values) v /= ln;
            for (std::size_t c = 0; c < kr.size(); ++c) CHECK(kr.values[c] == kr_ref.values[c]);
            CHECK(integral(kr) == 1);
        }
    }
}

TEST_CASE("logarithmic kernel values at n = 4") {
    // coefficients l_{4-i}/l_4 = 1, 9/11, 6/11, 0
    const GridQ f = norlund_log_kernel<mpq_class>(4, 3);
    CHECK(f.values[0] == mpq_class(26, 11));
    CHECK(f.values[1] == mpq_class(26, 11));
    CHECK(f.values[2] == mpq_class(14, 11));
    CHECK(f.values[4] == mpq_class(8, 11));
    CHECK(f.values[6] == mpq_class(-4, 11));
    CHECK(l1_norm(f) == mpq_class(13, 11));
    CHECK(integral(f) == 1);
    CHECK(log_kernel_l1(4) == doctest::Approx(13.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("general norlund average reduces to the logarithmic kernel") {
    const std::uint64_t n = 20;
    const int N = 5;
    std::vector<mpq_class> q(n, 0);
    for (std::uint64_t k = 1; k < n; ++k) q[k] = mpq_class(1, static_cast<long>(k));
    const GridQ general = norlund_kernel(q, n, N);
    const GridQ log = norlund_log_kernel<mpq_class>(n, N);
    for (std::size_t c = 0; c < general.size(); ++c) CHECK(general.values[c] == log.values[c]);
}

TEST_CASE("exact decomposition identity, spot checks") {
    for (std::uint64_t n : {4ULL, 5ULL, 7ULL, 36ULL, 100ULL, 255ULL}) {
        const auto dec = decompose<mpq_class>(n);
        CHECK_FALSE(decomposition_mismatch(dec).has_value());
        // the direct spectral build also matches a term-by-term sum
        if (n <= 40) {
            std::vector<std::pair<std::uint64_t, mpq_class>> terms;
            for (std::uint64_t k = 1; k < n; ++k) terms.emplace_back(k, mpq_class(1, static_cast<long>(n - k)));
            const GridQ direct = ref::naive_kernel_sum(terms, dec.total.resolution);
            for (std::size_t c = 0; c < direct.size(); ++c) CHECK(direct.values[c] == dec.total.values[c]);
        }
    }
    CHECK_THROWS_AS(decompose<mpq_class>(3), std::domain_error);
}

TEST_CASE("H1 closed form, spot checks") {
    for (std::uint64_t n : {4ULL, 36ULL, 100ULL, 255ULL, 341ULL}) CHECK(h1_closed_form_check(n));
}

TEST_CASE("double-mode decomposition identity and ledger over n < 1024") {
    double max_h22 = 0.0, max_h23 = 0.0, max_h3 = 0.0, max_h1_excess = 0.0;
    for (std::uint64_t n = 4; n < 1024; ++n) {
        const auto dec = decompose<double>(n);
        const int m = order(index_t(static_cast<unsigned long>(n)));
        if (n >= 256) {
            // per-cell agreement of the five parts with the direct build
            const auto bad = decomposition_mismatch(dec, 1e-9);
            CHECK_FALSE(bad.has_value());
        }
        // normalized kernel invariants
        const double ln = harmonic_l(static_cast<long>(n));
        CHECK(integral(dec.total) / ln == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(l1_norm(dec.total) / ln >= 1.0 - 1e-12);

        // part-norm ledger: every fitted constant stays at its frozen ceiling
        const double h21 = l1_norm(dec.h21);
        CHECK(h21 < static_cast<double>(m));  // strict for every index
        max_h22 = std::max(max_h22, l1_norm(dec.h22) / m);
        max_h23 = std::max(max_h23, l1_norm(dec.h23) / m);
        max_h3 = std::max(max_h3, l1_norm(dec.h3));
        const double edge = vl(index_t(static_cast<unsigned long>(n))) * m;
        max_h1_excess = std::max(max_h1_excess, (l1_norm(dec.h1) - edge) / m);
    }
    CHECK(max_h22 <= 1.0);          // observed 11/12
    CHECK(max_h23 <= 1.0);          // observed 11/12
    CHECK(max_h3 <= 1.5 + 1e-9);    // ||D_2 + D_1/2||_1 exactly
    CHECK(max_h1_excess <= 0.75);   // observed 0.60033
}

TEST_CASE("lower-bound witnesses") {
    // 36 = 100100b: blocks [2,2] and [5,5]; the lower threshold degenerates
    const LowerBoundWitness w36 = lower_bound_witness(36);
    REQUIRE(w36.blocks.size() == 2);
    CHECK(w36.blocks[0].a == 2);
    CHECK(w36.blocks[0].threshold_a == 0);  // l_0 / 4
    CHECK(w36.blocks[1].a == 5);
    CHECK(w36.blocks[1].threshold_a == mpq_class(11, 24));  // l_4 / 4
    CHECK(w36.blocks[1].integral_a >= w36.blocks[1].threshold_a);
    CHECK(w36.all_pass());

    // 103 = 1100111b: eligible block [5,6] over a nonzero truncation
    const LowerBoundWitness w103 = lower_bound_witness(103);
    REQUIRE(w103.blocks.size() == 1);
    CHECK(w103.blocks[0].a == 5);
    CHECK(w103.blocks[0].b == 6);
    CHECK(w103.blocks[0].threshold_a == mpq_class(49, 80));  // l_7 / 4
    CHECK(w103.blocks[0].integral_a > 0);
    CHECK(w103.blocks[0].integral_b > 0);
    CHECK(w103.all_pass());
    CHECK(w103.edge_sum > 0);
    CHECK(w103.h1_l1 >= w103.edge_sum / 4);

    // powers of two have one eligible block and an identically zero H1
    const LowerBoundWitness w16 = lower_bound_witness(16);
    CHECK(w16.h1_l1 == 0);
    CHECK(w16.all_pass());

    // 7 = 111b has no block starting at digit 2 or higher
    CHECK_THROWS_AS(lower_bound_witness(7), std::domain_error);
}

TEST_CASE("h1 component needs room and accepts degenerate indices") {
    CHECK_THROWS_AS(h1_component<double>(36, 5), std::domain_error);  // |36| = 5 needs resolution >= 6
    const GridD zero = h1_component<double>(3, 4);
    for (double v : zero.values) CHECK(v == 0.0);
}
