#include <doctest.h>

#include <cmath>

#include "wlm/dyadic.hpp"

using namespace wlm;

TEST_CASE("digit helpers") {
    CHECK(order(index_t(1)) == 0);
    CHECK(order(index_t(12)) == 3);
    CHECK(order(index_t(4096)) == 12);
    CHECK_THROWS_AS(order(index_t(0)), std::domain_error);

    const index_t n = 13;  // 1101
    CHECK(eps(n, 0) == 1);
    CHECK(eps(n, 1) == 0);
    CHECK(eps(n, 2) == 1);
    CHECK(eps(n, 3) == 1);
    CHECK(eps(n, 4) == 0);
    CHECK(eps(n, -3) == 0);

    CHECK(trunc_index(n, -1) == 0);
    CHECK(trunc_index(n, 0) == 1);
    CHECK(trunc_index(n, 1) == 1);
    CHECK(trunc_index(n, 2) == 5);
    CHECK(trunc_index(n, 9) == 13);
}

TEST_CASE("block runs decompose the binary expansion") {
    const auto runs = block_runs(index_t(13));  // 1101 -> [0,0], [2,3]
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == std::pair<int, int>{0, 0});
    CHECK(runs[1] == std::pair<int, int>{2, 3});

    CHECK(block_runs(index_t(0)).empty());
    CHECK(block_runs(index_t(255)).size() == 1);

    // reassemble n from its runs
    index_t n("110100111011", 2);
    index_t back = 0;
    for (const auto& [a, b] : block_runs(n))
        for (int j = a; j <= b; ++j) mpz_setbit(back.get_mpz_t(), static_cast<mp_bitcnt_t>(j));
    CHECK(back == n);
}

TEST_CASE("64-bit bridging and binary strings") {
    CHECK(fits_u64(index_t(1)));
    CHECK(to_u64(index_t(4096)) == 4096u);
    index_t big = 1;
    big <<= 70;
    CHECK_FALSE(fits_u64(big));
    CHECK_THROWS_AS(to_u64(big), std::overflow_error);
    CHECK(to_binary(index_t(13)) == "1101");
}

TEST_CASE("harmonic numbers l_n = H_{n-1}") {
    CHECK(harmonic_table::exact(0) == 0);
    CHECK(harmonic_table::exact(1) == 0);
    CHECK(harmonic_table::exact(2) == 1);
    CHECK(harmonic_table::exact(5) == mpq_class(25, 12));  // 1 + 1/2 + 1/3 + 1/4

    // double path agrees with the exact table inside it
    for (long n : {2L, 17L, 100L, 8191L})
        CHECK(harmonic_table::value(n) == doctest::Approx(harmonic_table::exact(n).get_d()).epsilon(1e-14));

    // asymptotic tail agrees with direct summation past the dense table
    const long m = (1L << 15) + 12345;
    double direct = 0.0;
    for (long k = m - 1; k >= 1; --k) direct += 1.0 / static_cast<double>(k);
    CHECK(harmonic_table::value(m) == doctest::Approx(direct).epsilon(1e-13));

    index_t giant = 1;
    giant <<= 40;
    const double v = harmonic_table::value(giant);
    // l_n ~ ln n + gamma
    CHECK(v == doctest::Approx(40.0 * std::log(2.0) + 0.5772156649015329).epsilon(1e-10));
}
