#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wlm {

// Indices n are nonnegative integers read through their binary digits
// n = sum_k eps_k(n) 2^k.  Arbitrary precision: some sequence families
// overflow 64 bits within a handful of steps.
using index_t = mpz_class;

// |n| = position of the highest set bit (n >= 1).
inline int order(const index_t& n) {
    if (n <= 0) throw std::domain_error("order: n must be >= 1");
    return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

inline int eps(const index_t& n, int k) {
    if (k < 0) return 0;
    return mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(k)) ? 1 : 0;
}

// n(k) = n mod 2^{k+1}, the k-th truncation (low k+1 bits); n(-1) = 0.
inline index_t trunc_index(const index_t& n, int k) {
    if (k < 0) return 0;
    index_t r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k + 1));
    return r;
}

// Maximal runs of consecutive 1-bits, low to high: n = sum over runs of
// sum_{j=a..b} 2^j.  Returned as (a, b) pairs with a <= b.
inline std::vector<std::pair<int, int>> block_runs(const index_t& n) {
    std::vector<std::pair<int, int>> runs;
    if (n <= 0) return runs;
    const int m = order(n);
    int j = 0;
    while (j <= m) {
        if (eps(n, j)) {
            const int a = j;
            while (j <= m && eps(n, j)) ++j;
            runs.emplace_back(a, j - 1);
        } else {
            ++j;
        }
    }
    return runs;
}

inline bool fits_u64(const index_t& n) { return n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const index_t& n) {
    if (!fits_u64(n) || n < 0) throw std::overflow_error("index does not fit in 64 bits");
    std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
        index_t hi = n >> 32;  // 32-bit unsigned long platforms only
        lo |= static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32;
    }
    return lo;
}

inline std::string to_binary(const index_t& n) { return n.get_str(2); }

// l_n = sum_{k=1}^{n-1} 1/k  (so l_0 = l_1 = 0).  Exact values come from an
// incrementally built rational table; the double version falls back to the
// Euler-Maclaurin expansion past the table.
class harmonic_table {
  public:
    static constexpr long exact_cap = 8192;   // largest n with exact l_n
    static constexpr long dense_cap = 1 << 15;

    static const mpq_class& exact(long n);
    static double value(long n);
    static double value(const index_t& n);

  private:
    static harmonic_table& instance();
    std::vector<mpq_class> exact_;   // exact_[n] = l_n, grown on demand
    std::vector<double> dense_;      // dense_[n] = l_n for n < dense_cap
    harmonic_table();
};

inline double harmonic_l(long n) { return harmonic_table::value(n); }
inline double harmonic_l(const index_t& n) { return harmonic_table::value(n); }
inline const mpq_class& harmonic_l_exact(long n) { return harmonic_table::exact(n); }

}  // namespace wlm
