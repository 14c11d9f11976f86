#pragma once

// Dirichlet / Fejer / logarithmic kernels, the proof decomposition of the
// Norlund logarithmic kernel, and exact lower-bound witnesses.
//
// Fast construction route: a combination sum_k c_k D_k has Walsh
// coefficients coeffs[i] = sum_{k>i} c_k (each D_k contributes 1 to every
// index below k), so one inverse transform of a suffix-sum array builds the
// kernel in O(N 2^N).  The naive term-by-term route lives in wlm::ref.

#include <optional>
#include <utility>
#include <vector>

#include "wlm/dyadic.hpp"
#include "wlm/grid.hpp"
#include "wlm/walsh.hpp"

namespace wlm {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    // l_n = sum_{k<n} 1/k
    static double harmonic(long n) { return harmonic_table::value(n); }
    static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<mpq_class> {
    static mpq_class ratio(long num, long den) {
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    static mpq_class harmonic(long n) { return harmonic_table::exact(n); }
    static double to_double(const mpq_class& v) { return v.get_d(); }
};

// D_n = sum_{k<n} w_k: suffix spectrum is 1 below n, 0 from n on.
template <class S>
GridFunction<S> dirichlet(std::uint64_t n, int resolution) {
    if (n > (std::uint64_t(1) << resolution)) throw std::domain_error("dirichlet: index above grid bandwidth");
    WalshSpectrum<S> spec(resolution);
    for (std::size_t i = 0; i < n && i < spec.size(); ++i) spec.coeffs[i] = S(1);
    return ifwht(spec);
}

// K_n = (1/n) sum_{k=1..n} D_k: coeffs[i] = (n-i)/n for i < n.
template <class S>
GridFunction<S> fejer(std::uint64_t n, int resolution) {
    if (n > (std::uint64_t(1) << resolution)) throw std::domain_error("fejer: index above grid bandwidth");
    WalshSpectrum<S> spec(resolution);
    for (std::size_t i = 0; i < n; ++i)
        spec.coeffs[i] = scalar_traits<S>::ratio(static_cast<long>(n - i), static_cast<long>(n));
    return ifwht(spec);
}

// F_n = (1/l_n) sum_{k=1}^{n-1} D_k/(n-k): coeffs[i] = l_{n-i}/l_n.
template <class S>
GridFunction<S> norlund_log_kernel(std::uint64_t n, int resolution) {
    if (n < 2) throw std::domain_error("norlund_log_kernel: n must be >= 2");
    if (n > (std::uint64_t(1) << resolution)) throw std::domain_error("norlund_log_kernel: index above grid bandwidth");
    const S ln = scalar_traits<S>::harmonic(static_cast<long>(n));
    WalshSpectrum<S> spec(resolution);
    for (std::size_t i = 0; i < n; ++i) spec.coeffs[i] = scalar_traits<S>::harmonic(static_cast<long>(n - i)) / ln;
    return ifwht(spec);
}

// R_n = (1/l_n) sum_{k=1}^{n-1} D_k/k: coeffs[i] = (l_n - l_{i+1})/l_n.
template <class S>
GridFunction<S> riesz_log_kernel(std::uint64_t n, int resolution) {
    if (n < 2) throw std::domain_error("riesz_log_kernel: n must be >= 2");
    if (n > (std::uint64_t(1) << resolution)) throw std::domain_error("riesz_log_kernel: index above grid bandwidth");
    const S ln = scalar_traits<S>::harmonic(static_cast<long>(n));
    WalshSpectrum<S> spec(resolution);
    for (std::size_t i = 0; i + 1 < n; ++i)
        spec.coeffs[i] = (ln - scalar_traits<S>::harmonic(static_cast<long>(i) + 1)) / ln;
    return ifwht(spec);
}

// General Norlund average (1/Q_n) sum_{k=0}^{n-1} q_{n-k} D_k with
// Q_n = sum_{k=1}^{n-1} q_k; q[k] is read for k = 1..n-1 (q[0] unused).
template <class S>
GridFunction<S> norlund_kernel(const std::vector<S>& q, std::uint64_t n, int resolution) {
    if (n < 2 || q.size() < n) throw std::domain_error("norlund_kernel: need weights q_1..q_{n-1}");
    if (n > (std::uint64_t(1) << resolution)) throw std::domain_error("norlund_kernel: index above grid bandwidth");
    S Qn = 0;
    for (std::uint64_t k = 1; k < n; ++k) Qn += q[k];
    if (Qn == 0) throw std::domain_error("norlund_kernel: zero weight sum");
    WalshSpectrum<S> spec(resolution);
    // coeffs[i] = sum over k>i of q_{n-k} = q_1 + ... + q_{n-1-i}
    S acc = 0;
    for (std::size_t i = n - 1; i + 1 > 0; --i) {
        acc += q[n - 1 - i];
        spec.coeffs[i] = acc / Qn;
        if (i == 0) break;
    }
    return ifwht(spec);
}

// D_{2^j - k} = D_{2^j} - w_{2^j-1} D_k for 1 <= k <= 2^j, checked exactly.
bool paley_shift_identity_check(int j, std::uint64_t k, int resolution);

// Proof decomposition of the unnormalized kernel l_n F_n = sum_{j=1}^{n-1} D_{n-j}/j
// into h1 + h21 + h22 + h23 + h3, built at resolution |n|+1.
template <class S>
struct KernelDecomposition {
    std::uint64_t n = 0;
    GridFunction<S> h1, h21, h22, h23, h3;
    GridFunction<S> total;  // direct spectral build of sum_j D_{n-j}/j
};

// H1 component at an arbitrary resolution >= |n|+1 (used by the
// decomposition, the witness integrals and the weak-type experiment):
// H1 = w_n sum_{j=2}^{|n|} eps_j(n) l_{n(j-1)} rho_j D_{2^j}.
template <class S>
GridFunction<S> h1_component(std::uint64_t n, int resolution, bool apply_walsh_twist = true);

template <class S>
KernelDecomposition<S> decompose(std::uint64_t n);

// Exact check of the summation-by-parts rewrite
// H1 = w_n sum_j eps_j(n) l_{n(j-1)} (D_{2^{j+1}} - D_{2^j}).
bool h1_closed_form_check(std::uint64_t n);

struct BlockWitness {
    int a = 0, b = 0;            // block [a, b] of consecutive 1-bits
    mpq_class integral_a;        // int over (2^{-a-1}, 2^{-a}) of |H1|
    mpq_class threshold_a;       // l_{n(a-1)} / 4
    mpq_class integral_b;        // int over (2^{-b-2}, 2^{-b-1}) of |H1|
    mpq_class threshold_b;       // l_{n(b-1)} / 4
    bool pass_a = false, pass_b = false;
};

struct LowerBoundWitness {
    std::uint64_t n = 0;
    std::vector<BlockWitness> blocks;  // blocks with a >= 2 only
    mpq_class h1_l1;                   // ||H1||_1
    mpq_class edge_sum;                // sum_k |eps_k - eps_{k+1}| l_{n(k-1)}
    bool pass_total = false;           // ||H1||_1 >= edge_sum / 4
    bool all_pass() const {
        if (!pass_total) return false;
        for (const auto& b : blocks)
            if (!b.pass_a || !b.pass_b) return false;
        return true;
    }
};

// Exact integrals of |H1| over the per-block intervals; computed one level
// below the minimal kernel resolution so the deepest interval is a whole
// union of cells.
LowerBoundWitness lower_bound_witness(std::uint64_t n);

// ||F_n||_1 at resolution |n|+1 (double precision path).
double log_kernel_l1(std::uint64_t n);

// --- implementation -------------------------------------------------------

template <class S>
GridFunction<S> h1_component(std::uint64_t n, int resolution, bool apply_walsh_twist) {
    if (n < 2) throw std::domain_error("h1_component: need n >= 2");
    const int m = order(index_t(static_cast<unsigned long>(n)));
    if (resolution < m + 1) throw std::domain_error("h1_component: resolution below |n|+1");
    GridFunction<S> h1(resolution);
    for (int j = 2; j <= m; ++j) {
        if (!((n >> j) & 1u)) continue;
        const S lval = scalar_traits<S>::harmonic(static_cast<long>(n & ((1uLL << j) - 1)));
        if (lval == 0) continue;
        // D_{2^j} = 2^j on cells < 2^{N-j}; rho_j flips sign on cells with
        // point digit j set (cell bit N-1-j).
        const std::size_t support = std::size_t(1) << (resolution - j);
        const S base = lval * (1L << j);
        for (std::size_t c = 0; c < support; ++c) {
            if ((c >> (resolution - 1 - j)) & 1u)
                h1.values[c] -= base;
            else
                h1.values[c] += base;
        }
    }
    if (apply_walsh_twist) {
        for (std::size_t c = 0; c < h1.size(); ++c)
            if (walsh_sign(n, c, resolution) < 0) h1.values[c] = -h1.values[c];
    }
    return h1;
}

template <class S>
KernelDecomposition<S> decompose(std::uint64_t n) {
    const int m = order(index_t(static_cast<unsigned long>(n)));
    if (n < 4) throw std::domain_error("decompose: need n >= 4 (two binary digits above the units)");
    const int N = m + 1;
    const std::size_t size = std::size_t(1) << N;

    KernelDecomposition<S> dec;
    dec.n = n;
    dec.h1 = h1_component<S>(n, N);
    dec.h21 = GridFunction<S>(N);
    dec.h22 = GridFunction<S>(N);
    dec.h23 = GridFunction<S>(N);
    dec.h3 = GridFunction<S>(N);

    // Suffix products of rademacher signs: after handling level j the array
    // holds prod_{k=j..m} rho_k^{eps_k}, i.e. the factor for level j-1.
    std::vector<int8_t> suffix_sign(size, 1);

    for (int j = m; j >= 2; --j) {
        if ((n >> j) & 1u) {
            const std::uint64_t nj1 = n & ((1uLL << j) - 1);
            const std::size_t support = std::size_t(1) << (N - j);
            const S dval = S(1L << j);
            // h21: D_{2^j} / n(j-1), present only when the truncation is nonzero
            if (nj1 >= 1) {
                const S c21 = dval / static_cast<long>(nj1);
                for (std::size_t c = 0; c < support; ++c)
                    dec.h21.values[c] += suffix_sign[c] > 0 ? c21 : -c21;
            }
            // h22: D_{2^j} * sum_{k=1}^{2^j-1} 1/(k + n(j-1))
            const S c22 = scalar_traits<S>::harmonic(static_cast<long>((1uLL << j) + nj1)) -
                          scalar_traits<S>::harmonic(static_cast<long>(nj1) + 1);
            const S v22 = dval * c22;
            for (std::size_t c = 0; c < support; ++c)
                dec.h22.values[c] += suffix_sign[c] > 0 ? v22 : -v22;
            // h23: -w_{2^j-1} sum_{k=1}^{2^j-1} D_k/(k + n(j-1)), built
            // spectrally at its own bandwidth then upsampled.
            {
                const int rj = j;  // inner spectrum lives below 2^j
                WalshSpectrum<S> spec(rj);
                S acc = 0;
                const std::uint64_t top = (1uLL << j) - 1;
                for (std::uint64_t i = top; i-- > 0;) {
                    // coeffs[i] = sum_{k=i+1}^{2^j-1} 1/(k+nj1)
                    acc += scalar_traits<S>::ratio(1, static_cast<long>(i + 1 + nj1));
                    spec.coeffs[i] = acc;
                }
                GridFunction<S> inner = ifwht(spec);
                const int shift = N - rj;
                const std::uint64_t wmask = top;
                for (std::size_t c = 0; c < size; ++c) {
                    S v = inner.values[c >> shift];
                    const std::uint64_t rc = reverse_bits(c, N);
#if defined(__GNUC__)
                    const bool wneg = __builtin_popcountll(wmask & rc) & 1;
#else
                    bool wneg = false;
                    for (std::uint64_t t = wmask & rc; t; t &= t - 1) wneg = !wneg;
#endif
                    if (!wneg) v = -v;  // minus sign of the h23 term
                    dec.h23.values[c] += suffix_sign[c] > 0 ? v : -v;
                }
            }
            // fold rho_j into the suffix product
            for (std::size_t c = 0; c < size; ++c)
                if ((c >> (N - 1 - j)) & 1u) suffix_sign[c] = -suffix_sign[c];
        }
    }

    // h3: tail kernel sum_{j=1}^{n(1)-1} D_{n(1)-j}/j times prod_{k=2..m} rho_k^{eps_k};
    // n(1) <= 3 so this is at most D_2 + D_1/2.
    const std::uint64_t n1 = n & 3u;
    if (n1 >= 2) {
        GridFunction<S> tail(N);
        // D_{n1-j}/j for j = 1..n1-1
        for (std::uint64_t j = 1; j < n1; ++j) {
            const std::uint64_t k = n1 - j;  // 1 or 2
            const S coeff = scalar_traits<S>::ratio(1, static_cast<long>(j));
            if (k == 1) {
                for (std::size_t c = 0; c < size; ++c) tail.values[c] += coeff;
            } else {
                // D_2 = 1 + w_1 = 2 on the left half
                for (std::size_t c = 0; c < size / 2; ++c) tail.values[c] += coeff * 2L;
            }
        }
        for (std::size_t c = 0; c < size; ++c)
            dec.h3.values[c] = suffix_sign[c] > 0 ? tail.values[c] : -tail.values[c];
    }

    // Direct spectral build of the whole kernel: coeffs[i] = l_{n-i}.
    {
        WalshSpectrum<S> spec(N);
        for (std::size_t i = 0; i < n && i < size; ++i)
            spec.coeffs[i] = scalar_traits<S>::harmonic(static_cast<long>(n - i));
        dec.total = ifwht(spec);
    }
    return dec;
}

// First cell (if any) where the five parts fail to sum to the direct build.
template <class S>
std::optional<std::size_t> decomposition_mismatch(const KernelDecomposition<S>& dec, double tol = 0.0) {
    for (std::size_t c = 0; c < dec.total.size(); ++c) {
        S s = dec.h1.values[c] + dec.h21.values[c] + dec.h22.values[c] + dec.h23.values[c] + dec.h3.values[c];
        if constexpr (std::is_same_v<S, mpq_class>) {
            if (s != dec.total.values[c]) return c;
        } else {
            if (std::abs(s - dec.total.values[c]) > tol) return c;
        }
    }
    return std::nullopt;
}

}  // namespace wlm
