#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "wlm/dyadic.hpp"

namespace wlm {

// Piecewise-constant function on [0,1) at dyadic resolution N: cell c holds
// the value on [c/2^N, (c+1)/2^N).  The binary digits of a point x (MSB
// first) are the bits of its cell index: digit x_j of x = bit N-1-j of c,
// so dyadic addition of points is XOR of cells.
template <class S>
struct GridFunction {
    int resolution = 0;
    std::vector<S> values;

    GridFunction() = default;
    explicit GridFunction(int n) : resolution(n), values(std::size_t(1) << n, S(0)) {
        if (n < 0 || n > 30) throw std::domain_error("GridFunction: resolution out of range");
    }
    std::size_t size() const { return values.size(); }
    S& operator[](std::size_t c) { return values[c]; }
    const S& operator[](std::size_t c) const { return values[c]; }
};

// Walsh spectrum in Paley order: coeffs[i] corresponds to w_i.
template <class S>
struct WalshSpectrum {
    int resolution = 0;
    std::vector<S> coeffs;

    WalshSpectrum() = default;
    explicit WalshSpectrum(int n) : resolution(n), coeffs(std::size_t(1) << n, S(0)) {}
    std::size_t size() const { return coeffs.size(); }
};

using GridD = GridFunction<double>;
using GridQ = GridFunction<mpq_class>;
using SpectrumD = WalshSpectrum<double>;
using SpectrumQ = WalshSpectrum<mpq_class>;

inline std::uint64_t reverse_bits(std::uint64_t c, int width) {
    std::uint64_t r = 0;
    for (int j = 0; j < width; ++j) {
        r = (r << 1) | (c & 1u);
        c >>= 1;
    }
    return r;
}

// Sign of w_i at the point whose cell is c: (-1)^{sum_k i_k x_k} where the
// point digit x_k is cell bit N-1-k, i.e. the pairing is popcount of
// i AND reverse(c).
inline int walsh_sign(std::uint64_t i, std::uint64_t cell, int resolution) {
    const std::uint64_t paired = i & reverse_bits(cell, resolution);
#if defined(__GNUC__)
    return (__builtin_popcountll(paired) & 1) ? -1 : 1;
#else
    int p = 0;
    for (std::uint64_t v = paired; v; v &= v - 1) p ^= 1;
    return p ? -1 : 1;
#endif
}

namespace detail {

// In-place butterfly sweep shared by both transform directions.  Small
// grids skip the OpenMP runtime entirely: per-sweep team entry costs more
// than the whole transform below ~2^16 cells.
template <class S>
void butterfly(std::vector<S>& v) {
    const std::size_t n = v.size();
    if constexpr (std::is_same_v<S, double>) {
        if (n >= (std::size_t(1) << 16)) {
            for (std::size_t h = 1; h < n; h <<= 1) {
                const std::size_t stride = h << 1;
                const std::ptrdiff_t blocks = static_cast<std::ptrdiff_t>(n / stride);
#pragma omp parallel for schedule(static)
                for (std::ptrdiff_t b = 0; b < blocks; ++b) {
                    const std::size_t base = static_cast<std::size_t>(b) * stride;
                    for (std::size_t j = base; j < base + h; ++j) {
                        const S a = v[j];
                        const S c = v[j + h];
                        v[j] = a + c;
                        v[j + h] = a - c;
                    }
                }
            }
            return;
        }
    }
    for (std::size_t h = 1; h < n; h <<= 1) {
        const std::size_t stride = h << 1;
        for (std::size_t base = 0; base < n; base += stride) {
            for (std::size_t j = base; j < base + h; ++j) {
                S a = v[j];
                v[j] += v[j + h];
                v[j + h] = a - v[j + h];
            }
        }
    }
}

template <class S>
std::vector<S> reversed_gather(const std::vector<S>& v, int width) {
    std::vector<S> out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) out[c] = v[reverse_bits(c, width)];
    return out;
}

}  // namespace detail

// Forward transform: coeffs[i] = 2^{-N} sum_c f(c) * walsh_sign(i, c).
// The MSB-first cell convention together with Paley coefficient order makes
// the pairing matrix H_N conjugated by bit reversal, hence the gather.
template <class S>
WalshSpectrum<S> fwht(const GridFunction<S>& f) {
    WalshSpectrum<S> out(f.resolution);
    out.coeffs = detail::reversed_gather(f.values, f.resolution);
    detail::butterfly(out.coeffs);
    const long scale = 1L << f.resolution;
    for (S& x : out.coeffs) x /= scale;
    return out;
}

template <class S>
GridFunction<S> ifwht(const WalshSpectrum<S>& spec) {
    GridFunction<S> out(spec.resolution);
    out.values = spec.coeffs;
    detail::butterfly(out.values);
    out.values = detail::reversed_gather(out.values, spec.resolution);
    return out;
}

// Deterministic L1 norm: fixed-size block partial sums accumulated in block
// order, so the result is independent of thread count.
inline double l1_norm(const GridD& f) {
    constexpr std::size_t block = 4096;
    const std::size_t n = f.size();
    const std::size_t nblocks = (n + block - 1) / block;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static) if (n >= (std::size_t(1) << 16))
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        double s = 0.0;
        const std::size_t lo = static_cast<std::size_t>(b) * block;
        const std::size_t hi = lo + block < n ? lo + block : n;
        for (std::size_t c = lo; c < hi; ++c) s += std::abs(f.values[c]);
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total / static_cast<double>(n);
}

inline mpq_class l1_norm(const GridQ& f) {
    mpq_class total = 0;
    for (const mpq_class& v : f.values) total += abs(v);
    total /= (1L << f.resolution);
    return total;
}

inline double sup_norm(const GridD& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

inline mpq_class sup_norm(const GridQ& f) {
    mpq_class m = 0;
    for (const mpq_class& v : f.values) {
        mpq_class a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

template <class S>
S integral(const GridFunction<S>& f) {
    S total = 0;
    for (const S& v : f.values) total += v;
    total /= (1L << f.resolution);
    return total;
}

// Duplicate cells up to a finer resolution; represents the same function.
template <class S>
GridFunction<S> refine(const GridFunction<S>& f, int new_resolution) {
    if (new_resolution < f.resolution) throw std::domain_error("refine: target resolution coarser than source");
    if (new_resolution == f.resolution) return f;
    GridFunction<S> out(new_resolution);
    const int shift = new_resolution - f.resolution;
    for (std::size_t c = 0; c < out.size(); ++c) out.values[c] = f.values[c >> shift];
    return out;
}

// (f * g)(x) = 2^{-N} sum_t f(t) g(x XOR t), via pointwise spectra.
template <class S>
GridFunction<S> xor_convolve(const GridFunction<S>& f, const GridFunction<S>& g) {
    if (f.resolution != g.resolution) throw std::domain_error("xor_convolve: resolution mismatch");
    WalshSpectrum<S> a = fwht(f);
    const WalshSpectrum<S> b = fwht(g);
    for (std::size_t i = 0; i < a.size(); ++i) a.coeffs[i] *= b.coeffs[i];
    return ifwht(a);
}

template <class S>
GridFunction<S> operator+(GridFunction<S> f, const GridFunction<S>& g) {
    if (f.resolution != g.resolution) throw std::domain_error("grid +: resolution mismatch");
    for (std::size_t c = 0; c < f.size(); ++c) f.values[c] += g.values[c];
    return f;
}

template <class S>
GridFunction<S> operator-(GridFunction<S> f, const GridFunction<S>& g) {
    if (f.resolution != g.resolution) throw std::domain_error("grid -: resolution mismatch");
    for (std::size_t c = 0; c < f.size(); ++c) f.values[c] -= g.values[c];
    return f;
}

template <class S>
GridFunction<S> operator*(GridFunction<S> f, const S& s) {
    for (std::size_t c = 0; c < f.size(); ++c) f.values[c] *= s;
    return f;
}

}  // namespace wlm
