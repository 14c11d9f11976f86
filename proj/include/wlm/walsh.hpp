#pragma once

// Walsh-Paley system on the grid: evaluation, coefficients, partial sums,
// conditional expectations and the dyadic maximal function.

#include <algorithm>

#include "wlm/grid.hpp"

namespace wlm {

// rho_j(x) = (-1)^{x_j}; point digit x_j is cell bit N-1-j.
inline int rademacher_sign(int j, std::uint64_t cell, int resolution) {
    if (j < 0 || j >= resolution) throw std::domain_error("rademacher_sign: digit index out of range");
    return (cell >> (resolution - 1 - j)) & 1u ? -1 : 1;
}

template <class S>
GridFunction<S> rademacher(int j, int resolution) {
    GridFunction<S> out(resolution);
    for (std::size_t c = 0; c < out.size(); ++c) out.values[c] = S(rademacher_sign(j, c, resolution));
    return out;
}

template <class S>
GridFunction<S> walsh_function(std::uint64_t i, int resolution) {
    if (i >> resolution != 0) throw std::domain_error("walsh_function: index needs a finer resolution");
    GridFunction<S> out(resolution);
    for (std::size_t c = 0; c < out.size(); ++c) out.values[c] = S(walsh_sign(i, c, resolution));
    return out;
}

template <class S>
WalshSpectrum<S> coefficients(const GridFunction<S>& f) {
    return fwht(f);
}

// S_M f = sum_{i<M} fhat(i) w_i.
template <class S>
GridFunction<S> partial_sum(const GridFunction<S>& f, std::uint64_t M) {
    WalshSpectrum<S> spec = fwht(f);
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (i >= M) spec.coeffs[i] = S(0);
    return ifwht(spec);
}

// E_n f: average of f over each dyadic interval of length 2^{-n}.
template <class S>
GridFunction<S> dyadic_expectation(const GridFunction<S>& f, int n) {
    if (n < 0 || n > f.resolution) throw std::domain_error("dyadic_expectation: level out of range");
    GridFunction<S> out(f.resolution);
    const std::size_t block = std::size_t(1) << (f.resolution - n);
    for (std::size_t base = 0; base < f.size(); base += block) {
        S avg = 0;
        for (std::size_t c = base; c < base + block; ++c) avg += f.values[c];
        avg /= static_cast<long>(block);
        for (std::size_t c = base; c < base + block; ++c) out.values[c] = avg;
    }
    return out;
}

// E* f = max_{0 <= n <= N} E_n |f|.  On a resolution-N grid E_n|f| = |f| for
// n >= N, so the truncated max equals the full supremum for grid data.
inline GridD maximal_function(const GridD& f) {
    GridD absf(f.resolution);
    for (std::size_t c = 0; c < f.size(); ++c) absf.values[c] = std::abs(f.values[c]);
    GridD best = absf;
    for (int n = 0; n < f.resolution; ++n) {
        GridD e = dyadic_expectation(absf, n);
        for (std::size_t c = 0; c < f.size(); ++c) best.values[c] = std::max(best.values[c], e.values[c]);
    }
    return best;
}

}  // namespace wlm
