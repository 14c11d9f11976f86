#pragma once

// Naive / serial reference implementations.  Deliberately simple: these are
// the oracles the fast paths are tested against, and the baselines the
// benchmarks compare with.

#include "wlm/grid.hpp"

namespace wlm::ref {

// O(4^N) transform straight from the definition.
template <class S>
WalshSpectrum<S> naive_walsh_transform(const GridFunction<S>& f) {
    const std::size_t n = f.size();
    WalshSpectrum<S> out(f.resolution);
    for (std::size_t i = 0; i < n; ++i) {
        S acc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (walsh_sign(i, c, f.resolution) > 0)
                acc += f.values[c];
            else
                acc -= f.values[c];
        }
        acc /= static_cast<long>(n);
        out.coeffs[i] = acc;
    }
    return out;
}

template <class S>
GridFunction<S> naive_synthesis(const WalshSpectrum<S>& spec) {
    const std::size_t n = spec.size();
    GridFunction<S> out(spec.resolution);
    for (std::size_t c = 0; c < n; ++c) {
        S acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (walsh_sign(i, c, spec.resolution) > 0)
                acc += spec.coeffs[i];
            else
                acc -= spec.coeffs[i];
        }
        out.values[c] = acc;
    }
    return out;
}

template <class S>
GridFunction<S> naive_xor_convolve(const GridFunction<S>& f, const GridFunction<S>& g) {
    if (f.resolution != g.resolution) throw std::domain_error("naive_xor_convolve: resolution mismatch");
    const std::size_t n = f.size();
    GridFunction<S> out(f.resolution);
    for (std::size_t x = 0; x < n; ++x) {
        S acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += f.values[t] * g.values[x ^ t];
        acc /= static_cast<long>(n);
        out.values[x] = acc;
    }
    return out;
}

// D_n = sum_{k<n} w_k summed pointwise from the definition.
template <class S>
GridFunction<S> naive_dirichlet(std::uint64_t n, int resolution) {
    GridFunction<S> out(resolution);
    for (std::size_t c = 0; c < out.size(); ++c) {
        long acc = 0;
        for (std::uint64_t k = 0; k < n; ++k) acc += walsh_sign(k, c, resolution);
        out.values[c] = acc;
    }
    return out;
}

// sum_k c_k D_k with the coefficient list applied term by term.
template <class S>
GridFunction<S> naive_kernel_sum(const std::vector<std::pair<std::uint64_t, S>>& terms, int resolution) {
    GridFunction<S> out(resolution);
    for (const auto& [k, coeff] : terms) {
        GridFunction<S> d = naive_dirichlet<S>(k, resolution);
        for (std::size_t c = 0; c < out.size(); ++c) out.values[c] += coeff * d.values[c];
    }
    return out;
}

// Serial butterfly transform (no OpenMP), for benchmark comparison.
inline SpectrumD fwht_serial(const GridD& f) {
    SpectrumD out(f.resolution);
    out.coeffs = detail::reversed_gather(f.values, f.resolution);
    const std::size_t n = out.coeffs.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t base = 0; base < n; base += h << 1) {
            for (std::size_t j = base; j < base + h; ++j) {
                const double a = out.coeffs[j];
                const double b = out.coeffs[j + h];
                out.coeffs[j] = a + b;
                out.coeffs[j + h] = a - b;
            }
        }
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (double& x : out.coeffs) x *= scale;
    return out;
}

}  // namespace wlm::ref
