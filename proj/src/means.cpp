#include "wlm/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlm {

namespace {

GridD identity_sample(int N) {
    GridD f(N);
    const double scale = 1.0 / static_cast<double>(std::size_t(1) << N);
    for (std::size_t c = 0; c < f.size(); ++c) f.values[c] = (static_cast<double>(c) + 0.5) * scale;
    return f;
}

// 1/(k+1) on the shell [2^{-k-1}, 2^{-k}); 1/(N+1) on the leftover cell at 0.
GridD logmod_sample(int N) {
    GridD f(N);
    f.values[0] = 1.0 / (N + 1);
    for (int k = 0; k < N; ++k) {
        const std::size_t lo = std::size_t(1) << (N - 1 - k);
        const std::size_t hi = std::size_t(1) << (N - k);
        for (std::size_t c = lo; c < hi; ++c) f.values[c] = 1.0 / (k + 1);
    }
    return f;
}

template <class S>
GridFunction<S> indicator_sample(int m, int N) {
    if (N < m) throw std::domain_error("indicator: resolution below interval depth");
    GridFunction<S> f(N);
    for (std::size_t c = 0; c < (std::size_t(1) << (N - m)); ++c) f.values[c] = S(1);
    return f;
}

template <class S>
GridFunction<S> walshpoly_sample(int deg, int N) {
    // generic polynomial of degree deg: sum_{i<=deg} w_i / (i+1)
    if ((std::uint64_t(deg) >> N) != 0) throw std::domain_error("walshpoly: resolution below degree");
    WalshSpectrum<S> spec(N);
    for (int i = 0; i <= deg; ++i) spec.coeffs[i] = scalar_traits<S>::ratio(1, i + 1);
    return ifwht(spec);
}

}  // namespace

TestFunction test_function(const std::string& name) {
    const auto colon = name.find(':');
    const std::string base = name.substr(0, colon);
    const int param = colon == std::string::npos ? -1 : std::stoi(name.substr(colon + 1));

    if (base == "constant") {
        return {name, "constant",
                [](int N) {
                    GridD f(N);
                    std::fill(f.values.begin(), f.values.end(), 1.0);
                    return f;
                },
                [](int N) {
                    GridQ f(N);
                    std::fill(f.values.begin(), f.values.end(), mpq_class(1));
                    return f;
                }};
    }
    if (base == "identity") {
        return {name, "lipschitz", identity_sample,
                [](int N) {
                    GridQ f(N);
                    const long den = 1L << (N + 1);
                    for (std::size_t c = 0; c < f.size(); ++c) {
                        mpq_class v(2 * static_cast<long>(c) + 1, den);
                        v.canonicalize();
                        f.values[c] = v;
                    }
                    return f;
                }};
    }
    if (base == "walshpoly") {
        const int deg = param < 0 ? 7 : param;
        return {name, "band-limited", [deg](int N) { return walshpoly_sample<double>(deg, N); },
                [deg](int N) { return walshpoly_sample<mpq_class>(deg, N); }};
    }
    if (base == "indicator") {
        const int m = param < 0 ? 1 : param;
        return {name, "jump", [m](int N) { return indicator_sample<double>(m, N); },
                [m](int N) { return indicator_sample<mpq_class>(m, N); }};
    }
    if (base == "spike") {
        const int m = param < 0 ? 3 : param;
        return {name, "normalized-spike",
                [m](int N) {
                    GridD f = indicator_sample<double>(m, N);
                    const double h = static_cast<double>(std::size_t(1) << m);
                    for (auto& v : f.values) v *= h;
                    return f;
                },
                [m](int N) {
                    GridQ f = indicator_sample<mpq_class>(m, N);
                    for (auto& v : f.values) v *= (1L << m);
                    return f;
                }};
    }
    if (base == "logmod") {
        return {name, "log-modulus", logmod_sample, nullptr};
    }
    throw std::invalid_argument("unknown test function: " + name);
}

std::vector<TestFunction> corpus() {
    std::vector<TestFunction> fns;
    for (const char* n : {"constant", "identity", "walshpoly:7", "indicator:1", "spike:3", "logmod"})
        fns.push_back(test_function(n));
    return fns;
}

std::vector<ErrorPoint> error_curve(const IndexSequence& seq, const TestFunction& f, int A_max) {
    std::vector<ErrorPoint> out;
    for (int A = 1; A <= A_max; ++A) {
        const index_t n = seq.member(A);
        if (n < 2) continue;
        if (!fits_u64(n)) throw std::domain_error("error_curve: member too large for a grid");
        const std::uint64_t nu = to_u64(n);
        const int N = order(n) + 1;
        if (N > 26) throw std::domain_error("error_curve: grid beyond supported resolution");
        const GridD fs = f.sample(N);
        const GridD kernel = norlund_log_kernel<double>(nu, N);
        const GridD Lf = apply_mean(kernel, fs);
        ErrorPoint p;
        p.A = A;
        p.n = n;
        GridD diff = Lf - fs;
        p.error_sup = sup_norm(diff);
        p.error_l1 = l1_norm(diff);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ModulusPoint> modulus(const GridD& f, bool sup_not_l1, int k_max) {
    if (k_max > f.resolution) throw std::domain_error("modulus: k_max beyond resolution");
    const int N = f.resolution;
    const std::size_t size = f.size();
    // per shift-band maxima: band j holds shifts with top cell-bit j,
    // i.e. 2^j <= hc < 2^{j+1}; omega(2^{-k}) needs hc <= 2^{N-k}.
    std::vector<double> band_max(N + 1, 0.0);
    std::vector<double> single(N + 1, 0.0);  // exact shift hc = 2^j
    for (int j = 0; j < N; ++j) {
        const std::size_t lo = std::size_t(1) << j;
        const std::size_t hi = std::size_t(2) << j;
        double bm = 0.0;
#pragma omp parallel for schedule(static) reduction(max : bm) if (size >= (std::size_t(1) << 14))
        for (std::ptrdiff_t hcs = static_cast<std::ptrdiff_t>(lo); hcs < static_cast<std::ptrdiff_t>(hi); ++hcs) {
            const std::size_t hc = static_cast<std::size_t>(hcs);
            double d = 0.0;
            if (sup_not_l1) {
                for (std::size_t c = 0; c < size; ++c) d = std::max(d, std::abs(f.values[c ^ hc] - f.values[c]));
            } else {
                for (std::size_t c = 0; c < size; ++c) d += std::abs(f.values[c ^ hc] - f.values[c]);
                d /= static_cast<double>(size);
            }
            bm = std::max(bm, d);
            if (hc == lo) {
#pragma omp critical
                single[j] = d;
            }
        }
        band_max[j] = bm;
    }
    std::vector<ModulusPoint> out;
    for (int k = 1; k <= k_max; ++k) {
        // shifts hc in [1, 2^{N-k}]: full bands j < N-k plus the single hc = 2^{N-k}
        double m = single[N - k];
        for (int j = 0; j < N - k; ++j) m = std::max(m, band_max[j]);
        out.push_back({k, m});
    }
    return out;
}

std::vector<LebesguePoint> lebesgue_constant_curve(const IndexSequence& seq, int A_max) {
    std::vector<LebesguePoint> out;
    for (int A = 1; A <= A_max; ++A) {
        const index_t n = seq.member(A);
        if (n < 2) continue;
        if (!fits_u64(n)) throw std::domain_error("lebesgue_constant_curve: member too large for a grid");
        if (order(n) + 1 > 26) throw std::domain_error("lebesgue_constant_curve: grid beyond supported resolution");
        LebesguePoint p;
        p.A = A;
        p.n = n;
        p.f_l1 = log_kernel_l1(to_u64(n));
        p.vl_value = vl(n);
        p.ratio = p.f_l1 / (1.0 + p.vl_value);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

double fitted_weak_constant(const GridD& tf, int resolution) {
    // max over dyadic lambda = 2^e of lambda * |{tf > lambda}|
    double best = 0.0;
    for (int e = -6; e <= 2 * resolution; ++e) {
        const double lambda = std::ldexp(1.0, e);
        std::size_t count = 0;
        for (double v : tf.values) count += v > lambda;
        best = std::max(best, lambda * static_cast<double>(count) / static_cast<double>(tf.size()));
    }
    return best;
}

}  // namespace

WeakTypeReport estar_weak_type(int m_max, int resolution) {
    WeakTypeReport rep;
    for (int m = 0; m <= m_max; ++m) {
        const int N = std::max(resolution, m + 1);
        GridD f = test_function("spike:" + std::to_string(m)).sample(N);
        const GridD es = maximal_function(f);
        const double fit = fitted_weak_constant(es, N);  // ||f||_1 = 1
        rep.points.push_back({m, fit});
        rep.fitted_constant = std::max(rep.fitted_constant, fit);
    }
    return rep;
}

WeakTypeReport h1_maximal_weak_type(int m_max, int A_max, int resolution) {
    WeakTypeReport rep;
    const int N = resolution;
    // kernels H1_{m_A} for pow2minus1 members that fit the grid
    std::vector<std::pair<int, SpectrumD>> kernels;
    for (int A = 2; A <= A_max; ++A) {
        const std::uint64_t n = (1uLL << A) - 1;
        if (order(index_t(static_cast<unsigned long>(n))) + 1 > N) break;
        kernels.emplace_back(A, fwht(h1_component<double>(n, N)));
    }
    if (kernels.empty()) throw std::domain_error("h1_maximal_weak_type: no member fits the resolution");
    for (int m = 0; m <= m_max; ++m) {
        if (m + 1 > N) break;
        const GridD f = test_function("spike:" + std::to_string(m)).sample(N);
        const SpectrumD fhat = fwht(f);
        GridD sup(N);
        for (const auto& [A, khat] : kernels) {
            SpectrumD prod(N);
            for (std::size_t i = 0; i < prod.size(); ++i) prod.coeffs[i] = fhat.coeffs[i] * khat.coeffs[i];
            const GridD conv = ifwht(prod);
            const double scale = 1.0 / (A - 1);  // |2^A - 1| = A - 1
            for (std::size_t c = 0; c < sup.size(); ++c)
                sup.values[c] = std::max(sup.values[c], std::abs(conv.values[c]) * scale);
        }
        const double fit = fitted_weak_constant(sup, N);
        rep.points.push_back({m, fit});
        rep.fitted_constant = std::max(rep.fitted_constant, fit);
    }
    return rep;
}

}  // namespace wlm
