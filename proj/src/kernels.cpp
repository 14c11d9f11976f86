#include "wlm/kernels.hpp"

namespace wlm {

bool paley_shift_identity_check(int j, std::uint64_t k, int resolution) {
    if (j < 0 || k < 1 || k > (1uLL << j)) throw std::domain_error("paley_shift_identity_check: need 1 <= k <= 2^j");
    if (resolution < j + 1) throw std::domain_error("paley_shift_identity_check: resolution below j+1");
    const GridQ lhs = dirichlet<mpq_class>((1uLL << j) - k, resolution);
    const GridQ d2j = dirichlet<mpq_class>(1uLL << j, resolution);
    const GridQ dk = dirichlet<mpq_class>(k, resolution);
    const std::uint64_t w = (1uLL << j) - 1;
    for (std::size_t c = 0; c < lhs.size(); ++c) {
        const mpq_class rhs = d2j.values[c] - walsh_sign(w, c, resolution) * dk.values[c];
        if (lhs.values[c] != rhs) return false;
    }
    return true;
}

bool h1_closed_form_check(std::uint64_t n) {
    const int m = order(index_t(static_cast<unsigned long>(n)));
    if (n < 4) throw std::domain_error("h1_closed_form_check: need n >= 4");
    const int N = m + 2;  // room for D_{2^{m+1}}
    const GridQ direct = h1_component<mpq_class>(n, N);
    GridQ alt(N);
    for (int j = 2; j <= m; ++j) {
        if (!((n >> j) & 1u)) continue;
        const mpq_class lval = harmonic_table::exact(static_cast<long>(n & ((1uLL << j) - 1)));
        if (lval == 0) continue;
        const GridQ hi = dirichlet<mpq_class>(1uLL << (j + 1), N);
        const GridQ lo = dirichlet<mpq_class>(1uLL << j, N);
        for (std::size_t c = 0; c < alt.size(); ++c) alt.values[c] += lval * (hi.values[c] - lo.values[c]);
    }
    for (std::size_t c = 0; c < alt.size(); ++c)
        if (walsh_sign(n, c, N) < 0) alt.values[c] = -alt.values[c];
    for (std::size_t c = 0; c < alt.size(); ++c)
        if (alt.values[c] != direct.values[c]) return false;
    return true;
}

LowerBoundWitness lower_bound_witness(std::uint64_t n) {
    const index_t nz(static_cast<unsigned long>(n));
    if (n < 4) throw std::domain_error("lower_bound_witness: need n >= 4");
    const int m = order(nz);
    // One level below the minimal kernel resolution: the deepest interval
    // (2^{-m-2}, 2^{-m-1}) is then a whole union of cells.
    const int N = m + 2;
    const std::size_t size = std::size_t(1) << N;
    // |H1| is unchanged by the unimodular twist; skip it.
    const GridQ h1 = h1_component<mpq_class>(n, N, /*apply_walsh_twist=*/false);

    LowerBoundWitness w;
    w.n = n;
    bool any_eligible = false;
    for (const auto& [a, b] : block_runs(nz)) {
        if (a < 2) continue;
        any_eligible = true;
        BlockWitness bw;
        bw.a = a;
        bw.b = b;
        // shell s = [2^{-s-1}, 2^{-s}) = cells [2^{N-s-1}, 2^{N-s})
        auto shell_integral = [&](int s) {
            mpq_class acc = 0;
            const std::size_t lo = std::size_t(1) << (N - s - 1);
            const std::size_t hi = std::size_t(1) << (N - s);
            for (std::size_t c = lo; c < hi; ++c) acc += abs(h1.values[c]);
            acc /= (1L << N);
            return acc;
        };
        bw.integral_a = shell_integral(a);
        bw.threshold_a = harmonic_table::exact(static_cast<long>(n & ((1uLL << a) - 1))) / 4;
        bw.integral_b = shell_integral(b + 1);
        bw.threshold_b = harmonic_table::exact(static_cast<long>(n & ((1uLL << b) - 1))) / 4;
        bw.pass_a = bw.integral_a >= bw.threshold_a;
        bw.pass_b = bw.integral_b >= bw.threshold_b;
        w.blocks.push_back(std::move(bw));
    }
    if (!any_eligible) throw std::domain_error("lower_bound_witness: no block starts at digit 2 or higher");

    w.h1_l1 = l1_norm(h1);
    w.edge_sum = 0;
    for (int k = 1; k <= m; ++k)
        if (eps(nz, k) != eps(nz, k + 1))
            w.edge_sum += harmonic_table::exact(static_cast<long>(n & ((1uLL << k) - 1)));
    w.pass_total = w.h1_l1 >= w.edge_sum / 4;
    return w;
}

double log_kernel_l1(std::uint64_t n) {
    if (n < 2) throw std::domain_error("log_kernel_l1: need n >= 2");
    const int N = order(index_t(static_cast<unsigned long>(n))) + 1;
    return l1_norm(norlund_log_kernel<double>(n, N));
}

}  // namespace wlm
