#include "wlm/variation.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlm {

long vs(const index_t& n) {
    if (n <= 0) return 0;
    const int m = order(n);
    long s = eps(n, 0);
    for (int i = 0; i <= m; ++i) s += std::abs(eps(n, i) - eps(n, i + 1));
    return s;
}

namespace {

template <class Acc, class Harmonic>
Acc edge_weighted_sum(const index_t& n, bool edges_only, Harmonic&& l_of) {
    const int m = order(n);
    Acc acc = 0;
    for (int k = 1; k <= m; ++k) {
        const bool take = edges_only ? eps(n, k) != eps(n, k + 1) : eps(n, k) == 1;
        if (take) acc += l_of(trunc_index(n, k - 1));
    }
    return acc;
}

}  // namespace

double vl(const index_t& n) {
    if (n < 2) throw std::domain_error("vl: need n >= 2");
    const int m = order(n);
    return edge_weighted_sum<double>(n, true, [](const index_t& t) { return harmonic_l(t); }) / m;
}

mpq_class vl_exact(const index_t& n) {
    if (n < 2) throw std::domain_error("vl_exact: need n >= 2");
    const int m = order(n);
    mpq_class acc = edge_weighted_sum<mpq_class>(n, true, [](const index_t& t) {
        if (t > harmonic_table::exact_cap) throw std::domain_error("vl_exact: truncation beyond exact table");
        return harmonic_table::exact(t.get_si());
    });
    acc /= m;
    return acc;
}

double mem_sum(const index_t& n) {
    if (n < 2) throw std::domain_error("mem_sum: need n >= 2");
    const int m = order(n);
    return edge_weighted_sum<double>(n, false, [](const index_t& t) { return harmonic_l(t); }) / m;
}

mpq_class mem_sum_exact(const index_t& n) {
    if (n < 2) throw std::domain_error("mem_sum_exact: need n >= 2");
    const int m = order(n);
    mpq_class acc = edge_weighted_sum<mpq_class>(n, false, [](const index_t& t) {
        if (t > harmonic_table::exact_cap) throw std::domain_error("mem_sum_exact: truncation beyond exact table");
        return harmonic_table::exact(t.get_si());
    });
    acc /= m;
    return acc;
}

IndexSequence sequence(const std::string& name) {
    if (name == "pow2") {
        return {"pow2", [](int A) {
                    index_t n = 1;
                    n <<= A;
                    return n;
                }};
    }
    if (name == "pow2minus1") {
        return {"pow2minus1", [](int A) {
                    index_t n = 1;
                    n <<= A;
                    return index_t(n - 1);
                }};
    }
    if (name == "konyagin") {
        return {"konyagin", [](int A) {
                    index_t geom = 0;  // sum_{i=0}^{A} 4^i
                    for (int i = 0; i <= A; ++i) {
                        index_t p = 1;
                        p <<= 2 * i;
                        geom += p;
                    }
                    index_t n = geom << (A * A);
                    // generator self-checks: k_A = |n_A| + 1 and 2^{k_A} | n_{A+1}
                    const int kA = order(n) + 1;
                    if (kA != A * A + 2 * A + 1) throw std::logic_error("konyagin: order drifted from A^2 + 2A");
                    if (A >= 1 && (A + 1) * (A + 1) < kA) throw std::logic_error("konyagin: next member not divisible by 2^{k_A}");
                    return n;
                }};
    }
    if (name == "alternating") {
        return {"alternating", [](int A) {
                    if (A <= 1) return index_t(1);  // degenerate seed, below every usable index
                    const int P = (A * A + 5) / 6;  // ceil(A^2/6)
                    index_t n = 0;
                    for (int j = P; j >= 0; j -= 2) mpz_setbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(j));
                    return n;
                }};
    }
    throw std::invalid_argument("unknown sequence: " + name);
}

std::vector<std::string> sequence_names() { return {"pow2", "pow2minus1", "konyagin", "alternating"}; }

int first_usable_A(const IndexSequence& seq) {
    for (int A = 1; A <= 64; ++A)
        if (seq.member(A) >= 2) return A;
    throw std::logic_error("sequence has no usable member");
}

ConditionProfile condition_profile(const IndexSequence& seq, int A_max) {
    if (A_max < 1) throw std::domain_error("condition_profile: A_max must be >= 1");
    ConditionProfile out;
    double max_vl = 0.0, max_mem = 0.0;
    for (int A = 1; A <= A_max; ++A) {
        const index_t n = seq.member(A);
        if (n < 2) continue;
        ConditionRow row;
        row.A = A;
        row.n = n;
        row.vs_value = vs(n);
        row.vl_value = vl(n);
        row.mem_value = mem_sum(n);
        max_vl = std::max(max_vl, row.vl_value);
        max_mem = std::max(max_mem, row.mem_value);
        row.running_max_vl = max_vl;
        row.running_max_mem = max_mem;
        out.rows.push_back(std::move(row));
    }
    const std::size_t q = std::max<std::size_t>(1, out.rows.size() / 4);
    auto quarter_max = [&](bool tail, auto&& proj) {
        double m = 0.0;
        const std::size_t lo = tail ? out.rows.size() - q : 0;
        const std::size_t hi = tail ? out.rows.size() : q;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, proj(out.rows[i]));
        return m;
    };
    if (!out.rows.empty()) {
        auto vl_of = [](const ConditionRow& r) { return r.vl_value; };
        auto mem_of = [](const ConditionRow& r) { return r.mem_value; };
        out.vl_growing = quarter_max(true, vl_of) > 1.5 * quarter_max(false, vl_of);
        out.mem_growing = quarter_max(true, mem_of) > 1.5 * quarter_max(false, mem_of);
    }
    return out;
}

}  // namespace wlm
