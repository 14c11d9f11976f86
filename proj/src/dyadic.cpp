#include "wlm/dyadic.hpp"

#include <cmath>
#include <mutex>

namespace wlm {

namespace {
constexpr double euler_gamma = 0.57721566490153286060651209;
std::mutex table_mutex;
}  // namespace

harmonic_table::harmonic_table() {
    exact_.reserve(exact_cap + 1);  // never reallocates: returned references stay valid
    exact_.emplace_back(0);  // l_0
    exact_.emplace_back(0);  // l_1
    dense_.resize(dense_cap);
    dense_[0] = dense_[1] = 0.0;
    for (long n = 2; n < dense_cap; ++n) dense_[n] = dense_[n - 1] + 1.0 / static_cast<double>(n - 1);
}

harmonic_table& harmonic_table::instance() {
    static harmonic_table t;
    return t;
}

const mpq_class& harmonic_table::exact(long n) {
    if (n < 0 || n > exact_cap) throw std::domain_error("harmonic_table::exact: index out of range");
    harmonic_table& t = instance();
    std::lock_guard<std::mutex> lock(table_mutex);
    while (static_cast<long>(t.exact_.size()) <= n) {
        const long m = static_cast<long>(t.exact_.size());
        mpq_class next = t.exact_.back() + mpq_class(1, m - 1);
        next.canonicalize();
        t.exact_.push_back(std::move(next));
    }
    return t.exact_[n];
}

double harmonic_table::value(long n) {
    if (n < 2) return 0.0;
    const harmonic_table& t = instance();
    if (n < dense_cap) return t.dense_[n];
    const double m = static_cast<double>(n - 1);  // l_n = H_{n-1}
    return std::log(m) + euler_gamma + 1.0 / (2.0 * m) - 1.0 / (12.0 * m * m) +
           1.0 / (120.0 * m * m * m * m);
}

double harmonic_table::value(const index_t& n) {
    if (n < 2) return 0.0;
    if (n < dense_cap) return value(n.get_si());
    const double m = n.get_d() - 1.0;
    return std::log(m) + euler_gamma + 1.0 / (2.0 * m) - 1.0 / (12.0 * m * m) +
           1.0 / (120.0 * m * m * m * m);
}

}  // namespace wlm
