#include "wlm/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlm/kernels.hpp"
#include "wlm/variation.hpp"

namespace wlm {

SweepRecord sweep_record(std::uint64_t n) {
    if (n < 4) throw std::domain_error("sweep_record: need n >= 4");
    const index_t nz(static_cast<unsigned long>(n));
    const auto dec = decompose<double>(n);
    const double ln = harmonic_l(static_cast<long>(n));

    SweepRecord r;
    r.n = n;
    r.order = order(nz);
    r.vs_value = vs(nz);
    r.vl_value = vl(nz);
    r.f_l1 = l1_norm(dec.total) / ln;
    r.ratio = r.f_l1 / (1.0 + r.vl_value);
    r.h1_l1 = l1_norm(dec.h1);
    r.h21_l1 = l1_norm(dec.h21);
    r.h22_l1 = l1_norm(dec.h22);
    r.h23_l1 = l1_norm(dec.h23);
    r.h3_l1 = l1_norm(dec.h3);
    return r;
}

std::vector<std::uint64_t> sweep_indices(std::uint64_t nmin, std::uint64_t nmax, std::uint64_t family_cap) {
    if (nmin < 4) nmin = 4;
    if (nmax < nmin) throw std::domain_error("sweep_indices: empty range");
    std::vector<std::uint64_t> idx;
    for (std::uint64_t n = nmin; n <= nmax; ++n) idx.push_back(n);
    for (const char* fam : {"pow2minus1", "alternating"}) {
        const IndexSequence seq = sequence(fam);
        for (int A = 1; A <= 64; ++A) {
            const index_t n = seq.member(A);
            if (n > static_cast<long>(family_cap)) break;
            if (n >= 4) idx.push_back(to_u64(n));
        }
    }
    for (int a = 2; (std::uint64_t(1) << a) + 1 <= family_cap && a < 63; ++a)
        for (int b = 0; b < a; ++b) {
            const std::uint64_t n = (std::uint64_t(1) << a) + (std::uint64_t(1) << b);
            if (n >= 4 && n <= family_cap) idx.push_back(n);
        }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

SweepResult theorem1_sweep(std::uint64_t nmin, std::uint64_t nmax, std::uint64_t family_cap) {
    const std::vector<std::uint64_t> idx = sweep_indices(nmin, nmax, family_cap);
    SweepResult out;
    out.records.resize(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(idx.size()); ++i)
        out.records[static_cast<std::size_t>(i)] = sweep_record(idx[static_cast<std::size_t>(i)]);

    // serial reduction so ties resolve to the smallest index
    SweepBand band;
    for (const SweepRecord& r : out.records) {
        if (band.arg_lower == 0 || r.ratio < band.lower) {
            band.lower = r.ratio;
            band.arg_lower = r.n;
        }
        if (band.arg_upper == 0 || r.ratio > band.upper) {
            band.upper = r.ratio;
            band.arg_upper = r.n;
        }
    }
    out.band = band;
    return out;
}

}  // namespace wlm
