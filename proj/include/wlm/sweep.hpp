#pragma once

// Batch evaluation of the two-sided kernel estimate: for each index n the
// ratio ||F_n||_1 / (1 + V_L(n)) together with the L1 mass of every part of
// the proof decomposition.

#include <cstdint>
#include <vector>

#include "wlm/dyadic.hpp"

namespace wlm {

struct SweepRecord {
    std::uint64_t n = 0;
    int order = 0;
    long vs_value = 0;
    double vl_value = 0.0;
    double f_l1 = 0.0;   // ||F_n||_1 at resolution |n|+1
    double ratio = 0.0;  // f_l1 / (1 + vl)
    // L1 norms of the parts of the unnormalized kernel l_n F_n.
    double h1_l1 = 0.0;
    double h21_l1 = 0.0;
    double h22_l1 = 0.0;
    double h23_l1 = 0.0;
    double h3_l1 = 0.0;
};

struct SweepBand {
    double lower = 0.0;  // smallest ratio seen
    double upper = 0.0;  // largest ratio seen
    std::uint64_t arg_lower = 0;
    std::uint64_t arg_upper = 0;
    double spread() const { return lower > 0.0 ? upper / lower : 0.0; }
};

struct SweepResult {
    std::vector<SweepRecord> records;  // sorted by n, no duplicates
    SweepBand band;
};

SweepRecord sweep_record(std::uint64_t n);

// Indices for a sweep: the whole range [nmin, nmax] plus the members of the
// pow2minus1, alternating and two-bit (2^a + 2^b) families up to family_cap.
std::vector<std::uint64_t> sweep_indices(std::uint64_t nmin, std::uint64_t nmax, std::uint64_t family_cap);

SweepResult theorem1_sweep(std::uint64_t nmin, std::uint64_t nmax, std::uint64_t family_cap);

}  // namespace wlm
