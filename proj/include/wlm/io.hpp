#pragma once

// Table output shared by the CLI subcommands.  Every cell is formatted once
// (floats via %.12g, rationals as p/q) so csv and json renderings of the same
// run are byte-identical across thread counts.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wlm/grid.hpp"
#include "wlm/means.hpp"
#include "wlm/sweep.hpp"
#include "wlm/variation.hpp"

namespace wlm::io {

std::string format_double(double v);
std::string format_rational(const mpq_class& v);

struct Table {
    std::vector<std::string> comments;                // "# ..." lines before the header
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

Table variation_table(const ConditionProfile& profile);
Table error_table(const std::vector<ErrorPoint>& points);
Table lebesgue_table(const std::vector<LebesguePoint>& points);
Table kernel_table(const GridQ& kernel);
Table kernel_table(const GridD& kernel);
Table sweep_table(const SweepResult& result);

// Run manifest written next to the data file (config echo, version, timing —
// timing lives here so the data files stay reproducible byte for byte).
std::string manifest_path(const std::string& out_path);
void write_manifest(const std::string& out_path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config, double wall_ms);

}  // namespace wlm::io
