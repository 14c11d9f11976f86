#include "wlm/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "wlm/version.hpp"

namespace wlm::io {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_rational(const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

void write_csv(std::ostream& os, const Table& t) {
    for (const std::string& c : t.comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json doc;
    doc["comments"] = t.comments;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << "\n";
}

Table variation_table(const ConditionProfile& profile) {
    Table t;
    t.columns = {"A", "n", "bits", "VS", "VL", "mem_sum", "runmax_VL", "runmax_mem"};
    t.comments = {"VL trend: " + profile.classify_vl(), "mem_sum trend: " + profile.classify_mem()};
    for (const ConditionRow& r : profile.rows)
        t.rows.push_back({std::to_string(r.A), r.n.get_str(), to_binary(r.n), std::to_string(r.vs_value),
                          format_double(r.vl_value), format_double(r.mem_value), format_double(r.running_max_vl),
                          format_double(r.running_max_mem)});
    return t;
}

Table error_table(const std::vector<ErrorPoint>& points) {
    Table t;
    t.columns = {"A", "n", "error_sup", "error_L1"};
    for (const ErrorPoint& p : points)
        t.rows.push_back({std::to_string(p.A), p.n.get_str(), format_double(p.error_sup), format_double(p.error_l1)});
    return t;
}

Table lebesgue_table(const std::vector<LebesguePoint>& points) {
    Table t;
    t.columns = {"A", "n", "F_l1", "VL", "ratio"};
    for (const LebesguePoint& p : points)
        t.rows.push_back({std::to_string(p.A), p.n.get_str(), format_double(p.f_l1), format_double(p.vl_value),
                          format_double(p.ratio)});
    return t;
}

Table kernel_table(const GridQ& kernel) {
    Table t;
    t.columns = {"cell", "value_num", "value_den"};
    for (std::size_t c = 0; c < kernel.size(); ++c)
        t.rows.push_back(
            {std::to_string(c), kernel.values[c].get_num().get_str(), kernel.values[c].get_den().get_str()});
    return t;
}

Table kernel_table(const GridD& kernel) {
    Table t;
    t.columns = {"cell", "value"};
    for (std::size_t c = 0; c < kernel.size(); ++c)
        t.rows.push_back({std::to_string(c), format_double(kernel.values[c])});
    return t;
}

Table sweep_table(const SweepResult& result) {
    Table t;
    t.columns = {"n", "order", "VS", "VL", "F_l1", "ratio", "H1_l1", "H21_l1", "H22_l1", "H23_l1", "H3_l1"};
    t.comments = {"ratio band lower=" + format_double(result.band.lower) + " at n=" + std::to_string(result.band.arg_lower),
                  "ratio band upper=" + format_double(result.band.upper) + " at n=" + std::to_string(result.band.arg_upper),
                  "band spread=" + format_double(result.band.spread())};
    for (const SweepRecord& r : result.records)
        t.rows.push_back({std::to_string(r.n), std::to_string(r.order), std::to_string(r.vs_value),
                          format_double(r.vl_value), format_double(r.f_l1), format_double(r.ratio),
                          format_double(r.h1_l1), format_double(r.h21_l1), format_double(r.h22_l1),
                          format_double(r.h23_l1), format_double(r.h3_l1)});
    return t;
}

std::string manifest_path(const std::string& out_path) {
    std::string base = out_path;
    for (const char* ext : {".csv", ".json"}) {
        const std::size_t n = std::string(ext).size();
        if (base.size() > n && base.compare(base.size() - n, n, ext) == 0) {
            base.resize(base.size() - n);
            break;
        }
    }
    return base + ".manifest.json";
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& config, double wall_ms) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : config) cfg[k] = v;
    doc["config"] = std::move(cfg);
    doc["version"] = version_string;
    doc["output"] = out_path;
    doc["wall_ms"] = wall_ms;
    std::ofstream os(manifest_path(out_path));
    if (!os) throw std::runtime_error("cannot write manifest beside " + out_path);
    os << doc.dump(2) << "\n";
}

}  // namespace wlm::io
