// Batch front end: identity verification, kernel sweeps, variation and
// convergence tables, kernel dumps, and the acceptance gate.
//
// Exit codes: 0 success, 1 a verification or acceptance check failed,
// 2 usage or range error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "wlm/acceptance.hpp"
#include "wlm/io.hpp"
#include "wlm/kernels.hpp"
#include "wlm/means.hpp"
#include "wlm/sweep.hpp"
#include "wlm/variation.hpp"
#include "wlm/version.hpp"

namespace {

using wlm::io::Table;

struct OutputSink {
    std::string path;    // empty = stdout
    std::string format;  // csv | json
};

// Emit the table, then (for file output) a manifest carrying the config echo
// and the wall time, which deliberately stay out of the data file.
void emit(const Table& table, const OutputSink& sink, const std::string& command,
          const std::vector<std::pair<std::string, std::string>>& config, double wall_ms) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!sink.path.empty()) {
        file.open(sink.path);
        if (!file) throw std::runtime_error("cannot open output file " + sink.path);
        os = &file;
    }
    if (sink.format == "json")
        wlm::io::write_json(*os, table);
    else
        wlm::io::write_csv(*os, table);
    if (!sink.path.empty()) wlm::io::write_manifest(sink.path, command, config, wall_ms);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_verify(std::uint64_t nmin, std::uint64_t nmax, const std::string& mode, bool inject_fault) {
    if (nmin < 4 || nmax < nmin) {
        std::cerr << "range error: need 4 <= nmin <= nmax (decomposition undefined below 4)\n";
        return 2;
    }
    for (int j = 1; j <= 6; ++j)
        for (std::uint64_t k = 1; k < (1uLL << j); ++k)
            if (!wlm::paley_shift_identity_check(j, k, j + 1)) {
                std::cout << "FAIL shift identity at j=" << j << " k=" << k << "\n";
                return 1;
            }
    for (std::uint64_t n = nmin; n <= nmax; ++n) {
        std::optional<std::size_t> bad;
        if (mode == "double") {
            auto dec = wlm::decompose<double>(n);
            if (inject_fault && n == nmin) dec.h22.values[0] += 1e-3;
            bad = wlm::decomposition_mismatch(dec, 1e-9);
        } else {
            auto dec = wlm::decompose<mpq_class>(n);
            if (inject_fault && n == nmin) dec.h22.values[0] += 1;
            bad = wlm::decomposition_mismatch(dec);
        }
        if (bad) {
            std::cout << "FAIL decomposition identity at n=" << n << " cell=" << *bad << "\n";
            return 1;
        }
        if (!wlm::h1_closed_form_check(n)) {
            std::cout << "FAIL H1 closed form at n=" << n << "\n";
            return 1;
        }
    }
    std::cout << "OK identities verified for " << (nmax - nmin + 1) << " indices in [" << nmin << ", " << nmax
              << "], mode=" << mode << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh-Fourier logarithmic means toolkit"};
    app.set_version_flag("--version", std::string(wlm::version_string));
    app.require_subcommand(1);
    app.fallthrough();  // --jobs may follow the subcommand

    int jobs = 0;
    app.add_option("--jobs", jobs, "OpenMP thread count (0 = runtime default)");

    // shared option storage; each subcommand binds the subset it uses
    std::uint64_t nmin = 4, nmax = 512, nval = 8;
    int amax = 12, res = -1;
    std::string seq = "pow2minus1", fn = "identity", norm = "sup", mode = "exact", kernel = "norlund-log";
    OutputSink sink{"", "csv"};
    bool inject_fault = false;

    auto add_sink = [&](CLI::App* cmd) {
        cmd->add_option("--out", sink.path, "write the table to this file (stdout otherwise)");
        cmd->add_option("--format", sink.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* verify = app.add_subcommand("verify-identities", "check the kernel decomposition cell by cell");
    verify->add_option("--nmin", nmin, "first index (>= 4)");
    verify->add_option("--nmax", nmax, "last index");
    verify->add_option("--mode", mode, "exact or double")->check(CLI::IsMember({"exact", "double"}));
    verify->add_flag("--inject-fault", inject_fault)->group("");  // exercises the failure path

    CLI::App* sweep = app.add_subcommand("theorem1-sweep", "ratio ||F_n||_1 / (1 + V_L) over a range plus families");
    sweep->add_option("--nmin", nmin, "range start (>= 4)");
    sweep->add_option("--nmax", nmax, "range end");
    add_sink(sweep);

    CLI::App* variation = app.add_subcommand("variation", "V_S / V_L / membership sums along a family");
    variation->add_option("--seq", seq, "family name")->check(CLI::IsMember(wlm::sequence_names()));
    variation->add_option("--amax", amax, "last family parameter");
    add_sink(variation);

    CLI::App* converge = app.add_subcommand("converge", "approximation error of the means along a family");
    converge->add_option("--seq", seq, "family name")->check(CLI::IsMember(wlm::sequence_names()));
    converge->add_option("--amax", amax, "last family parameter");
    converge->add_option("--fn", fn, "test function, e.g. identity, logmod, walshpoly:5");
    converge->add_option("--norm", norm, "norm quoted in the summary line")->check(CLI::IsMember({"sup", "l1"}));
    add_sink(converge);

    CLI::App* lebesgue = app.add_subcommand("lebesgue", "L1 kernel norms against 1 + V_L along a family");
    lebesgue->add_option("--seq", seq, "family name")->check(CLI::IsMember(wlm::sequence_names()));
    lebesgue->add_option("--amax", amax, "last family parameter");
    add_sink(lebesgue);

    CLI::App* dump = app.add_subcommand("kernel-dump", "cell values of a single kernel");
    dump->add_option("--kernel", kernel, "dirichlet, fejer, norlund-log or riesz-log")
        ->check(CLI::IsMember({"dirichlet", "fejer", "norlund-log", "riesz-log"}));
    dump->add_option("--n", nval, "kernel index");
    dump->add_option("--res", res, "grid resolution (default |n|+1)");
    dump->add_option("--mode", mode, "exact or double")->check(CLI::IsMember({"exact", "double"}));
    add_sink(dump);

    CLI::App* gate = app.add_subcommand("acceptance", "run the acceptance gate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        const auto t0 = std::chrono::steady_clock::now();

        if (verify->parsed()) return run_verify(nmin, nmax, mode, inject_fault);

        if (sweep->parsed()) {
            if (nmin < 4 || nmax < nmin) {
                std::cerr << "range error: need 4 <= nmin <= nmax\n";
                return 2;
            }
            const wlm::SweepResult result = wlm::theorem1_sweep(nmin, nmax, 4096);
            emit(wlm::io::sweep_table(result), sink, "theorem1-sweep",
                 {{"nmin", std::to_string(nmin)}, {"nmax", std::to_string(nmax)}, {"family_cap", "4096"}},
                 elapsed_ms(t0));
            std::cerr << "ratio band [" << wlm::io::format_double(result.band.lower) << ", "
                      << wlm::io::format_double(result.band.upper) << "] over " << result.records.size()
                      << " indices\n";
            return 0;
        }

        if (variation->parsed()) {
            const auto profile = wlm::condition_profile(wlm::sequence(seq), amax);
            emit(wlm::io::variation_table(profile), sink, "variation",
                 {{"seq", seq}, {"amax", std::to_string(amax)}}, elapsed_ms(t0));
            std::cerr << "V_L " << profile.classify_vl() << ", mem_sum " << profile.classify_mem() << " over "
                      << profile.rows.size() << " members\n";
            return 0;
        }

        if (converge->parsed()) {
            const auto curve = wlm::error_curve(wlm::sequence(seq), wlm::test_function(fn), amax);
            emit(wlm::io::error_table(curve), sink, "converge",
                 {{"seq", seq}, {"amax", std::to_string(amax)}, {"fn", fn}, {"norm", norm}}, elapsed_ms(t0));
            if (!curve.empty()) {
                const double last = norm == "l1" ? curve.back().error_l1 : curve.back().error_sup;
                std::cerr << "final " << norm << " error " << wlm::io::format_double(last) << " at A="
                          << curve.back().A << "\n";
            }
            return 0;
        }

        if (lebesgue->parsed()) {
            const auto curve = wlm::lebesgue_constant_curve(wlm::sequence(seq), amax);
            emit(wlm::io::lebesgue_table(curve), sink, "lebesgue",
                 {{"seq", seq}, {"amax", std::to_string(amax)}}, elapsed_ms(t0));
            if (!curve.empty())
                std::cerr << "||F||_1 from " << wlm::io::format_double(curve.front().f_l1) << " to "
                          << wlm::io::format_double(curve.back().f_l1) << "\n";
            return 0;
        }

        if (dump->parsed()) {
            if (nval < 1) {
                std::cerr << "range error: kernel index must be >= 1\n";
                return 2;
            }
            const int N = res >= 0 ? res : wlm::order(wlm::index_t(static_cast<unsigned long>(nval))) + 1;
            const auto config = std::vector<std::pair<std::string, std::string>>{
                {"kernel", kernel}, {"n", std::to_string(nval)}, {"res", std::to_string(N)}, {"mode", mode}};
            auto build = [&](auto tag) {
                using S = decltype(tag);
                if (kernel == "dirichlet") return wlm::dirichlet<S>(nval, N);
                if (kernel == "fejer") return wlm::fejer<S>(nval, N);
                if (kernel == "riesz-log") return wlm::riesz_log_kernel<S>(nval, N);
                return wlm::norlund_log_kernel<S>(nval, N);
            };
            if (mode == "double")
                emit(wlm::io::kernel_table(build(double{})), sink, "kernel-dump", config, elapsed_ms(t0));
            else
                emit(wlm::io::kernel_table(build(mpq_class{})), sink, "kernel-dump", config, elapsed_ms(t0));
            return 0;
        }

        if (gate->parsed()) {
            const int failures = wlm::acceptance::report(std::cout);
            std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) + " criteria)"
                                   : "ACCEPTANCE: PASS (10 criteria)")
                      << "\n";
            return failures ? 1 : 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
