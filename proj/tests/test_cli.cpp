#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef WLM_CLI_PATH
#error "WLM_CLI_PATH must point at the built command-line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WLM_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "wlm_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("identity verification: success, range error, injected fault") {
    CHECK(run_cli("verify-identities --nmin 4 --nmax 48").exit_code == 0);
    CHECK(run_cli("verify-identities --nmin 4 --nmax 48 --mode double").exit_code == 0);

    const RunResult range = run_cli("verify-identities --nmin 2 --nmax 3");
    CHECK(range.exit_code == 2);
    CHECK(range.output.find("range error") != std::string::npos);

    const RunResult fault = run_cli("verify-identities --nmin 17 --nmax 20 --inject-fault");
    CHECK(fault.exit_code == 1);
    CHECK(fault.output.find("n=17") != std::string::npos);
    CHECK(fault.output.find("cell=0") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical across thread counts") {
    const fs::path dir = scratch_dir();
    const fs::path a = dir / "sweep_j1.csv";
    const fs::path b = dir / "sweep_j4.csv";
    CHECK(run_cli("theorem1-sweep --nmin 4 --nmax 96 --jobs 1 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("theorem1-sweep --nmin 4 --nmax 96 --jobs 4 --out " + b.string()).exit_code == 0);
    const std::string ca = slurp(a), cb = slurp(b);
    REQUIRE(!ca.empty());
    CHECK(ca == cb);
    CHECK(ca.find("ratio band") != std::string::npos);
    CHECK(ca.find("n,order,VS,VL,F_l1,ratio") != std::string::npos);

    // manifest sits beside the data file and echoes the run configuration
    const std::string manifest = slurp(dir / "sweep_j1.manifest.json");
    CHECK(manifest.find("\"command\": \"theorem1-sweep\"") != std::string::npos);
    CHECK(manifest.find("\"nmax\": \"96\"") != std::string::npos);
    CHECK(manifest.find("wall_ms") != std::string::npos);
}

TEST_CASE("kernel dump emits exact rationals") {
    const fs::path out = scratch_dir() / "kernel4.csv";
    CHECK(run_cli("kernel-dump --kernel norlund-log --n 4 --res 3 --mode exact --out " + out.string()).exit_code == 0);
    const std::string content = slurp(out);
    CHECK(content.find("cell,value_num,value_den") != std::string::npos);
    CHECK(content.find("0,26,11") != std::string::npos);
    CHECK(content.find("6,-4,11") != std::string::npos);

    const RunResult dumped = run_cli("kernel-dump --kernel dirichlet --n 8 --mode double --format json");
    CHECK(dumped.exit_code == 0);
    CHECK(dumped.output.find("\"value\": \"8\"") != std::string::npos);
}

TEST_CASE("variation, converge and lebesgue subcommands run end to end") {
    const RunResult var = run_cli("variation --seq konyagin --amax 5");
    CHECK(var.exit_code == 0);
    CHECK(var.output.find("A,n,bits,VS,VL,mem_sum,runmax_VL,runmax_mem") != std::string::npos);
    CHECK(var.output.find("336,101010000") != std::string::npos);

    const RunResult conv = run_cli("converge --seq pow2 --amax 6 --fn identity --norm sup");
    CHECK(conv.exit_code == 0);
    CHECK(conv.output.find("A,n,error_sup,error_L1") != std::string::npos);

    const RunResult leb = run_cli("lebesgue --seq pow2minus1 --amax 8 --format json");
    CHECK(leb.exit_code == 0);
    CHECK(leb.output.find("\"F_l1\"") != std::string::npos);

    CHECK(run_cli("variation --seq fibonacci --amax 5").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("kernel-dump --kernel norlund-log --n 0").exit_code == 2);
}
