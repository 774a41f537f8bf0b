// End-to-end checks of the command-line binary: exit codes, stdout contracts,
// CSV emission, configuration precedence, and determinism. The binary path
// arrives through the PZ_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(PZ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("prime count prints the bare number") {
    const auto r = run_cli("primes count --from 2 --to 1000");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "168\n");
}

TEST_CASE("evaluating on the prefactor pole exits 3 and names the pole") {
    const auto dir = fresh_dir("pole");
    const auto r = run_cli("zeta eval --sigma 1 --tau 0 --output-dir " + dir.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("pole") != std::string::npos);
}

TEST_CASE("help exits 0, unknown subcommand exits 2, missing argument exits 2") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("primes --help").exit_code == 0);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("primes count").exit_code == 2);         // --to is required
    CHECK(run_cli("zeta eval --sigma 0.5").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                     // a subcommand is required
}

TEST_CASE("root recovery emits the pinned coordinates") {
    const auto dir = fresh_dir("roots");
    const auto r =
        run_cli("action roots --tau-center 32.9 --window 3 --output-dir " + dir.string());
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(dir / "action_roots.csv");
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "sigma,tau,residual,omega_star,eta_star,n_max");
    std::istringstream cells(row);
    std::string cell;
    std::getline(cells, cell, ',');
    const double sigma = std::stod(cell);
    std::getline(cells, cell, ',');
    const double tau = std::stod(cell);
    CHECK(std::fabs(sigma - 0.497) < 0.005);
    CHECK(std::fabs(tau - 32.903) < 0.01);
}

TEST_CASE("config file values apply and flags override them") {
    const auto dir_a = fresh_dir("cfg_a");
    const auto dir_b = fresh_dir("cfg_b");
    const auto dir_c = fresh_dir("cfg_c");
    const auto dir_d = fresh_dir("cfg_d");
    const fs::path cfg = dir_a / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "n_max=50\n";
    }
    // config value == equivalent flag value
    REQUIRE(run_cli("zeta eval --sigma 0.5 --tau 14 --config " + cfg.string() +
                    " --output-dir " + dir_a.string())
                .exit_code == 0);
    REQUIRE(run_cli("zeta eval --sigma 0.5 --tau 14 --n-max 50 --output-dir " +
                    dir_b.string())
                .exit_code == 0);
    CHECK(slurp(dir_a / "zeta_eval.csv") == slurp(dir_b / "zeta_eval.csv"));
    // explicit flag beats the config file
    REQUIRE(run_cli("zeta eval --sigma 0.5 --tau 14 --config " + cfg.string() +
                    " --n-max 80 --output-dir " + dir_c.string())
                .exit_code == 0);
    REQUIRE(run_cli("zeta eval --sigma 0.5 --tau 14 --n-max 80 --output-dir " +
                    dir_d.string())
                .exit_code == 0);
    CHECK(slurp(dir_c / "zeta_eval.csv") == slurp(dir_d / "zeta_eval.csv"));
    CHECK(slurp(dir_a / "zeta_eval.csv") != slurp(dir_c / "zeta_eval.csv"));
}

TEST_CASE("environment variable provides the output directory") {
    const auto dir = fresh_dir("envdir");
    const auto r = run_cli("table --sets 1", "PZ_OUTPUT_DIR=" + dir.string() + " ");
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(dir / "random_table.csv"));
}

TEST_CASE("identical configurations re-emit byte-identical CSV files") {
    const auto dir_a = fresh_dir("repeat_a");
    const auto dir_b = fresh_dir("repeat_b");
    for (const auto& dir : {dir_a, dir_b}) {
        REQUIRE(run_cli("table --seed 7 --sets 2 --output-dir " + dir.string())
                    .exit_code == 0);
        REQUIRE(run_cli("zeta scan --sigma 0.5 --tau-lo 10 --tau-hi 15 --output-dir " +
                        dir.string())
                    .exit_code == 0);
    }
    CHECK(slurp(dir_a / "random_table.csv") == slurp(dir_b / "random_table.csv"));
    CHECK(slurp(dir_a / "zeta_scan.csv") == slurp(dir_b / "zeta_scan.csv"));
}

TEST_CASE("worker-pool size does not change the bytes") {
    const auto dir_a = fresh_dir("thr_1");
    const auto dir_b = fresh_dir("thr_4");
    REQUIRE(run_cli("zeta scan --sigma 0.5 --tau-lo 10 --tau-hi 20 --threads 1 "
                    "--output-dir " +
                    dir_a.string())
                .exit_code == 0);
    REQUIRE(run_cli("zeta scan --sigma 0.5 --tau-lo 10 --tau-hi 20 --threads 4 "
                    "--output-dir " +
                    dir_b.string())
                .exit_code == 0);
    CHECK(slurp(dir_a / "zeta_scan.csv") == slurp(dir_b / "zeta_scan.csv"));
}

TEST_CASE("plot flag adds an SVG next to the CSV") {
    const auto dir = fresh_dir("plot");
    REQUIRE(run_cli("zeta scan --sigma 0.5 --tau-lo 10 --tau-hi 12 --plot --output-dir " +
                    dir.string())
                .exit_code == 0);
    CHECK(fs::exists(dir / "zeta_scan.csv"));
    CHECK(fs::exists(dir / "zeta_scan.svg"));
    const std::string svg = slurp(dir / "zeta_scan.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("product-scan stdout reports the pinned minima") {
    const auto dir = fresh_dir("fscan");
    const auto r = run_cli("f-scan --tau-lo 13.135 --tau-hi 25.935 --output-dir " +
                           dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("14.135") != std::string::npos);
    CHECK(r.output.find("21.035") != std::string::npos);
    CHECK(r.output.find("25.035") != std::string::npos);
    const std::string csv = slurp(dir / "f_scan.csv");
    CHECK(csv.rfind("sigma,tau,omega,eta,value", 0) == 0);
}

TEST_CASE("scan refusal surfaces as the numerical-guard exit code") {
    const auto dir = fresh_dir("nomin");
    const auto r = run_cli("action scan --tau-lo 33.6 --tau-hi 34.4 --output-dir " +
                           dir.string());
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("edge") != std::string::npos);
}

TEST_CASE("mode literal and optimized produce the same prime list") {
    const auto dir_a = fresh_dir("mode_lit");
    const auto dir_b = fresh_dir("mode_opt");
    REQUIRE(run_cli("primes list --to 200 --mode literal --output-dir " + dir_a.string())
                .exit_code == 0);
    REQUIRE(run_cli("primes list --to 200 --mode optimized --output-dir " + dir_b.string())
                .exit_code == 0);
    CHECK(slurp(dir_a / "primes_list.csv") == slurp(dir_b / "primes_list.csv"));
}
