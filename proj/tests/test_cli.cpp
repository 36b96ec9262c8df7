#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace lgidecay;
using namespace lgidecay::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("settings parse and reject unknown keys") {
    RunConfig cfg;
    apply_setting(cfg, "gamma", "0.25");
    apply_setting(cfg, "c0", "0.6,0.0");
    apply_setting(cfg, "c1_0", "0.0,0.8");
    apply_setting(cfg, "method", "volterra-trapezoid");
    CHECK(cfg.spectrum.gamma == 0.25);
    CHECK(cfg.state.ground == Complex(0.6, 0.0));
    CHECK(cfg.state.excited0 == Complex(0.0, 0.8));
    CHECK(cfg.solver.method == SolverMethod::VolterraTrapezoid);

    CHECK_THROWS_WITH_AS(apply_setting(cfg, "gama", "0.1"),
                         "unknown configuration key 'gama'", ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "gamma", "abc"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "method", "magic"), ConfigError);
}

TEST_CASE("config file loading") {
    TempDir dir("lgidecay_cli_cfg");
    const fs::path cfg_path = dir.path / "run.cfg";
    {
        std::ofstream out(cfg_path);
        out << "# sample run\ngamma = 0.3\nlambda=2.5\n\norder = 3\n";
    }
    RunConfig cfg;
    load_config_file(cfg, cfg_path.string());
    CHECK(cfg.spectrum.gamma == 0.3);
    CHECK(cfg.spectrum.width == 2.5);
    CHECK(cfg.order == 3);

    {
        std::ofstream out(cfg_path);
        out << "gamma 0.3\n";
    }
    CHECK_THROWS_AS(load_config_file(cfg, cfg_path.string()), ConfigError);
    {
        std::ofstream out(cfg_path);
        out << "vorpal = 12\n";
    }
    CHECK_THROWS_WITH_AS(load_config_file(cfg, cfg_path.string()),
                         "unknown configuration key 'vorpal'", ConfigError);
}

TEST_CASE("amplitude command writes the trajectory CSV") {
    TempDir dir("lgidecay_cli_amp");
    const int rc = run({"amplitude", "--gamma", "0", "--lambda", "5", "--t_max", "1",
                        "--dt", "0.01", "--out", dir.path.string()});
    CHECK(rc == kExitOk);
    const std::string csv = slurp(dir.path / "amplitude.csv");
    CHECK(csv.rfind("t,re_G,im_G,abs_G\n", 0) == 0);
    // gamma = 0: every |G| sample is exactly one
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.substr(line.rfind(',') + 1) == "1");
        ++rows;
    }
    CHECK(rows == 101);
}

TEST_CASE("lgi command emits the scan schema and is deterministic") {
    TempDir dir("lgidecay_cli_lgi");
    const std::vector<std::string> args{"lgi",   "--gamma", "0.1",
                                        "--order", "4",      "--tau_points",
                                        "50",    "--out",   dir.path.string()};
    REQUIRE(run(args) == kExitOk);
    const std::string first = slurp(dir.path / "scan.csv");
    CHECK(first.rfind("tau,C21,C32,C43,C41,C4\n", 0) == 0);
    REQUIRE(run(args) == kExitOk);
    CHECK(slurp(dir.path / "scan.csv") == first); // byte-identical rerun

    // order 3 with tau = 0 in the grid: first row is C3 = 1
    REQUIRE(run({"lgi", "--gamma", "0.1", "--order", "3", "--tau_min", "0", "--tau_points",
                 "25", "--out", dir.path.string()}) == kExitOk);
    const std::string scan3 = slurp(dir.path / "scan.csv");
    CHECK(scan3.rfind("tau,C21,C32,C31,C3\n", 0) == 0);
    const auto header_end = scan3.find('\n');
    const auto row_end = scan3.find('\n', header_end + 1);
    const std::string row = scan3.substr(header_end + 1, row_end - header_end - 1);
    CHECK(row == "0,1,1,1,1");
}

TEST_CASE("figure command") {
    TempDir dir("lgidecay_cli_fig");
    REQUIRE(run({"figure", "fig1", "--tau_points", "60", "--out", dir.path.string()}) ==
            kExitOk);
    for (const char* name :
         {"fig1_gamma_0.01.csv", "fig1_gamma_0.1.csv", "fig1_gamma_0.3.csv",
          "fig1_gamma_0.5.csv", "fig1.gnuplot"})
        CHECK(fs::exists(dir.path / name));
    const std::string plot = slurp(dir.path / "fig1.gnuplot");
    CHECK(plot.find("plot 2 ") != std::string::npos); // classical bound line

    CHECK(run({"figure", "fig9", "--out", dir.path.string()}) == kExitConfig);
    CHECK(run({"figure", "--out", dir.path.string()}) == kExitConfig);
}

TEST_CASE("oracle-check exit codes") {
    TempDir dir("lgidecay_cli_orc");
    // tiny horizon keeps this fast; a well-resolved bath passes
    CHECK(run({"oracle-check", "--gamma", "0.3", "--lambda", "5", "--n_modes", "600",
               "--half_width", "60", "--t_max", "1", "--out", dir.path.string()}) == kExitOk);
    CHECK(fs::exists(dir.path / "oracle_check.csv"));
    // deliberate under-resolution fails the tolerance gate
    CHECK(run({"oracle-check", "--gamma", "0.3", "--lambda", "5", "--n_modes", "10",
               "--half_width", "60", "--t_max", "1", "--out", dir.path.string()}) ==
          kExitTolerance);
    // gamma = 0 passes trivially
    CHECK(run({"oracle-check", "--gamma", "0", "--lambda", "5", "--n_modes", "50",
               "--half_width", "30", "--t_max", "1", "--out", dir.path.string()}) == kExitOk);
}

TEST_CASE("malformed invocations exit with the config code") {
    CHECK(run({}) == kExitConfig);
    CHECK(run({"transmogrify"}) == kExitConfig);
    CHECK(run({"lgi", "--gamma"}) == kExitConfig);
    CHECK(run({"lgi", "gamma", "0.1"}) == kExitConfig);
    CHECK(run({"lgi", "--config", "/nonexistent/path.cfg"}) == kExitConfig);
    CHECK(run({"lgi", "--gamma", "-1"}) == kExitConfig);
}
