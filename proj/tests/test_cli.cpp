#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "osc3d/cli.hpp"
#include "osc3d/parallel.hpp"
#include "osc3d/phase_space.hpp"
#include "osc3d/version.hpp"

using namespace osc3d;

namespace {

constexpr double kPi = std::numbers::pi;

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream acc;
    acc << in.rdbuf();
    return acc.str();
}

}  // namespace

TEST_CASE("complex literals parse in every written form") {
    CHECK(parse_complex("3") == cplx(3.0, 0.0));
    CHECK(parse_complex("-2.5") == cplx(-2.5, 0.0));
    CHECK(parse_complex("i") == cplx(0.0, 1.0));
    CHECK(parse_complex("-i") == cplx(0.0, -1.0));
    CHECK(parse_complex("2i") == cplx(0.0, 2.0));
    CHECK(parse_complex("1+2i") == cplx(1.0, 2.0));
    CHECK(parse_complex("0.5-0.25i") == cplx(0.5, -0.25));
    CHECK(parse_complex("1e-3+2.5e+2i") == cplx(1e-3, 250.0));
    CHECK(parse_complex("-1.5E-2i") == cplx(0.0, -0.015));
    CHECK(parse_complex("0.25+i") == cplx(0.25, 1.0));
    CHECK(parse_complex("0.25-i") == cplx(0.25, -1.0));

    CHECK_THROWS_AS((void)parse_complex(""), ConfigError);
    CHECK_THROWS_AS((void)parse_complex("1+"), ConfigError);
    CHECK_THROWS_AS((void)parse_complex("abc"), ConfigError);
    CHECK_THROWS_AS((void)parse_complex("1+2j"), ConfigError);
    CHECK_THROWS_AS((void)parse_complex("++2i"), ConfigError);
}

TEST_CASE("complex triples need exactly three parts") {
    const auto v = parse_complex_triple("1;2i;0.5-0.5i");
    CHECK(v[0] == cplx(1.0, 0.0));
    CHECK(v[1] == cplx(0.0, 2.0));
    CHECK(v[2] == cplx(0.5, -0.5));
    CHECK_THROWS_AS((void)parse_complex_triple("1;2"), ConfigError);
    CHECK_THROWS_AS((void)parse_complex_triple("1;2;3;4"), ConfigError);
}

TEST_CASE("flag parsing fills the run configuration") {
    const auto cfg = parse_cli({"wigner", "--state", "coherent", "--alpha",
                                "0.5+0.5i;-0.2;0.1i", "--grid", "px:-1.5:1.5:7", "--grid",
                                "z:0:2:4", "--cutoff", "50", "--order", "80", "--params",
                                "2,0.5,1", "--format", "json", "--out", "w.json"});
    CHECK(cfg.command == Command::wigner);
    CHECK(cfg.state == StateKind::coherent);
    CHECK(cfg.alpha[0] == cplx(0.5, 0.5));
    CHECK(cfg.alpha[1] == cplx(-0.2, 0.0));
    CHECK(cfg.alpha[2] == cplx(0.0, 0.1));
    REQUIRE(cfg.grids.size() == 2);
    CHECK(cfg.grids[0].axis == "px");
    CHECK(cfg.grids[0].lo == doctest::Approx(-1.5));
    CHECK(cfg.grids[0].hi == doctest::Approx(1.5));
    CHECK(cfg.grids[0].count == 7);
    CHECK(cfg.grids[1].axis == "z");
    CHECK(cfg.cutoff == 50);
    CHECK(cfg.order == 80);
    CHECK(cfg.params.mass == doctest::Approx(2.0));
    CHECK(cfg.params.omega == doctest::Approx(0.5));
    CHECK(cfg.params.kappa == doctest::Approx(1.0));
    CHECK(cfg.format == OutFormat::json);
    CHECK(cfg.out_path == "w.json");

    const auto fock = parse_cli({"wigner", "--state", "fock:1,2,3", "--grid", "x:-1:1:5",
                                 "--grid", "px:-1:1:5"});
    CHECK(fock.state == StateKind::fock);
    CHECK(fock.fock_index.m == 1);
    CHECK(fock.fock_index.n == 2);
    CHECK(fock.fock_index.l == 3);

    const auto defaults = parse_cli({"borders", "--grid", "phi:0.5:2.5:5"});
    CHECK(defaults.cutoff == 40);
    CHECK(defaults.order == 60);
    CHECK(defaults.format == OutFormat::csv);
    CHECK(defaults.out_path.empty());
    CHECK(defaults.params.mass == doctest::Approx(1.0));
}

TEST_CASE("malformed invocations raise config errors") {
    CHECK_THROWS_AS((void)parse_cli({}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"--cutoff", "50"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"wigner", "evolve"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"frobnicate"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders", "--grid", "phi:0:1:5", "--bogus"}),
                    ConfigError);

    // grid constraints
    CHECK_THROWS_AS((void)parse_cli({"wigner", "--grid", "x:0:1:1", "--grid", "px:0:1:5"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"wigner", "--grid", "x:1:0:5", "--grid", "px:0:1:5"}),
                    ConfigError);
    CHECK_THROWS_AS(
        (void)parse_cli({"wigner", "--grid", "x:0:1:5", "--grid", "x:0:1:5"}),
        ConfigError);
    CHECK_THROWS_AS(
        (void)parse_cli({"wigner", "--grid", "t:0:1:5", "--grid", "px:0:1:5"}),
        ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"wigner", "--grid", "x:0:1:5"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"mandel", "--grid", "delta:0:1:5"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"evolve", "--grid", "t:0:1:5"}), ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders"}), ConfigError);

    // state and numeric constraints
    CHECK_THROWS_AS((void)parse_cli({"wigner", "--state", "foo", "--grid", "x:0:1:5",
                                     "--grid", "px:0:1:5"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"wigner", "--state", "fock:0,0,600", "--grid",
                                     "x:0:1:5", "--grid", "px:0:1:5"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders", "--grid", "phi:0:1:5", "--cutoff", "0"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders", "--grid", "phi:0:1:5", "--order", "1"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders", "--grid", "phi:0:1:5", "--params",
                                     "0,1,1"}),
                    ConfigError);
    CHECK_THROWS_AS((void)parse_cli({"borders", "--grid", "phi:0:1:5", "--params", "1,1"}),
                    ConfigError);
}

TEST_CASE("config files seed the configuration and flags override them") {
    const std::string path = write_temp("osc3d_cfg.json", R"({
        "command": "mandel",
        "state": "coherent",
        "alpha": "1+0i;0;0",
        "grid": ["delta:0:2:5", "r:0:1:4"],
        "cutoff": 50,
        "order": 80,
        "format": "json"
    })");

    const auto cfg = parse_cli({"--config", path});
    CHECK(cfg.command == Command::mandel);
    CHECK(cfg.state == StateKind::coherent);
    CHECK(cfg.alpha[0] == cplx(1.0, 0.0));
    REQUIRE(cfg.grids.size() == 2);
    CHECK(cfg.grids[0].axis == "delta");
    CHECK(cfg.cutoff == 50);
    CHECK(cfg.order == 80);
    CHECK(cfg.format == OutFormat::json);

    // a flag beats the file, including through the --config= spelling
    const auto tweaked = parse_cli({"--config=" + path, "--cutoff", "60"});
    CHECK(tweaked.cutoff == 60);
    CHECK(tweaked.order == 80);

    // an explicit command beats the one in the file; grids replace wholesale
    const auto re = parse_cli({"borders", "--config", path, "--grid", "phi:0.2:1:5"});
    CHECK(re.command == Command::borders);
    REQUIRE(re.grids.size() == 1);
    CHECK(re.grids[0].axis == "phi");

    CHECK_THROWS_AS((void)parse_cli({"--config", "/tmp/does_not_exist_osc3d.json"}),
                    ConfigError);
    const auto broken = write_temp("osc3d_broken.json", "{not json");
    CHECK_THROWS_AS((void)parse_cli({"--config", broken}), ConfigError);
    const auto unknown = write_temp("osc3d_unknown.json", R"({"bogus": 1})");
    CHECK_THROWS_AS((void)parse_cli({"--config", unknown}), ConfigError);
    std::remove(path.c_str());
    std::remove(broken.c_str());
    std::remove(unknown.c_str());
}

TEST_CASE("border table hits the known zero crossing") {
    const auto cfg = parse_cli({"borders", "--grid",
                                "phi:1.5707963267948966:1.5707963267948966:2"});
    const auto table = run(cfg);
    REQUIRE(table.columns == std::vector<std::string>{"phi", "r_plus", "r_minus"});
    REQUIRE(table.rows.size() == 2);
    for (const auto& row : table.rows) {
        CHECK(row[0].get<double>() == doctest::Approx(kPi / 2.0));
        CHECK(std::abs(row[1].get<double>()) <= 1e-12);
        CHECK(std::abs(row[2].get<double>()) <= 1e-12);
    }
}

TEST_CASE("mandel table is flat in delta at zero displacement") {
    const auto cfg = parse_cli({"mandel", "--grid", "delta:0:2:3", "--grid", "r:0.3:0.9:3"});
    const auto table = run(cfg);
    REQUIRE(table.columns == std::vector<std::string>{"delta", "r", "Q"});
    REQUIRE(table.rows.size() == 9);
    for (const auto& row : table.rows) {
        const double r = row[1].get<double>();
        CHECK(row[2].get<double>() == doctest::Approx(std::cosh(2.0 * r)).epsilon(1e-12));
    }
}

TEST_CASE("squeeze map emits the frozen corner row") {
    const auto cfg = parse_cli({"squeeze_map", "--grid", "phi:0:1:2", "--grid", "r:1:2:2"});
    const auto table = run(cfg);
    REQUIRE(table.columns ==
            std::vector<std::string>{"phi", "r", "var1", "var2", "squeezed"});
    const auto& first = table.rows[0];
    CHECK(first[0].get<double>() == doctest::Approx(0.0));
    CHECK(first[1].get<double>() == doctest::Approx(1.0));
    CHECK(first[2].get<double>() == doctest::Approx(1.84726402).epsilon(1e-7));
    CHECK(first[2].get<double>() == doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-14));
    CHECK(first[3].get<double>() == doctest::Approx(0.03383382).epsilon(1e-6));
    CHECK(first[4].is_boolean());
    CHECK(first[4].get<bool>());
}

TEST_CASE("evolve table tracks the rotating centroid") {
    const auto cfg = parse_cli({"evolve", "--state", "coherent", "--alpha", "1+0i;0;0",
                                "--grid", "t:0:1.5707963267948966:3"});
    const auto table = run(cfg);
    REQUIRE(table.columns == std::vector<std::string>{"t", "rx", "ry", "rz", "px", "py",
                                                      "pz", "phase"});
    REQUIRE(table.rows.size() == 3);
    const auto& start = table.rows[0];
    CHECK(start[1].get<double>() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
    CHECK(std::abs(start[4].get<double>()) <= 1e-14);
    CHECK(std::abs(start[7].get<double>()) <= 1e-14);
    const auto& quarter = table.rows[2];
    CHECK(std::abs(quarter[1].get<double>()) <= 1e-12);
    CHECK(quarter[4].get<double>() == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-12));
    CHECK(quarter[7].get<double>() == doctest::Approx(-0.75 * kPi).epsilon(1e-14));
}

TEST_CASE("wigner table equals the closed form on the grid") {
    const auto cfg = parse_cli({"wigner", "--state", "fock:0,0,0", "--grid", "x:-1:1:3",
                                "--grid", "px:0:1:2"});
    const auto table = run(cfg);
    REQUIRE(table.columns == std::vector<std::string>{"x", "px", "W"});
    REQUIRE(table.rows.size() == 6);
    for (const auto& row : table.rows) {
        PhasePoint pt;
        pt.r = {row[0].get<double>(), 0.0, 0.0};
        pt.p = {row[1].get<double>(), 0.0, 0.0};
        CHECK(row[2].get<double>() ==
              doctest::Approx(wigner_fock({0, 0, 0}, pt, natural_units())).epsilon(1e-14));
    }
}

TEST_CASE("csv cells round-trip to the exact binary values") {
    const auto cfg = parse_cli({"wigner", "--state", "coherent", "--alpha",
                                "0.3+0.4i;-0.1;0.2i", "--grid", "x:-1:1:3", "--grid",
                                "px:-0.5:0.5:2", "--order", "30"});
    const auto table = run(cfg);
    const std::string csv = to_csv(table);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x,px,W");
    for (const auto& row : table.rows) {
        std::string line;
        REQUIRE(std::getline(lines, line));
        const auto c1 = line.find(','), c2 = line.rfind(',');
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 > c1);
        CHECK(std::stod(line.substr(0, c1)) == row[0].get<double>());
        CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) == row[1].get<double>());
        CHECK(std::stod(line.substr(c2 + 1)) == row[2].get<double>());
    }
}

TEST_CASE("csv bytes do not depend on the worker pool size") {
    const auto cfg = parse_cli({"wigner", "--state", "coherent", "--alpha",
                                "0.8+0.3i;-0.2;0.1-0.4i", "--grid", "x:-2:2:5", "--grid",
                                "px:-2:2:4", "--order", "30"});
    set_worker_override(1);
    const std::string serial = to_csv(run(cfg));
    set_worker_override(3);
    const std::string pooled = to_csv(run(cfg));
    set_worker_override(0);
    CHECK(serial == pooled);
}

TEST_CASE("json output carries the configuration echo") {
    const auto cfg = parse_cli({"wigner", "--state", "fock:0,1,0", "--grid", "x:-1:1:3",
                                "--grid", "py:0:1:2", "--format", "json"});
    const auto table = run(cfg);
    auto meta = config_echo(cfg);
    meta["version"] = kVersion;
    const auto doc = nlohmann::json::parse(to_json(table, meta));
    CHECK(doc["meta"]["command"] == "wigner");
    CHECK(doc["meta"]["state"] == "fock:0,1,0");
    CHECK(doc["meta"]["grid"][0] == "x:-1:1:3");
    CHECK(doc["meta"]["grid"][1] == "py:0:1:2");
    CHECK(doc["meta"]["columns"] == nlohmann::json(table.columns));
    CHECK(doc["meta"]["version"] == kVersion);
    CHECK(doc["meta"]["params"] == "1,1,1");
    REQUIRE(doc["rows"].size() == table.rows.size());
    CHECK(doc["rows"][0][2].get<double>() == table.rows[0][2].get<double>());
}

TEST_CASE("the emitted meta block parses back as a config file") {
    const auto cfg = parse_cli({"mandel", "--grid", "delta:0:2:3", "--grid", "r:0:1:3",
                                "--alpha", "0.5;0;0"});
    auto meta = config_echo(cfg);
    meta["version"] = kVersion;
    meta["columns"] = nlohmann::json::array({"delta", "r", "Q"});
    const std::string path = write_temp("osc3d_echo.json", meta.dump(2));
    const auto again = parse_cli({"--config", path});
    CHECK(again.command == cfg.command);
    CHECK(again.alpha[0] == cfg.alpha[0]);
    REQUIRE(again.grids.size() == cfg.grids.size());
    CHECK(again.grids[1].axis == cfg.grids[1].axis);
    CHECK(again.grids[1].count == cfg.grids[1].count);
    std::remove(path.c_str());
}

TEST_CASE("process entry point writes files and reports config errors") {
    const std::string out = "/tmp/osc3d_borders_test.csv";
    CHECK(run_cli({"borders", "--grid", "phi:1:2:3", "--out", out}) == 0);
    const std::string body = slurp(out);
    CHECK(body.rfind("phi,r_plus,r_minus\n", 0) == 0);
    std::remove(out.c_str());

    CHECK(run_cli({"wigner"}) == 2);
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"borders", "--grid", "phi:1:2:3", "--out",
                   "/tmp/no_such_dir_osc3d/x.csv"}) == 2);

    const std::string jout = "/tmp/osc3d_mandel_test.json";
    CHECK(run_cli({"mandel", "--grid", "delta:0:1:3", "--grid", "r:0:1:3", "--format",
                   "json", "--out", jout}) == 0);
    const auto doc = nlohmann::json::parse(slurp(jout));
    CHECK(doc["meta"]["version"] == kVersion);
    CHECK(doc["rows"].size() == 9);
    std::remove(jout.c_str());
}
