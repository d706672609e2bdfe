#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "output.hpp"
#include "reference_values.hpp"

namespace fs = std::filesystem;
using scarf::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "scarf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "scarf_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum json") {
    const auto r = invoke({"spectrum", "--s", "2", "--n-max", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["regime"] == "bound_states");
    REQUIRE(j["levels"].size() == 3);
    CHECK(j["levels"][0]["energy"].get<double>() == doctest::Approx(ref::bound_s2_E0).epsilon(1e-14));
    CHECK(j["levels"][1]["energy"].get<double>() == doctest::Approx(ref::bound_s2_E1).epsilon(1e-14));
    CHECK(j["levels"][2]["energy"].get<double>() == doctest::Approx(ref::bound_s2_E2).epsilon(1e-14));
    CHECK(j["levels"][0]["edge"].is_null());
    CHECK(j["levels"][0]["nu1"].get<double>() == doctest::Approx(-2.5));
    CHECK(j["checks"].is_array());
    CHECK(j["params"]["a"].get<double>() == 1.0);
    CHECK(r.out.back() == '\n');
    CHECK(r.err.empty());
}

TEST_CASE("spectrum in the band regime") {
    auto r = invoke({"spectrum", "--s", "0.4", "--n-max", "1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["levels"].size() == 4);
    CHECK(j["levels"][0]["edge"] == "lower");
    CHECK(j["levels"][1]["edge"] == "upper");
    CHECK(j["levels"][3]["energy"].get<double>() == doctest::Approx(ref::band_s04_upper_E1).epsilon(1e-14));
    REQUIRE(j["bands"].size() == 2);
    CHECK(j["bands"][0]["width"].get<double>() ==
          doctest::Approx(ref::band_s04_upper_E0 - ref::band_s04_lower_E0).epsilon(1e-13));
    CHECK(j["bands"][0]["gap_above"].get<double>() ==
          doctest::Approx(ref::band_s04_lower_E1 - ref::band_s04_upper_E0).epsilon(1e-13));

    r = invoke({"spectrum", "--s", "0.5", "--n-max", "1"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["regime"] == "free_particle");
    CHECK(j["bands"][0]["gap_above"].get<double>() == 0.0);

    r = invoke({"bands", "--s", "0.4", "--n-max", "1"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["levels"].size() == 4);
    CHECK(invoke({"bands", "--s", "2"}).code == 2);
}

TEST_CASE("csv output") {
    const auto r = invoke({"spectrum", "--s", "0.4", "--n-max", "1", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "n,edge,lambda,energy,nu1,nu2,band_width,gap_above");
    CHECK(rows[1].rfind("0,lower,", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(scarf::cli::format_shortest(0.1) == "0.1");
    CHECK(scarf::cli::format_shortest(30.842513753404248) == "30.842513753404248");
}

TEST_CASE("table1") {
    auto r = invoke({"table1", "--s", "0.4", "--lambda", "0.9"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["sets"].size() == 4);
    CHECK(j["sets"][0]["valid"] == true);
    CHECK(j["sets"][1]["valid"] == false);
    CHECK(j["sets"][1]["n"].get<double>() == doctest::Approx(0.8));
    CHECK(j["sets"][2]["remark"] == "not valid (n < 0)");
    CHECK(j["sets"][3]["remark"] == "not valid (n < 0)");

    r = invoke({"table1", "--s", "0.4", "--lambda", "0.1"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["sets"][1]["valid"] == true);

    r = invoke({"table1", "--s", "2", "--lambda", "2.5"});
    j = nlohmann::json::parse(r.out);
    REQUIRE(j["sets"].size() == 2);
    CHECK(j["sets"][0]["valid"] == true);
    CHECK(j["sets"][1]["valid"] == false);

    r = invoke({"table1", "--s", "0.4", "--n", "1", "--edge", "lower"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["lambda"].get<double>() == doctest::Approx(1.1));
    CHECK(j["sets"][1]["valid"] == true);
    CHECK(invoke({"table1", "--s", "0.4", "--lambda", "-1"}).code == 2);
}

TEST_CASE("wavefunction output") {
    const auto path = scratch_dir() / "psi.csv";
    auto r = invoke({"wavefunction", "--s", "2", "--n", "0", "--samples", "512", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto rows = lines_of(buffer.str());
    REQUIRE(rows.size() == 513);
    CHECK(rows[0] == "x,V,psi,psi_squared");

    auto sign_changes = [](const std::string& csv) {
        int changes = 0;
        double previous = 0.0;
        double peak_x = 0.0;
        double peak = -1.0;
        const auto rows = lines_of(csv);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            std::vector<double> cols;
            std::istringstream cells(rows[i]);
            for (std::string c; std::getline(cells, c, ',');) cols.push_back(std::stod(c));
            if (previous != 0.0 && cols[2] * previous < 0) ++changes;
            previous = cols[2];
            if (std::abs(cols[2]) > peak) {
                peak = std::abs(cols[2]);
                peak_x = cols[0];
            }
        }
        return std::pair{changes, peak_x};
    };
    auto [changes, peak_x] = sign_changes(buffer.str());
    CHECK(changes == 0);
    CHECK(std::abs(peak_x - 0.5) < 2.0 / 512);

    r = invoke({"wavefunction", "--s", "0.4", "--n", "1", "--edge", "lower", "--samples", "201"});
    CHECK(r.code == 0);
    CHECK(sign_changes(r.out).first == 1);
    r = invoke({"wavefunction", "--s", "2", "--n", "2", "--samples", "300"});
    CHECK(sign_changes(r.out).first == 2);

    r = invoke({"wavefunction", "--s", "2", "--n", "1", "--samples", "64", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["samples"].size() == 64);
    CHECK(invoke({"wavefunction", "--s", "0.4", "--n", "1"}).code == 2);
}

TEST_CASE("verify passes for the bound example") {
    const auto r = invoke({"verify", "--s", "2", "--n-max", "2", "--oracle", "both", "--tol", "1e-8"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    REQUIRE(j["verification"].size() == 3);
    for (const auto& level : j["verification"]) {
        CHECK(level["shooting_energy"].is_number());
        CHECK(level["fd_energy"].is_number());
    }
    for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("verify on band edges and the negative control") {
    auto r = invoke({"verify", "--s", "0.4", "--n-max", "1", "--oracle", "shooting"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verification"].size() == 4);

    r = invoke({"verify", "--s", "0.4", "--n-max", "1", "--tol", "1e-15"});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == false);
    int failed = 0;
    for (const auto& check : j["checks"]) {
        if (check["pass"] == false) {
            ++failed;
            CHECK(check["delta"].get<double>() > check["tolerance"].get<double>());
        }
    }
    CHECK(failed > 0);

    r = invoke({"verify", "--s", "0.4", "--oracle", "fd"});
    CHECK(r.code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
    const std::vector<std::string> args{"verify", "--s", "2", "--n-max", "1", "--oracle", "both", "--format", "json"};
    CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("exit codes for bad input") {
    CHECK(invoke({"spectrum", "--s", "-1"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "0"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "abc"}).code == 2);
    CHECK(invoke({"spectrum"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--format", "xml"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--a", "-1"}).code == 2);
    CHECK(invoke({"spectrum", "--s", "2", "--n-max", "-1"}).code == 2);
    CHECK(invoke({"verify", "--s", "2", "--oracle", "magic"}).code == 2);
    const auto r = invoke({"spectrum", "--s", "-1"});
    CHECK(r.out.empty());
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("exit code for I/O failure") {
    CHECK(invoke({"spectrum", "--s", "2", "--out", "/nonexistent_dir/x/y.json"}).code == 3);
    CHECK(invoke({"spectrum", "--config", "/nonexistent_dir/config.json"}).code == 3);
}

TEST_CASE("config file precedence") {
    const auto path = scratch_dir() / "config.json";
    {
        std::ofstream out(path);
        out << R"({"s": 0.4, "n_max": 0, "format": "csv"})";
    }
    auto r = invoke({"spectrum", "--config", path.string()});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 3);
    r = invoke({"spectrum", "--config", path.string(), "--s", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["regime"] == "bound_states");
    CHECK(j["levels"].size() == 1);

    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK(invoke({"spectrum", "--config", path.string()}).code == 2);
    {
        std::ofstream out(path);
        out << R"({"s": "two"})";
    }
    CHECK(invoke({"spectrum", "--config", path.string()}).code == 2);
}

TEST_CASE("diagnostics go to the error stream") {
    setenv("SCARF_LOG", "debug", 1);
    const auto r = invoke({"spectrum", "--s", "2", "--n-max", "0"});
    unsetenv("SCARF_LOG");
    CHECK(r.code == 0);
    CHECK(r.err.find("info") != std::string::npos);
    CHECK(r.out.find("[scarf]") == std::string::npos);
    CHECK(nlohmann::json::parse(r.out).is_object());
}

TEST_CASE("json emitter formatting") {
    scarf::cli::Json j;
    j["x"] = 0.1;
    j["nan"] = std::nan("");
    j["k"] = 3;
    const auto text = scarf::cli::dump_json(j);
    CHECK(text == "{\n  \"x\": 0.10000000000000001,\n  \"nan\": null,\n  \"k\": 3\n}\n");
}

}
