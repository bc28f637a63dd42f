#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "starrad/cli.hpp"
#include "starrad/radii.hpp"

using namespace starrad;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("starrad_test_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("cmd_table csv round-trips and reproduces the exit status") {
    const fs::path out = temp_file("table.csv");
    const int rc = run_cli({"table", "--class", "all", "--format", "csv",
                            "--out", out.string()});
    CHECK(rc == kExitOk);

    std::istringstream is(slurp(out));
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "class,target,alpha,closed_form,solved,abs_diff,sharp,equation");

    int rows = 0;
    bool all_ok = true;
    bool saw_lemniscate = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        REQUIRE(cells.size() >= 8);
        const double closed = std::stod(cells[3]);
        const double solved = std::stod(cells[4]);
        all_ok = all_ok && std::abs(closed - solved) <= 1e-9;
        if (cells[0] == "pi1" && cells[1] == "S_L") {
            saw_lemniscate = true;
            // 17 significant digits round-trip losslessly
            CHECK(closed == closed_form_radius(ClassId::Pi1,
                                               TargetRegion::make(RegionTag::Lemniscate)));
            CHECK(cells[6] == "true");
        }
        if (cells[0] == "pi2" && cells[1] == "S_star") CHECK(std::stod(cells[3]) == 0.2);
        if (cells[0] == "pi2" && (cells[1] == "S_L" || cells[1] == "S_sin"))
            CHECK(cells[6] == "false");
        ++rows;
    }
    CHECK(rows == 16);
    CHECK(saw_lemniscate);
    CHECK(all_ok == (rc == kExitOk));
    fs::remove(out);
}

TEST_CASE("cmd_table honors the alpha sweep identities") {
    const fs::path out = temp_file("table_alpha.csv");
    const int rc = run_cli({"table", "--class", "pi1", "--alpha", "0,0.5",
                            "--format", "csv", "--out", out.string()});
    CHECK(rc == kExitOk);
    std::istringstream is(slurp(out));
    std::string line;
    std::getline(is, line);  // header
    double hp_half = -1.0, parabolic = -2.0;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++rows;
        const auto cells = split_csv_line(line);
        if (cells[1] == "S_star" && cells[2].substr(0, 3) == "0.5")
            hp_half = std::stod(cells[3]);
        if (cells[1] == "S_P") parabolic = std::stod(cells[3]);
    }
    CHECK(rows == 9);  // two half-plane orders + 7 regions
    CHECK(std::abs(hp_half - parabolic) <= 1e-12);
    fs::remove(out);
}

TEST_CASE("cmd_table markdown and json formats") {
    const fs::path out_md = temp_file("table.md");
    CHECK(run_cli({"table", "--class", "pi2", "--format", "md", "--out",
                   out_md.string()}) == kExitOk);
    const std::string md = slurp(out_md);
    CHECK(md.find("| class | target |") != std::string::npos);
    CHECK(md.find("pi2") != std::string::npos);
    fs::remove(out_md);

    const fs::path out_json = temp_file("table.json");
    CHECK(run_cli({"table", "--class", "pi2", "--format", "json", "--out",
                   out_json.string()}) == kExitOk);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out_json));
    CHECK(doc["rows"].size() == 8);
    for (const auto& row : doc["rows"]) {
        CHECK(row["abs_diff"].get<double>() <= 1e-9);
        if (row["region"] == "lemniscate") {
            CHECK(row["route"] == "disk-about-1");
            CHECK(row["route_discrepancy"].get<double>() <= 1e-9);
        }
    }
    fs::remove(out_json);
}

TEST_CASE("cmd_verify writes the full JSON report") {
    const fs::path out = temp_file("verify.json");
    const int rc = run_cli({"verify", "--out", out.string(), "--seed", "42"});
    CHECK(rc == kExitOk);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["seed"] == 42);
    CHECK(doc["reports"].size() == 16);
    int sharp = 0, lower_bound_only = 0;
    for (const auto& rep : doc["reports"]) {
        CHECK(rep["pass"] == true);
        if (rep["sharp"] == true)
            ++sharp;
        else
            ++lower_bound_only;
    }
    CHECK(sharp == 14);
    CHECK(lower_bound_only == 2);
    fs::remove(out);
}

TEST_CASE("cmd_verify single target") {
    const fs::path out = temp_file("verify_one.json");
    const int rc = run_cli({"verify", "--class", "pi1", "--target", "exp",
                            "--out", out.string()});
    CHECK(rc == kExitOk);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out));
    REQUIRE(doc["reports"].size() == 1);
    const auto& rep = doc["reports"][0];
    CHECK(rep["verdict"] == "TOUCHES");
    // touch value has |log w| = 1
    const double re = rep["touch_point"]["re"].get<double>();
    const double im = rep["touch_point"]["im"].get<double>();
    CHECK(std::abs(std::abs(std::log(Complex{re, im})) - 1.0) < 1e-6);
    fs::remove(out);
}

TEST_CASE("cmd_plot emits a deterministic SVG") {
    const fs::path out = temp_file("plot.svg");
    CHECK(run_cli({"plot", "--class", "pi1", "--target", "cardioid", "--out",
                   out.string()}) == kExitOk);
    const std::string first = slurp(out);
    CHECK(first.find("<svg") != std::string::npos);
    CHECK(first.find("cardioid") != std::string::npos);
    CHECK(first.find("<circle") != std::string::npos);  // touch marker
    CHECK(std::count(first.begin(), first.end(), '\n') > 5);

    CHECK(run_cli({"plot", "--class", "pi1", "--target", "cardioid", "--out",
                   out.string()}) == kExitOk);
    CHECK(first == slurp(out));
    fs::remove(out);

    // lower-bound item: curve strictly inside, no touch marker
    const fs::path out2 = temp_file("plot_sine.svg");
    CHECK(run_cli({"plot", "--class", "pi2", "--target", "sine", "--out",
                   out2.string()}) == kExitOk);
    CHECK(slurp(out2).find("<circle") == std::string::npos);
    fs::remove(out2);
}

TEST_CASE("bad arguments exit with code 4") {
    CHECK(run_cli({"table", "--class", "pi9"}) == kExitBadArguments);
    CHECK(run_cli({"verify", "--target", "pentagon"}) == kExitBadArguments);
    CHECK(run_cli({"plot", "--class", "all", "--target", "all"}) == kExitBadArguments);
    CHECK(run_cli({"table", "--samples", "10"}) == kExitBadArguments);
    CHECK(run_cli({"frobnicate"}) == kExitBadArguments);
}

TEST_CASE("unwritable output exits with code 3") {
    CHECK(run_cli({"table", "--out", "/nonexistent_dir_xyz/table.csv"}) == kExitIo);
}

TEST_CASE("config file provides defaults that flags override") {
    const fs::path cfg = temp_file("config.ini");
    {
        std::ofstream os(cfg);
        os << "class=pi2\nformat=md\n";
    }
    const fs::path out = temp_file("table_cfg.csv");
    const int rc = run_cli({"table", "--config", cfg.string(), "--format", "csv",
                            "--out", out.string()});
    CHECK(rc == kExitOk);
    const std::string text = slurp(out);
    CHECK(text.find("pi2") != std::string::npos);   // from config
    CHECK(text.find("pi1") == std::string::npos);   // class narrowed by config
    CHECK(text.find("| class") == std::string::npos);  // format overridden to csv
    fs::remove(cfg);
    fs::remove(out);
}
