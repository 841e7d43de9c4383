#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const double PI = std::numbers::pi;

std::string cli_path() {
    const char* p = std::getenv("WQED_CLI");
    return p ? std::string(p) : std::string();
}

int run(const std::string& args) {
    const std::string cmd = "\"" + cli_path() + "\" " + args;
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Csv {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    int col(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return static_cast<int>(i);
        return -1;
    }
};

Csv parse_csv(const std::string& text) {
    Csv out;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (header) {
            out.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        for (const std::string& c : cells) row.push_back(std::stod(c));
        out.rows.push_back(std::move(row));
    }
    return out;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("wqed_cli_" + tag + "_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("spectrum export: header, physics columns, determinism") {
    REQUIRE_MESSAGE(!cli_path().empty(),
                    "WQED_CLI must point at the command-line binary");
    TempDir dir("spectrum");
    const std::string out = dir.file("s.csv");
    REQUIRE(run("spectrum --out " + out) == 0);
    const std::string text = slurp(out);
    const Csv t = parse_csv(text);

    CHECK(t.columns.size() == 8);
    CHECK(t.columns[0] == "k");
    CHECK(t.rows.size() == 201);  // default grid -5:5:201

    const int ctf = t.col("transmitted_fraction");
    const int crf = t.col("reflected_fraction");
    const int cre = t.col("reflection_re");
    const int cex = t.col("excitation_abs2");
    REQUIRE(ctf >= 0);
    REQUIRE(crf >= 0);

    double peak_row_k = 1e9;
    for (const auto& row : t.rows) {
        CHECK(std::abs(row[ctf] + row[crf] - 1.0) < 1e-12);
        if (std::abs(row[0]) < std::abs(peak_row_k)) peak_row_k = row[0];
    }
    CHECK(peak_row_k == 0.0);

    // resonance row: full reflection, canonical excitation density
    for (const auto& row : t.rows)
        if (row[0] == 0.0) {
            CHECK(std::abs(row[cre] + 1.0) < 1e-12);
            CHECK(std::abs(row[crf] - 1.0) < 1e-12);
            CHECK(std::abs(row[cex] - 2.0 / PI) < 1e-12);
        }

    // byte-stable across runs
    const std::string out2 = dir.file("s2.csv");
    REQUIRE(run("spectrum --out " + out2) == 0);
    CHECK(slurp(out2) == text);

    // stdout and file output carry the same bytes
    const std::string out3 = dir.file("s3.csv");
    REQUIRE(run("spectrum > " + out3) == 0);
    CHECK(slurp(out3) == text);
}

TEST_CASE("exported lineshape has full width gamma at half maximum") {
    TempDir dir("fwhm");
    const std::string out = dir.file("line.csv");
    REQUIRE(run("spectrum --gamma 1 --grid -3:3:1201 --out " + out) == 0);
    const Csv t = parse_csv(slurp(out));
    const int crf = t.col("reflected_fraction");

    // linear interpolation of the two half-maximum crossings
    double left = 0.0, right = 0.0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const double k0 = t.rows[i - 1][0], k1 = t.rows[i][0];
        const double f0 = t.rows[i - 1][crf], f1 = t.rows[i][crf];
        if (f0 < 0.5 && f1 >= 0.5)
            left = k0 + (0.5 - f0) / (f1 - f0) * (k1 - k0);
        if (f0 >= 0.5 && f1 < 0.5)
            right = k0 + (0.5 - f0) / (f1 - f0) * (k1 - k0);
    }
    CHECK(std::abs((right - left) - 1.0) < 1e-4);
}

TEST_CASE("csv and json exports of one run agree value for value") {
    TempDir dir("formats");
    const std::string args = "spectrum --omega 0.25 --gamma 0.8 --grid -2:2:17";
    const std::string csv_out = dir.file("run.csv");
    const std::string json_out = dir.file("run.json");
    REQUIRE(run(args + " --out " + csv_out) == 0);
    REQUIRE(run(args + " --format json --out " + json_out) == 0);

    const Csv c = parse_csv(slurp(csv_out));
    const nlohmann::json j = nlohmann::json::parse(slurp(json_out));
    REQUIRE(j.contains("columns"));
    REQUIRE(j.contains("rows"));
    CHECK(j["columns"].size() == c.columns.size());
    REQUIRE(j["rows"].size() == c.rows.size());
    for (std::size_t r = 0; r < c.rows.size(); ++r)
        for (std::size_t i = 0; i < c.columns.size(); ++i) {
            const double a = j["rows"][r][i].get<double>();
            CHECK(a == c.rows[r][i]);  // both round-trip the exact double
        }
}

TEST_CASE("pair wavefunctions: reflected pair dark at contact") {
    TempDir dir("wavef");
    const std::string out = dir.file("w.csv");
    REQUIRE(run("wavefunctions --dE 0 --delta 0 --out " + out) == 0);
    const Csv t = parse_csv(slurp(out));
    CHECK(t.rows.size() == 401);
    const int cr2 = t.col("r2_abs2");
    const int ct2 = t.col("t2_abs2");
    const int crt = t.col("rt_abs2");
    for (const auto& row : t.rows)
        if (row[0] == 0.0) {
            CHECK(row[cr2] < 1e-26);
            CHECK(std::abs(row[ct2] - 1.0 / (2.0 * PI * PI)) < 1e-12);
            CHECK(std::abs(row[crt] - 1.0 / (PI * PI)) < 1e-12);
        }
    // transmitted-pair envelope decays away from contact on resonance
    const auto& first = t.rows.front();
    const auto& mid = t.rows[t.rows.size() / 2];
    CHECK(first[ct2] < mid[ct2]);
}

TEST_CASE("fluorescence table: symmetric, even, canonical center value") {
    TempDir dir("fluor");
    const std::string out = dir.file("f.csv");
    REQUIRE(run("fluorescence --dE 0 --grid -2:2:21 --out " + out) == 0);
    const Csv t = parse_csv(slurp(out));
    REQUIRE(t.rows.size() == 21 * 21);
    const int cb = t.col("bbar_abs2");
    const int cre = t.col("bbar_re");

    std::map<std::pair<double, double>, double> re;
    for (const auto& row : t.rows) re[{row[0], row[1]}] = row[cre];
    for (const auto& [key, v] : re)
        CHECK(re.at({key.second, key.first}) == v);  // swap is exact

    // mirrored grid indices carry near-negated labels, so evenness in each
    // argument shows up as near-equality, not a bitwise match
    const std::size_t n = 21;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double a = t.rows[i * n + j][cre];
            const double b = t.rows[(n - 1 - i) * n + j][cre];
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    for (const auto& row : t.rows)
        if (row[0] == 0.0 && row[1] == 0.0) {
            CHECK(std::abs(row[cre] + 8.0 / PI) < 1e-12);
            CHECK(std::abs(row[cb] - 64.0 / (PI * PI)) < 1e-12);
        }
}

TEST_CASE("momentum sectors: shared correlated background, exchange structure") {
    TempDir dir("momentum");
    const std::string out = dir.file("m.csv");
    REQUIRE(run("momentum --dE 1 --delta 0.5 --grid -2:2:41 --out " + out) ==
            0);
    const Csv t = parse_csv(slurp(out));
    REQUIRE(t.rows.size() == 41);
    auto c = [&](const char* n) { return t.col(n); };
    for (const auto& row : t.rows) {
        // one correlated kernel shared by every sector
        CHECK(row[c("rr_correlated_re")] == row[c("ll_correlated_re")]);
        CHECK(row[c("rr_correlated_re")] == row[c("rl_correlated_re")]);
        CHECK(row[c("rr_correlated_im")] == row[c("rl_correlated_im")]);
        // both-transmitted and both-reflected sectors are exchange-blind
        CHECK(row[c("rr_direct_re")] == row[c("rr_exchange_re")]);
        CHECK(row[c("ll_direct_im")] == row[c("ll_exchange_im")]);
    }
    // mixed sector: direct and exchange differ once delta != 0
    const auto& r0 = t.rows.front();
    CHECK(r0[c("rl_direct_re")] != r0[c("rl_exchange_re")]);
}

TEST_CASE("verification report: machine-readable and honest about failure") {
    TempDir dir("verify");
    const std::string rep = dir.file("report.json");
    REQUIRE(run("verify --out " + rep + " > /dev/null") == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(rep));
    REQUIRE(j.is_array());
    CHECK(j.size() >= 12);
    for (const auto& entry : j) {
        REQUIRE(entry.contains("name"));
        REQUIRE(entry.contains("measured"));
        REQUIRE(entry.contains("tolerance"));
        REQUIRE(entry.contains("pass"));
        CHECK(entry["pass"].get<bool>());
    }

    // an impossible tolerance must surface as failures and a nonzero exit
    const std::string bad = dir.file("bad.json");
    CHECK(run("verify --tolerance-cap 1e-30 --out " + bad + " > /dev/null") ==
          1);
    const nlohmann::json jb = nlohmann::json::parse(slurp(bad));
    int failures = 0;
    for (const auto& entry : jb)
        if (!entry["pass"].get<bool>()) ++failures;
    CHECK(failures > 0);

    // csv flavour of the report
    const std::string repc = dir.file("report.csv");
    REQUIRE(run("verify --format csv --out " + repc + " > /dev/null") == 0);
    const std::string text = slurp(repc);
    CHECK(text.rfind("name,measured,tolerance,pass", 0) == 0);
}

TEST_CASE("exit codes: usage, grid validation, output failures") {
    CHECK(run("nonsense > /dev/null 2>&1") == 2);
    CHECK(run("> /dev/null 2>&1") == 2);  // missing subcommand
    CHECK(run("spectrum --grid 5:1:10 > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --grid -1:1:1 > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --grid 0:1 > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --grid a:b:c > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --format yaml > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --gamma -2 > /dev/null 2>&1") == 2);
    CHECK(run("spectrum --out /nonexistent_dir/x.csv > /dev/null 2>&1") == 3);

    // smallest legal grid
    TempDir dir("tiny");
    const std::string out = dir.file("two.csv");
    REQUIRE(run("spectrum --grid 0:1:2 --out " + out) == 0);
    CHECK(parse_csv(slurp(out)).rows.size() == 2);
}
