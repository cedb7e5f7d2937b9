#include <doctest.h>

#include "fzzt/cli/cache.hpp"
#include "fzzt/cli/cli.hpp"
#include "oracles/frozen.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fzzt;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli_run(std::vector<const char*> args) {
    args.insert(args.begin(), "fzzt");
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header = nullptr) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> r;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string figure(int id) {
    std::ostringstream s;
    cli::write_figure(id, s);
    return s.str();
}

struct TempCache {
    std::filesystem::path path;
    TempCache() : path(std::filesystem::temp_directory_path() / ("fzzt-test-cache-" + std::to_string(::getpid()) + ".json")) {
        std::filesystem::remove(path);
        ::setenv("MM_CACHE", path.c_str(), 1);
    }
    ~TempCache() {
        std::filesystem::remove(path);
        ::unsetenv("MM_CACHE");
    }
};

}  // namespace

TEST_CASE("charpoly of the (2,1) matrix at N=3") {
    const auto r = cli_run({"charpoly", "--model", "21", "--n", "3", "--g", "1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coeffs"] == nlohmann::json::array({"0", "-3/2", "0", "1"}));
    CHECK(j["exact"] == true);
}

TEST_CASE("xi zeros --count 1") {
    const auto r = cli_run({"xi", "zeros", "--count", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["zeros"].size() == 1);
    CHECK(std::abs(j["zeros"][0].get<double>() - oracle::kXiZeros[0]) <= 1e-8);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli_run({"charpoly", "--model", "21", "--n", "3", "--bogus"}).code == 2);
    CHECK(cli_run({"charpoly", "--model", "99", "--n", "3"}).code == 2);
    CHECK(cli_run({"nosuchverb"}).code == 2);
    CHECK(cli_run({"figure", "--id", "9", "--out", "-"}).code == 2);
}

TEST_CASE("eig output is deterministic") {
    const std::vector<const char*> args = {"eig", "--model", "31", "--n", "20"};
    const auto a = cli_run(args), b = cli_run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("coefficient cache: populated, reused, corrupt files ignored") {
    TempCache tc;
    const auto first = cli_run({"xi", "coeffs", "--nmax", "6"});
    REQUIRE(first.code == 0);
    CHECK(std::filesystem::exists(tc.path));
    const auto again = cli_run({"xi", "coeffs", "--nmax", "6"});
    CHECK(again.out == first.out);

    cli::CoeffCache c(tc.path.string());
    CHECK(c.loaded());
    double worst = 0.0;
    CHECK(c.audit(&worst));
    CHECK(worst <= 0.0);

    {
        std::ofstream f(tc.path, std::ios::trunc);
        f << "{ not json";
    }
    const auto rebuilt = cli_run({"xi", "coeffs", "--nmax", "6"});
    CHECK(rebuilt.code == 0);
    CHECK(rebuilt.out == first.out);

    {
        std::ofstream f(tc.path, std::ios::trunc);
        f << R"({"version": "fzzt-coeff-cache/0", "a2n": [[1.0, 0.0]]})";
    }
    cli::CoeffCache stale(tc.path.string());
    CHECK_FALSE(stale.loaded());
    CHECK(stale.a2n(0)[0].value == doctest::Approx(oracle::kA0).epsilon(1e-13));
}

TEST_CASE("figure 5: U is symmetric on its grid") {
    std::string header;
    const auto rows = csv_rows(figure(5), &header);
    CHECK(header == "phi,u");
    REQUIRE(rows.size() == 801);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = rows[rows.size() - 1 - i];
        CHECK(a[0] == -b[0]);
        CHECK(std::abs(a[1] - b[1]) <= 1e-10 * std::abs(a[1]));
    }
}

TEST_CASE("figure 1: sign changes bracket the Airy zeros") {
    const auto rows = csv_rows(figure(1));
    std::vector<double> crossings;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if ((rows[i - 1][1] < 0.0) != (rows[i][1] < 0.0)) crossings.push_back(rows[i][0]);
    REQUIRE(crossings.size() >= 3);
    // ascending x, so the zeros nearest the origin come last
    for (int k = 0; k < 3; ++k) {
        const double x = crossings[crossings.size() - 1 - k];
        CHECK(x >= oracle::kAiZeros[k]);
        CHECK(x - 0.01 - 1e-12 <= oracle::kAiZeros[k]);
    }
}

TEST_CASE("figure 4: the peaks of -log|Psi| lie on the real row") {
    std::string header;
    const auto rows = csv_rows(figure(4), &header);
    CHECK(header == "x,y,neg_log_abs_psi");
    const auto* best = &rows.front();
    for (const auto& r : rows)
        if (r[2] > (*best)[2]) best = &r;
    CHECK((*best)[1] == 0.0);
    CHECK((*best)[0] < 0.0);
}

TEST_CASE("selftest --filter charpoly") {
    const auto r = cli_run({"selftest", "--filter", "charpoly"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4/4 checks passed") != std::string::npos);
}

TEST_CASE("mp poly returns n+1 exact coefficients") {
    const auto r = cli_run({"mp", "poly", "--n", "8"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coeffs"].size() == 9);
}

TEST_CASE("every subcommand runs on a small input") {
    TempCache tc;
    const std::vector<std::vector<const char*>> cmds = {
        {"matrix", "--model", "31", "--n", "4"},
        {"eig", "--model", "mp", "--n", "8"},
        {"eig", "--model", "bmp", "--n", "2", "--b", "1,2,1"},
        {"fzzt-q", "--n", "4", "--s1", "1"},
        {"xi", "eval", "--z", "1", "--im", "0.5"},
        {"xi", "psi", "--z", "1", "--s1", "0"},
        {"mp", "eval", "--n", "5", "--z", "0.5"},
        {"mp", "integrals", "--nmax", "3"},
        {"scaling", "--model", "21", "--n-list", "8,16"},
    };
    for (const auto& c : cmds) {
        const auto r = cli_run(c);
        CHECK_MESSAGE(r.code == 0, c[0], " ", r.err);
        CHECK_NOTHROW((void)nlohmann::json::parse(r.out));
    }
}
