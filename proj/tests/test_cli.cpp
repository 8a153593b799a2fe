#include "cli.hpp"
#include "polycore/textio.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string f352 = "[2,-16,26,-10,-41,89,-87,52,-10]";
const std::string f355 = "[2,2,-4,19,12,8,-55,-45,5]";

// the table's row for one method, split into cells
std::vector<std::string> row(const std::string& table, const std::string& name) {
    std::istringstream is(table);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> cells;
        for (std::string c; ls >> c;) cells.push_back(c);
        if (!cells.empty() && cells[0] == name) return cells;
    }
    return {};
}

}  // namespace

TEST_CASE("bounds prints the combined table") {
    auto r = run({"bounds", f355, "--degree", "4"});
    REQUIRE(r.code == 0);
    const auto head = row(r.out, "Method");
    CHECK(head == std::vector<std::string>{"Method", "x^4", "x^3", "x^2", "x^1", "x^0", "Overall"});
    CHECK(row(r.out, "Combined").back() == "95");
    CHECK(row(r.out, "Binomial").back() == "178");
    CHECK(row(r.out, "Knuth-Cohen").size() == 7);

    r = run({"bounds", f352, "--degree", "4", "--methods", "mignotte"});
    REQUIRE(r.code == 0);
    CHECK(row(r.out, "Mignotte").back() == "200");
    CHECK(row(r.out, "Binomial").empty());
    CHECK(row(r.out, "Combined").back() == "200");
}

TEST_CASE("stdin input") {
    auto r = run({"bounds", "-", "--degree", "4"}, f355 + "\n");
    REQUIRE(r.code == 0);
    CHECK(row(r.out, "Combined").back() == "95");
}

TEST_CASE("cyclotomic height only") {
    auto r = run({"cyclotomic", "105", "--height-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    r = run({"cyclotomic", "12"});
    CHECK(r.out.find("x^4 - x^2 + 1") != std::string::npos);
}

TEST_CASE("json output is well formed") {
    auto r = run({"--json", "bounds", f355, "--degree", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["combined"]["overall"] == "95");
    CHECK(j["methods"].size() == 4);
    // the expression field and the coefficient list name the same polynomial
    CHECK(polycore::parse(j["poly"]["expr"].get<std::string>()) == polycore::from_json(j["poly"]));
    CHECK(polycore::from_json(j["poly"]) == polycore::parse(f355));

    r = run({"--json", "search-ratio", "--degree", "5", "--height-cap", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<nlohmann::json> docs;
    for (std::string line; std::getline(lines, line);) docs.push_back(nlohmann::json::parse(line));
    REQUIRE(docs.size() >= 3);
    CHECK(docs.front()["config"]["degree"] == 5);
    CHECK(docs.back()["summary"]["best"] == "2");
    CHECK(docs.back()["summary"]["maximizers"] == docs.size() - 2);
    for (std::size_t i = 1; i + 1 < docs.size(); ++i) {
        const auto& c = docs[i]["case"];
        CHECK(c["ratio"] == "2");
        for (const auto& g : c["factors"]) CHECK(polycore::parse(g["expr"].get<std::string>()) == polycore::from_json(g));
    }
}

TEST_CASE("threads do not change the output") {
    const std::vector<std::vector<std::string>> cmds = {
        {"search-ratio", "--degree", "8", "--height-cap", "4"},
        {"search-ratio", "--degree", "10", "--height-cap", "3", "--symmetry", "star"},
        {"xd1-max", "60"},
        {"cyclo-records", "--max-index", "5000"},
        {"verify", testing_support::fixture_dir()},
    };
    for (const auto& cmd : cmds) {
        auto one = cmd, many = cmd;
        one.insert(one.begin(), {"--threads", "1"});
        many.insert(many.begin(), {"--threads", "4"});
        const auto a = run(one), b = run(many);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify exit codes") {
    auto r = run({"verify", testing_support::fixture_dir()});
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 failures") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "fcb_cli_fixture";
    std::filesystem::create_directories(dir);
    const auto bad = dir / "bad.json";
    {
        std::ofstream out(bad);
        out << R"({"table": "t", "records": [{"id": "r1", "kind": "cyclotomic_height", "index": 105,
                   "index_factorization": [3, 5, 7], "expected": {"height": "3"}}]})";
    }
    r = run({"verify", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAIL  bad.json:r1") != std::string::npos);
    CHECK(r.err.find("bad.json:r1") != std::string::npos);

    {
        std::ofstream out(bad);
        out << "{ not json";
    }
    CHECK(run({"verify", bad.string()}).code == 2);
    std::filesystem::remove_all(dir);
    CHECK(run({"verify", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"bounds", "x^2+$", "--degree", "1"}).code == 1);
    CHECK(run({"bounds", f355}).code == 1);
    CHECK(run({"bounds", f355, "--degree", "9"}).code == 1);
    CHECK(run({"bounds", f355, "--degree", "4", "--methods", "lll"}).code == 1);
    CHECK(run({"--threads", "0", "xd1-max", "12"}).code == 1);
    CHECK(run({"search-ratio", "--degree", "5", "--height-cap", "2", "--splits", "2,3"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bounds") != std::string::npos);
}

TEST_CASE("other subcommands") {
    auto r = run({"xd1-max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("height 3\n", 0) == 0);
    r = run({"search-h1mult", "--n", "3", "--max-degree", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness of degree 6") != std::string::npos);
    r = run({"cyclo-records", "--max-index", "1000"});
    CHECK(r.out == "2  105\n3  385\n");
    r = run({"inflate", "[1,-2,1,0,-1,1,-1]", "[1,1,1,0,-1,-2,-1]", "--k", "13"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degree 168  height 1") != std::string::npos);
    r = run({"--json", "minmul", "x-1", "--dhat", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).dump().find("\"3/2\"") != std::string::npos);
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"sfbound", "[6,27,65,105,123,105,65,27,6]"},
             {"rootbound", f352},
             {"mahler", f352},
             {"family", "xek", "--exponents", "1,2,4,8"},
             {"family", "quadratic", "--n", "3"},
             {"family", "power", "--n", "4"},
             {"conjecture", "x^3+2x^2+2x+1", "--k", "3", "--samples", "64"}}) {
        INFO(cmd[0]);
        CHECK(run(cmd).code == 0);
        auto with_json = cmd;
        with_json.insert(with_json.begin(), "--json");
        r = run(with_json);
        CHECK(r.code == 0);
        CHECK_NOTHROW(nlohmann::json::parse(r.out));
    }
}
