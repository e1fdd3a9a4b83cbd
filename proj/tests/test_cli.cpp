#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthex/cli.hpp"

using namespace orthex;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path corpus(const std::string& name) { return fs::path(ORTHEX_SOURCE_DIR) / "corpus" / name; }

fs::path write_temp(const std::string& name, const std::string& text) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p);
    f << text;
    return p;
}

}  // namespace

TEST_CASE("classify a corpus file with verification") {
    auto r = run_cli({"classify", corpus("f5.triple").string(), "--verify", "--assume-maximal"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "exceptional");
    CHECK(j["nu"] == 3);
    CHECK(j["matched"] == "F5");
    CHECK(j["oracle"]["codim"] == 3);
}

TEST_CASE("identical inputs give byte-identical output") {
    auto a = run_cli({"classify", corpus("t7.triple").string(), "--verify", "--seed", "5"});
    auto b = run_cli({"classify", corpus("t7.triple").string(), "--verify", "--seed", "5"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("exit codes: error on malformed input, unknown on open verdicts") {
    auto missing = run_cli({"classify", "/nonexistent/file.triple"});
    CHECK(missing.code == 1);

    auto garbage = write_temp("orthex_garbage.triple", "G = so(8\nV = phi(1)@1\n");
    auto bad = run_cli({"classify", garbage.string()});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("syntax error") != std::string::npos);

    // A non-orthogonal two-summand input is outside every table route.
    auto open = write_temp("orthex_open.triple",
                           "G = sl(5)\n"
                           "H = sl(4)[phi1 -> 1]\n"
                           "V = phi(1)@1 + phi(2)@1\n");
    auto unknown = run_cli({"classify", open.string()});
    CHECK(unknown.code == 2);
    auto j = nlohmann::json::parse(unknown.out);
    CHECK(j["verdict"] == "unknown");
}

TEST_CASE("oracle subcommand on a trivial pair") {
    auto doc = write_temp("orthex_trivial.triple",
                          "G = so(8)\n"
                          "V = phi(1)@1\n");
    auto r = run_cli({"oracle", doc.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exceptional"] == true);
    CHECK(j["codim"] == 1);
}

TEST_CASE("castle subcommand reduces the L4 document") {
    auto r = run_cli({"castle", corpus("l4.triple").string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["module_dim_before"] == 6);
    CHECK(j["module_dim_after"] == 3);
}

TEST_CASE("factorize subcommand") {
    auto doc = write_temp("orthex_fact.triple",
                          "G = so(8)\n"
                          "H = so(7)[spin -> 1]\n"
                          "S = so(7)[phi1 -> 1]\n");
    auto r = run_cli({"factorize", doc.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["factorization"] == true);

    auto no = write_temp("orthex_fact_no.triple",
                         "G = so(7)\n"
                         "H = g(2)[phi1 -> 1]\n"
                         "S = so(5)[spin -> 1]\n");
    auto r2 = run_cli({"factorize", no.string()});
    REQUIRE(r2.code == 0);
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["factorization"] == false);
}

TEST_CASE("tree-check subcommand") {
    auto r = run_cli({"tree-check", corpus("tree_infleaf.tree").string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["predicate"] == true);
    CHECK(j["projection_full"] == true);
    CHECK(j["agree"] == true);

    auto r2 = run_cli({"tree-check", corpus("tree_star_fail.tree").string()});
    REQUIRE(r2.code == 0);
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["predicate"] == false);
    CHECK(j2["agree"] == true);
}

TEST_CASE("tables list, show and export") {
    auto all = run_cli({"tables"});
    REQUIRE(all.code == 0);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j["version"] == 1);
    CHECK(j["entries"].size() == diagram_table().size());

    auto a9 = run_cli({"tables", "--show", "A9"});
    REQUIRE(a9.code == 0);
    auto ja = nlohmann::json::parse(a9.out);
    CHECK(ja["degrees"] == nlohmann::json({2, 4, 6}));

    fs::path exp = fs::temp_directory_path() / "orthex_tables.json";
    auto ex = run_cli({"tables", "--export", exp.string()});
    REQUIRE(ex.code == 0);
    std::ifstream f(exp);
    REQUIRE(f.good());
    nlohmann::json je;
    f >> je;
    CHECK(je["version"] == 1);

    auto bad = run_cli({"tables", "--show", "Z9"});
    CHECK(bad.code == 1);
}

TEST_CASE("text rendering mentions the verdict") {
    auto r = run_cli({"classify", corpus("f2.triple").string(), "--text", "--assume-maximal"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("exceptional") != std::string::npos);
    CHECK(r.out.find("so(8)") != std::string::npos);
    CHECK(r.out.find("spin") != std::string::npos);
}
