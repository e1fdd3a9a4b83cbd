#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthex/parser.hpp"
#include "orthex/castling.hpp"
#include "orthex/tables.hpp"

using namespace orthex;

namespace {
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}  // namespace

TEST_CASE("the F5 document parses to the F5 triple") {
    const std::string text =
        "# diagram F5\n"
        "G = so(8) * so(3)\n"
        "H = so(7)[spin -> 1] * so(3)[id -> 2]\n"
        "V = phi(1)@1 (x) phi(1)@2\n";
    TripleSpec t = assemble_triple(parse_spec(text));
    CHECK(t == instantiate("F5"));
}

TEST_CASE("multiplicities, tensor pairs and raw weights") {
    const std::string text =
        "G = so(4) * sl(2)\n"  // so(4) is invalid and must be rejected
        "V = phi(1)@1\n";
    CHECK_THROWS_AS(parse_spec(text), SemanticError);

    const std::string f4 =
        "G = so(8)\n"
        "H = sp(4)[tensor -> 1] * sl(2)[tensor -> 1]\n"
        "V = phi(1)@1\n";
    TripleSpec t = assemble_triple(parse_spec(f4));
    CHECK(t == instantiate("F4"));

    const std::string raw =
        "G = sl(2)\n"
        "V = 2 * w(3)@1\n";
    TripleSpec r = assemble_triple(parse_spec(raw));
    CHECK(r.V.summands[0].mult == 2);
    CHECK(r.V.summands[0].slots[0] == Weight{3});
}

TEST_CASE("torus declarations and charges") {
    const std::string text =
        "G = sl(2) * torus(1)\n"
        "H = sl(2)[id -> 1] * torus(1)[map -> (1)]\n"
        "V = phi(1)@1 charge(1) + phi(1)@1 charge(-1) + triv charge(2)\n";
    TripleSpec t = assemble_triple(parse_spec(text));
    CHECK(t.G.torus_rank == 1);
    CHECK(t.emb.torus_map == std::vector<std::vector<long>>{{1}});
    REQUIRE(t.V.summands.size() == 3);
    CHECK(t.V.summands[0].charges == std::vector<long>{1});
    CHECK(t.V.summands[2].is_trivial() == false);  // charged trivial summand
}

TEST_CASE("errors carry their class") {
    // Syntax: broken token stream, with position info.
    try {
        parse_spec("G = so(8\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 8);
    }
    // Semantics: unknown factor reference.
    const std::string bad_ref =
        "G = so(8)\n"
        "V = phi(1)@2\n";
    CHECK_THROWS_AS(assemble_triple(parse_spec(bad_ref)), SemanticError);
    // Semantics: weight length mismatch.
    const std::string bad_w =
        "G = so(8)\n"
        "V = w(1,0)@1\n";
    CHECK_THROWS_AS(assemble_triple(parse_spec(bad_w)), SemanticError);
    // Semantics: empty module clause.
    CHECK_THROWS_AS(assemble_triple(parse_spec("G = so(8)\n")), SemanticError);
    // Semantics: phi out of range.
    CHECK_THROWS_AS(assemble_triple(parse_spec("G = so(3)\nV = phi(2)@1\n")), SemanticError);
}

TEST_CASE("tree documents") {
    const std::string text = "TREE: 0:1 1:2 2:inf ; edges 0-1 1-2\n";
    SpecDocument doc = parse_spec(text);
    REQUIRE(doc.tree.has_value());
    CHECK(doc.tree->weights == std::vector<long>{1, 2, WeightedTree::infinite});
    REQUIRE(doc.tree->edges.size() == 2);
    // Round trip.
    SpecDocument again = parse_spec(print_tree(*doc.tree));
    CHECK(again.tree->weights == doc.tree->weights);
    CHECK(again.tree->edges == doc.tree->edges);
}

TEST_CASE("printer round-trip on all instantiated diagrams") {
    for (const auto& entry : diagram_table()) {
        TripleSpec t = instantiate(entry.id);
        INFO("diagram " << entry.id);
        TripleSpec r = assemble_triple(parse_spec(print_triple(t)));
        CHECK(r == t);
        // And the printed form is a fixed point of parse-then-print.
        CHECK(print_triple(r) == print_triple(t));
    }
}

TEST_CASE("printer round-trip on the bundled corpus") {
    namespace fs = std::filesystem;
    fs::path corpus = fs::path(ORTHEX_SOURCE_DIR) / "corpus";
    REQUIRE(fs::exists(corpus));
    int count = 0;
    for (const auto& file : fs::directory_iterator(corpus)) {
        if (file.path().extension() != ".triple") continue;
        INFO("file " << file.path().string());
        SpecDocument doc = parse_spec(slurp(file.path()));
        TripleSpec t = assemble_triple(doc);
        TripleSpec r = assemble_triple(parse_spec(print_triple(t)));
        CHECK(r == t);
        ++count;
    }
    CHECK(count >= 37);
}

TEST_CASE("duals survive the round trip") {
    TripleSpec t = instantiate("L4");  // SL3 x SL2 in SL6
    TripleSpec r = castle_reduce(t);   // SL3 in SL3 via the dual defining module
    TripleSpec back = assemble_triple(parse_spec(print_triple(r)));
    CHECK(back == r);
}
