#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_util.hpp"

using namespace flatlab;
using namespace flatlab::test;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FLATLAB_FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemFile parse_ok(const std::string& text) {
    ParseResult r = parse_problem(text);
    if (!r.ok()) FAIL(r.diagnostic->render());
    return *r.problem;
}

Diagnostic parse_err(const std::string& text) {
    ParseResult r = parse_problem(text);
    REQUIRE(!r.ok());
    return *r.diagnostic;
}

} // namespace

TEST_CASE("parses the worked example fixture") {
    ProblemFile pf = parse_ok(fixture("example1.flt"));
    CHECK(pf.field.is_rational());
    CHECK(pf.ring_decl.name == "A");
    CHECK(pf.ring_decl.vars == std::vector<std::string>{"y"});
    REQUIRE(pf.ring_decl.jgens.size() == 1);
    CHECK(pf.ring_decl.jgens[0] == P(pf.affine_ring, "y^2"));
    REQUIRE(pf.module_decl);
    CHECK(pf.module_decl->rank == 1);
    REQUIRE(pf.module_decl->columns.size() == 1);
    CHECK(pf.module_decl->columns[0][0] == P(pf.affine_ring, "y"));
}

TEST_CASE("defining ideal with a constant term yields a diagnostic") {
    Diagnostic d = parse_err("ring A = k[y] / (y - 1)\n");
    CHECK(d.message.find("constant term") != std::string::npos);
    CHECK(d.message.find("local") != std::string::npos);
}

TEST_CASE("graded fixture round-trips through print") {
    ProblemFile pf = parse_ok(fixture("graded_nonflat.flt"));
    REQUIRE(pf.graded_decl);
    CHECK(pf.graded_decl->xvars == std::vector<std::string>{"x0", "x1"});
    CHECK(pf.graded_decl->degrees == std::vector<int64_t>{0});
    ProblemFile again = parse_ok(print_problem(pf));
    CHECK(pf.same_abstract_form(again));
}

TEST_CASE("parse -> print -> parse is the identity on the abstract form") {
    for (const char* name :
         {"example1.flt", "example2.flt", "free_rank3.flt", "graded_flat.flt",
          "graded_nonflat.flt", "line_p2.flt", "conic_p2.flt", "truncated.flt",
          "fp_example.flt"}) {
        ProblemFile pf = parse_ok(fixture(name));
        ProblemFile again = parse_ok(print_problem(pf));
        CHECK(pf.same_abstract_form(again));
        // printing is a fixed point from the second iteration on
        CHECK(print_problem(pf) == print_problem(again));
    }
    auto corpus = make_corpus(5, 40);
    for (const auto& c : corpus) {
        ProblemFile pf = parse_ok(c.dsl_text);
        ProblemFile again = parse_ok(print_problem(pf));
        CHECK(pf.same_abstract_form(again));
    }
}

TEST_CASE("syntax diagnostics carry positions and expectations") {
    Diagnostic d = parse_err("ring A = k[y] (y^2)\n");
    CHECK(d.line == 1);
    CHECK(d.col == 15);
    CHECK(d.expected == std::vector<std::string>{"'/'"});

    Diagnostic dunclosed = parse_err("ring A = k[y] / (y^2\n");
    CHECK(!dunclosed.expected.empty()); // reported at end of input

    Diagnostic d2 = parse_err("ring A = q[y] / (y^2)\n");
    CHECK(d2.expected == std::vector<std::string>{"'k'"});

    Diagnostic d3 = parse_err("bogus line\n");
    CHECK(d3.message.find("bogus") != std::string::npos);
    CHECK(d3.expected.size() == 5);
}

TEST_CASE("semantic diagnostics") {
    SUBCASE("unknown variable") {
        Diagnostic d = parse_err("ring A = k[y] / (z^2)\n");
        CHECK(d.message.find("unknown variable 'z'") != std::string::npos);
    }
    SUBCASE("unknown ring name") {
        Diagnostic d =
            parse_err("ring A = k[y] / (y^2)\nmodule M over B generators 1 relations []\n");
        CHECK(d.message.find("unknown ring 'B'") != std::string::npos);
    }
    SUBCASE("column length mismatch") {
        Diagnostic d = parse_err(
            "ring A = k[y] / (y^2)\nmodule M over A generators 2 relations [ [y] ]\n");
        CHECK(d.message.find("entries") != std::string::npos);
    }
    SUBCASE("inhomogeneous graded relation") {
        Diagnostic d = parse_err(
            "ring A = k[e] / (e^2)\n"
            "graded F over A xvars [x0, x1] degrees [0] relations [ [x0 + x1^2] ]\n");
        CHECK(d.message.find("x-homogeneous") != std::string::npos);
    }
    SUBCASE("composite Fp modulus") {
        Diagnostic d = parse_err("field Fp 6\nring A = k[y] / (y^2)\n");
        CHECK(d.message.find("not prime") != std::string::npos);
    }
    SUBCASE("duplicate declarations") {
        Diagnostic d = parse_err("ring A = k[y] / (y^2)\nring B = k[z] / (z^2)\n");
        CHECK(d.message.find("duplicate") != std::string::npos);
    }
    SUBCASE("missing ring") {
        Diagnostic d = parse_err("field Q\n");
        CHECK(d.message.find("missing ring") != std::string::npos);
    }
}

TEST_CASE("oversized expressions degrade to diagnostics, not crashes") {
    CHECK(!parse_problem("ring A = k[y] / (y^100000)\n").ok());
    CHECK(!parse_problem("ring A = k[y] / ((y+1)^9999)\n").ok());
    // deep nesting
    std::string deep = "ring A = k[y] / (";
    for (int i = 0; i < 100; ++i) deep += "(";
    deep += "y";
    for (int i = 0; i < 100; ++i) deep += ")";
    deep += ")\n";
    CHECK(!parse_problem(deep).ok());
}

TEST_CASE("expression syntax conveniences") {
    auto r = qring({"y", "z"});
    CHECK(P(r, "2y") == P(r, "2*y"));
    CHECK(P(r, "y z") == P(r, "y*z"));
    CHECK(P(r, "(y+z)^2") == P(r, "y^2 + 2*y*z + z^2"));
    CHECK(P(r, "1/2 y") == P(r, "y/2"));
    CHECK(P(r, "-y^2") == -P(r, "y^2"));
    CHECK_THROWS_AS(P(r, "y/z"), Error);   // division by a non-constant
    CHECK_THROWS_AS(P(r, "y/0"), Error);
    CHECK_THROWS_AS(P(r, "w"), Error);     // unknown variable
    CHECK(parse_polynomial_list(r, "y, z^2, y*z").size() == 3);
}

TEST_CASE("fuzzed inputs always produce a parse or a diagnostic") {
    Rng rng(2718);
    const std::string tokens =
        "ring module graded option field over generators relations xvars degrees mode window "
        "k Q Fp y z e x0 x1 = / ( ) [ ] , ^ * + - .. 0 1 2 9 # \n \t powers only enum truncated";
    std::vector<std::string> words;
    {
        std::string cur;
        for (char c : tokens) {
            if (c == ' ') {
                if (!cur.empty()) words.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) words.push_back(cur);
    }
    size_t parses = 0, diags = 0;
    for (int iter = 0; iter < 3000; ++iter) {
        std::string input;
        if (rng.chance(1, 2)) {
            // raw byte soup
            size_t len = rng.below(257);
            for (size_t i = 0; i < len; ++i)
                input += static_cast<char>(rng.below(256));
        } else {
            // token soup, far more likely to reach deep parser states
            size_t len = rng.below(40);
            for (size_t i = 0; i < len; ++i) {
                input += words[rng.below(words.size())];
                if (rng.chance(2, 3)) input += ' ';
            }
        }
        ParseResult r = parse_problem(input); // must not throw or crash
        if (r.ok())
            ++parses;
        else
            ++diags;
    }
    CHECK(parses + diags == 3000);
    CHECK(diags > 0);
}
