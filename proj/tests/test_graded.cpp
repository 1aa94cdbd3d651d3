#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatlab/graded.hpp"
#include "test_util.hpp"

using namespace flatlab;
using namespace flatlab::test;

namespace {

ArtinPtr dual_numbers() { return algebra(qring({"e"}), {"e^2"}); }

GradedModule graded_from(const ArtinPtr& base, std::vector<std::string> xvars,
                         std::vector<int64_t> degrees,
                         std::vector<std::vector<std::string>> cols) {
    RingPtr big = GradedModule::projective_ring(*base, xvars);
    std::vector<std::vector<Polynomial>> columns;
    for (const auto& col : cols) {
        std::vector<Polynomial> c;
        for (const auto& e : col) c.push_back(P(big, e));
        columns.push_back(std::move(c));
    }
    return GradedModule::make(base, std::move(xvars), std::move(degrees), std::move(columns));
}

ArtinPtr point_base() { return algebra(qring({"t"}), {"t"}); } // base = k

} // namespace

TEST_CASE("graded piece dimensions: free module over the dual numbers") {
    auto gm = GradedModule::free_module(dual_numbers(), {"x0", "x1"}, {0});
    CHECK(graded_piece_dim(gm, 1, 3) == 8); // 2 * (m+1)
    CHECK(graded_piece_dim(gm, 0, 3) == 4);
    CHECK(graded_piece_dim(gm, 1, 0) == 2);
}

TEST_CASE("graded piece dimensions: S/(e x0)") {
    auto gm = graded_from(dual_numbers(), {"x0", "x1"}, {0}, {{"e*x0"}});
    for (int64_t m = 0; m <= 5; ++m) {
        CHECK(graded_piece_dim(gm, 0, m) == static_cast<size_t>(m + 1));
        CHECK(graded_piece_dim(gm, 1, m) == static_cast<size_t>(m + 2));
        // brute-force per-degree elimination agrees
        CHECK(graded_piece_dim_bruteforce(gm, 0, m) == static_cast<size_t>(m + 1));
        CHECK(graded_piece_dim_bruteforce(gm, 1, m) == static_cast<size_t>(m + 2));
    }
}

TEST_CASE("dimension consistency between staircase and elimination oracle") {
    auto base = algebra(qring({"e", "f"}), {"e^2", "e*f", "f^2"});
    auto gm = graded_from(base, {"x0", "x1"}, {0, 1},
                          {{"e*x0^2", "f*x0"}, {"f*x1^2", "0"}});
    for (size_t n = 0; n < base->nil_index(); ++n)
        for (int64_t m = 0; m <= 4; ++m)
            CHECK(graded_piece_dim(gm, n, m) == graded_piece_dim_bruteforce(gm, n, m));
}

TEST_CASE("hilbert tables and stabilization") {
    SUBCASE("structure sheaf of P^1 over a point") {
        auto gm = GradedModule::free_module(point_base(), {"x0", "x1"}, {0});
        HilbertTable t = hilbert_table(gm, 0);
        REQUIRE(t.stabilized);
        CHECK(t.polynomial == std::vector<mpq_class>{Q(1), Q(1)}); // m+1
    }
    SUBCASE("line in P^2") {
        auto gm = graded_from(point_base(), {"x0", "x1", "x2"}, {0}, {{"x0"}});
        HilbertTable t = hilbert_table(gm, 0);
        CHECK(t.polynomial == std::vector<mpq_class>{Q(1), Q(1)}); // m+1
    }
    SUBCASE("S/(e x0) at order 1") {
        auto gm = graded_from(dual_numbers(), {"x0", "x1"}, {0}, {{"e*x0"}});
        HilbertTable t = hilbert_table(gm, 1, DegreeWindow{0, 4});
        REQUIRE(t.stabilized);
        CHECK(t.values == std::vector<size_t>{2, 3, 4, 5, 6});
        CHECK(t.polynomial == std::vector<mpq_class>{Q(2), Q(1)}); // m+2
    }
    SUBCASE("window too small") {
        auto gm = graded_from(point_base(), {"x0", "x1", "x2"}, {0}, {{"x0^3"}});
        CHECK_THROWS_AS(hilbert_table(gm, 0, DegreeWindow{0, 2}), Error);
    }
}

TEST_CASE("varpi polynomials") {
    SUBCASE("free rank 1 over the dual numbers: m+1 at both orders") {
        auto gm = GradedModule::free_module(dual_numbers(), {"x0", "x1"}, {0});
        auto v0 = varpi_projective(gm, 0);
        auto v1 = varpi_projective(gm, 1);
        CHECK(v0.coeffs == std::vector<mpq_class>{Q(1), Q(1)});
        CHECK(v1.coeffs == std::vector<mpq_class>{Q(1), Q(1)});
    }
    SUBCASE("S/(e x0): m+1 vs (m+2)/2") {
        auto gm = graded_from(dual_numbers(), {"x0", "x1"}, {0}, {{"e*x0"}});
        CHECK(varpi_projective(gm, 0).coeffs == std::vector<mpq_class>{Q(1), Q(1)});
        CHECK(varpi_projective(gm, 1).coeffs == std::vector<mpq_class>{Q(1), Q(1, 2)});
    }
    SUBCASE("one-point module: constant 1") {
        // structure sheaf of the point [1:0] in P^1 over the trivial base
        auto gm = graded_from(point_base(), {"x0", "x1"}, {0}, {{"x1"}});
        auto v = varpi_projective(gm, 0);
        CHECK(v.coeffs == std::vector<mpq_class>{Q(1)});
    }
    SUBCASE("module with finite support has the zero polynomial") {
        auto gm = graded_from(point_base(), {"x0", "x1"}, {0}, {{"x0"}, {"x1"}});
        auto v = varpi_projective(gm, 0);
        CHECK(v.coeffs.empty());
    }
}

TEST_CASE("projective flatness verdicts") {
    SUBCASE("free modules are flat") {
        for (size_t rank : {1u, 2u}) {
            std::vector<int64_t> degs(rank, 0);
            auto gm = GradedModule::free_module(dual_numbers(), {"x0", "x1"}, degs);
            auto v = projective_flat_verdict(gm);
            CHECK(v.status == FlatStatus::Flat);
        }
    }
    SUBCASE("S/(e x0) fails at order 1 with the two polynomials as witness") {
        auto gm = graded_from(dual_numbers(), {"x0", "x1"}, {0}, {{"e*x0"}});
        auto v = projective_flat_verdict(gm);
        CHECK(v.status == FlatStatus::NotFlat);
        REQUIRE(v.witness);
        CHECK(v.witness->order == 1);
        CHECK(v.witness->lhs == std::vector<mpq_class>{Q(1), Q(1, 2)});
        CHECK(v.witness->rhs == std::vector<mpq_class>{Q(1), Q(1)});
    }
    SUBCASE("S/(x0) over the dual numbers is flat") {
        auto gm = graded_from(dual_numbers(), {"x0", "x1"}, {0}, {{"x0"}});
        auto v = projective_flat_verdict(gm);
        CHECK(v.status == FlatStatus::Flat);
        // h(1, m) = 2 * h(0, m): proportional tables, constant polynomial 1
        for (int64_t m = 0; m <= 4; ++m)
            CHECK(graded_piece_dim(gm, 1, m) == 2 * graded_piece_dim(gm, 0, m));
        CHECK(v.profile[0].coeffs == std::vector<mpq_class>{Q(1)});
        CHECK(v.profile[1].coeffs == std::vector<mpq_class>{Q(1)});
    }
}

TEST_CASE("free modules scale by the neighborhood length") {
    auto base = algebra(qring({"e"}), {"e^3"});
    auto gm = GradedModule::free_module(base, {"x0", "x1"}, {0, -1});
    for (size_t n = 0; n < base->nil_index(); ++n) {
        size_t col = base->neighborhood(n).colength;
        for (int64_t m = 0; m <= 4; ++m)
            CHECK(graded_piece_dim(gm, n, m) == col * graded_piece_dim(gm, 0, m));
    }
}

TEST_CASE("polynomial degree is bounded by N and leading coefficients are positive") {
    auto base = dual_numbers();
    std::vector<GradedModule> fixtures;
    fixtures.push_back(GradedModule::free_module(base, {"x0", "x1"}, {0}));
    fixtures.push_back(graded_from(base, {"x0", "x1"}, {0}, {{"e*x0"}}));
    fixtures.push_back(graded_from(base, {"x0", "x1", "x2"}, {0}, {{"x0*x1 - x2^2"}}));
    fixtures.push_back(graded_from(point_base(), {"x0", "x1", "x2"}, {0}, {{"x0"}}));
    for (const auto& gm : fixtures) {
        for (size_t n = 0; n < gm.base()->nil_index(); ++n) {
            auto t = hilbert_table(gm, n);
            REQUIRE(!t.polynomial.empty());
            CHECK(t.polynomial.size() <= gm.projective_dim() + 1);
            CHECK(t.polynomial.back() > 0);
        }
    }
}

TEST_CASE("classical reduced-base checks") {
    SUBCASE("hyperplane in P^2 has Hilbert polynomial m+1") {
        auto gm = graded_from(point_base(), {"x0", "x1", "x2"}, {0}, {{"x0"}});
        auto v = projective_flat_verdict(gm);
        CHECK(v.status == FlatStatus::Flat); // one-point base: always flat
        REQUIRE(v.profile.size() == 1);
        CHECK(v.profile[0].coeffs == std::vector<mpq_class>{Q(1), Q(1)});
    }
    SUBCASE("conic in P^2 has Hilbert polynomial 2m+1") {
        auto gm = graded_from(point_base(), {"x0", "x1", "x2"}, {0}, {{"x0^2 - x1*x2"}});
        auto t = hilbert_table(gm, 0);
        CHECK(t.polynomial == std::vector<mpq_class>{Q(1), Q(2)});
        // confirmed degree by degree by the elimination oracle
        for (int64_t m = t.window.lo; m <= std::min<int64_t>(t.window.hi, 5); ++m)
            CHECK(graded_piece_dim_bruteforce(gm, 0, m) ==
                  t.values[static_cast<size_t>(m - t.window.lo)]);
    }
}

TEST_CASE("inhomogeneous relations are rejected") {
    auto base = dual_numbers();
    RingPtr big = GradedModule::projective_ring(*base, {"x0", "x1"});
    std::vector<std::vector<Polynomial>> cols{{P(big, "x0 + x1^2")}};
    CHECK_THROWS_AS(GradedModule::make(base, {"x0", "x1"}, {0}, cols), Error);
    // y-parts are unconstrained: e*x0^2 + x0^2 is x-homogeneous
    std::vector<std::vector<Polynomial>> ok{{P(big, "e*x0^2 + x0^2")}};
    CHECK_NOTHROW(GradedModule::make(base, {"x0", "x1"}, {0}, ok));
}

TEST_CASE("twisted generators shift the tables") {
    auto gm = GradedModule::free_module(point_base(), {"x0", "x1"}, {2});
    // h(m) = dim of degree-(m-2) forms
    CHECK(graded_piece_dim(gm, 0, 1) == 0);
    CHECK(graded_piece_dim(gm, 0, 2) == 1);
    CHECK(graded_piece_dim(gm, 0, 5) == 4);
    auto t = hilbert_table(gm, 0);
    CHECK(t.polynomial == std::vector<mpq_class>{Q(-1), Q(1)}); // m-1
}
