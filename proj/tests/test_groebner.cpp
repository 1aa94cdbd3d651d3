#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "flatlab/linalg.hpp"
#include "test_util.hpp"

using namespace flatlab;
using namespace flatlab::test;

namespace {

FreeModuleElement vec(const RingPtr& r, std::vector<std::string> entries) {
    std::vector<Polynomial> comps;
    for (const auto& e : entries) comps.push_back(P(r, e));
    return FreeModuleElement(std::move(comps));
}

std::set<std::string> basis_strings(const GroebnerBasis& gb) {
    std::set<std::string> out;
    for (const auto& g : gb.gens) out.insert(g.to_string());
    return out;
}

// Brute-force membership of v in the submodule generated by `gens` inside
// k[y]^p: compare spans of degree-bounded monomial multiples by exact rank.
bool member_by_linear_algebra(const FreeModuleElement& v,
                              const std::vector<FreeModuleElement>& gens, uint32_t maxdeg) {
    const RingPtr& r = v.ring();
    const size_t p = v.rank();

    std::vector<Monomial> mons;
    {
        std::vector<uint32_t> e(r->nvars(), 0);
        auto rec = [&](auto&& self, size_t var, uint32_t left) -> void {
            if (var + 1 >= e.size()) {
                if (!e.empty()) e[var] = left;
                mons.push_back(Monomial(e));
                if (!e.empty()) e[var] = 0;
                return;
            }
            for (uint32_t k = 0; k <= left; ++k) {
                e[var] = k;
                self(self, var + 1, left - k);
                e[var] = 0;
            }
        };
        for (uint32_t d = 0; d <= maxdeg; ++d) rec(rec, 0, d);
    }
    std::map<std::vector<uint32_t>, size_t> idx;
    for (size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k].exponents(), k);

    auto coords = [&](const FreeModuleElement& w, std::vector<Scalar>& row) -> bool {
        for (size_t c = 0; c < p; ++c)
            for (const auto& t : w.comp(c).terms()) {
                auto it = idx.find(t.mono.exponents());
                if (it == idx.end()) return false; // exceeds the degree window
                row[c * mons.size() + it->second] = t.coeff;
            }
        return true;
    };

    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : gens)
        for (const auto& mu : mons) {
            FreeModuleElement w = g.times_term(mu, Scalar::one(r->field));
            std::vector<Scalar> row(p * mons.size(), Scalar::zero(r->field));
            if (!coords(w, row)) continue; // drop multiples leaving the window
            rows.push_back(std::move(row));
        }

    DenseMatrix base(rows.size(), p * mons.size(), r->field);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < base.cols(); ++j) base.at(i, j) = rows[i][j];
    size_t rank_without = matrix_rank(base);

    std::vector<Scalar> vrow(p * mons.size(), Scalar::zero(r->field));
    REQUIRE(coords(v, vrow));
    DenseMatrix with(rows.size() + 1, p * mons.size(), r->field);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < with.cols(); ++j) with.at(i, j) = rows[i][j];
    for (size_t j = 0; j < with.cols(); ++j) with.at(rows.size(), j) = vrow[j];
    return matrix_rank(std::move(with)) == rank_without;
}

} // namespace

TEST_CASE("buchberger on principal and monomial ideals") {
    auto r = qring({"y"});
    auto gb = groebner_ideal({P(r, "y^2")}, r);
    REQUIRE(gb.gens.size() == 1);
    CHECK(gb.gens[0].comp(0) == P(r, "y^2"));

    auto r2 = qring({"y1", "y2"});
    auto gb2 = groebner_ideal({P(r2, "y1^2"), P(r2, "y1*y2"), P(r2, "y2^2")}, r2);
    CHECK(basis_strings(gb2) == std::set<std::string>{"(y1^2)", "(y1*y2)", "(y2^2)"});
}

TEST_CASE("buchberger trims a dependent module generator") {
    auto r = qring({"y"});
    std::vector<FreeModuleElement> gens{vec(r, {"y", "0"}), vec(r, {"0", "y"}),
                                        vec(r, {"y^2", "y^2"})};
    auto gb = buchberger(gens, 2, r);
    CHECK(basis_strings(gb) == std::set<std::string>{"(y, 0)", "(0, y)"});
}

TEST_CASE("normal form examples") {
    auto r = qring({"y"});
    auto gb = groebner_ideal({P(r, "y^2")}, r);
    CHECK(normal_form(P(r, "y^3"), gb).is_zero());
    CHECK(normal_form(P(r, "y^2+y"), gb) == P(r, "y"));

    std::vector<FreeModuleElement> gens{vec(r, {"y", "0"}), vec(r, {"0", "y"})};
    auto mgb = buchberger(gens, 2, r);
    CHECK(normal_form(vec(r, {"y^2", "y"}), mgb).is_zero());
    CHECK_THROWS_AS(normal_form(vec(r, {"y", "y", "y"}), mgb), Error);
}

TEST_CASE("standard monomials of Artinian quotients") {
    auto r = qring({"y"});
    CHECK(standard_monomials(groebner_ideal({P(r, "y^2")}, r), 1).size() == 2);
    CHECK(standard_monomials(groebner_ideal({P(r, "y^3")}, r), 1).size() == 3);

    auto r2 = qring({"y1", "y2"});
    auto sm = standard_monomials(
        groebner_ideal({P(r2, "y1^2"), P(r2, "y1*y2"), P(r2, "y2^2")}, r2), 1);
    CHECK(sm.size() == 3); // {1, y1, y2}

    // no pure power of y2 among the leading terms
    CHECK_THROWS_AS(standard_monomials(groebner_ideal({P(r2, "y1^2")}, r2), 1), Error);
}

TEST_CASE("syzygy examples from the worked quotients") {
    auto r = qring({"y"});
    SUBCASE("relation of y^2 over k[y]/(y^3)") {
        std::vector<FreeModuleElement> cols{vec(r, {"y^2"}), vec(r, {"y^3"})};
        auto syz = syzygy_basis(cols, r, 1);
        // projections to the first coordinate must produce (y)
        bool found = false;
        for (const auto& s : syz)
            if (s.comp(0) == P(r, "y") || s.comp(0) == P(r, "-y")) found = true;
        CHECK(found);
    }
    SUBCASE("relation of y over k[y]/(y^2)") {
        std::vector<FreeModuleElement> cols{vec(r, {"y"}), vec(r, {"y^2"})};
        auto syz = syzygy_basis(cols, r, 1);
        bool found = false;
        for (const auto& s : syz)
            if (s.comp(0) == P(r, "y") || s.comp(0) == P(r, "-y")) found = true;
        CHECK(found);
    }
    SUBCASE("free columns have no syzygies") {
        std::vector<FreeModuleElement> cols{vec(r, {"1", "0"}), vec(r, {"0", "1"})};
        CHECK(syzygy_basis(cols, r, 2).empty());
    }
}

TEST_CASE("syzygies substitute to zero") {
    auto r = qring({"y", "z"});
    Rng rng(21);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<FreeModuleElement> cols;
        size_t p = 1 + rng.below(2);
        size_t n = 1 + rng.below(4);
        for (size_t k = 0; k < n; ++k) {
            FreeModuleElement v(r, p);
            for (size_t c = 0; c < p; ++c) {
                std::vector<uint32_t> e(2, 0);
                uint32_t d = static_cast<uint32_t>(rng.below(3));
                for (uint32_t i = 0; i < d; ++i) e[rng.below(2)]++;
                long coef = static_cast<long>(rng.range(-2, 2));
                v.set_comp(c,
                           Polynomial::term(r, Monomial(e), Scalar::from_int(r->field, coef)));
            }
            if (!v.is_zero()) cols.push_back(v);
        }
        if (cols.empty()) continue;
        auto syz = syzygy_basis(cols, r, p);
        for (const auto& s : syz) {
            FreeModuleElement acc(r, p);
            for (size_t l = 0; l < cols.size(); ++l)
                for (size_t c = 0; c < p; ++c)
                    acc.set_comp(c, acc.comp(c) + s.comp(l) * cols[l].comp(c));
            REQUIRE(acc.is_zero());
        }
    }
}

TEST_CASE("normal form vanishes exactly on submodule members") {
    auto r = qring({"y", "z"});
    Rng rng(33);
    std::vector<std::vector<FreeModuleElement>> fixtures = {
        {vec(r, {"y^2"}), vec(r, {"y*z"}), vec(r, {"z^2"})},
        {vec(r, {"y^2 - z^2"}), vec(r, {"y*z"}), vec(r, {"z^3"})},
        {vec(r, {"y", "0"}), vec(r, {"0", "z"}), vec(r, {"z^2", "y^2"})},
    };
    for (const auto& gens : fixtures) {
        size_t p = gens[0].rank();
        auto gb = buchberger(gens, p, r);
        for (int iter = 0; iter < 60; ++iter) {
            FreeModuleElement v(r, p);
            if (rng.chance(1, 2)) {
                for (const auto& g : gens) {
                    std::vector<uint32_t> e(2, 0);
                    uint32_t d = static_cast<uint32_t>(rng.below(2));
                    for (uint32_t i = 0; i < d; ++i) e[rng.below(2)]++;
                    long coef = static_cast<long>(rng.range(-2, 2));
                    v = v + g.times_term(Monomial(e), Scalar::from_int(r->field, coef));
                }
            } else {
                for (size_t c = 0; c < p; ++c) {
                    std::vector<uint32_t> e(2, 0);
                    uint32_t d = static_cast<uint32_t>(rng.below(3));
                    for (uint32_t i = 0; i < d; ++i) e[rng.below(2)]++;
                    long coef = static_cast<long>(rng.range(-2, 2));
                    v.set_comp(
                        c, Polynomial::term(r, Monomial(e), Scalar::from_int(r->field, coef)));
                }
            }
            bool nf_zero = normal_form(v, gb).is_zero();
            bool member = member_by_linear_algebra(v, gens, 7);
            REQUIRE(nf_zero == member);
        }
    }
}

TEST_CASE("reduced basis is independent of generator order") {
    auto r = qring({"y", "z"});
    std::vector<std::vector<FreeModuleElement>> fixtures = {
        {vec(r, {"y^2 + z"}), vec(r, {"y*z - z"}), vec(r, {"z^2"})},
        {vec(r, {"y^3"}), vec(r, {"y*z"}), vec(r, {"z^2 - y^2"})},
        {vec(r, {"y", "z"}), vec(r, {"z", "y"}), vec(r, {"y^2", "0"})},
    };
    Rng rng(55);
    for (const auto& gens : fixtures) {
        size_t p = gens[0].rank();
        auto reference = basis_strings(buchberger(gens, p, r));
        for (int iter = 0; iter < 12; ++iter) {
            std::vector<FreeModuleElement> shuffled = gens;
            for (size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
            CHECK(basis_strings(buchberger(shuffled, p, r)) == reference);
        }
    }
}

TEST_CASE("every S-pair of the output reduces to zero") {
    auto r = qring({"y", "z"});
    std::vector<std::vector<FreeModuleElement>> fixtures = {
        {vec(r, {"y^2 - z^2"}), vec(r, {"y*z"})},
        {vec(r, {"y^2 + z^3"}), vec(r, {"z^4"})},
        {vec(r, {"y", "z"}), vec(r, {"z", "y"}), vec(r, {"z^3", "0"})},
    };
    for (const auto& gens : fixtures) {
        size_t p = gens[0].rank();
        auto gb = buchberger(gens, p, r);
        for (size_t i = 0; i < gb.gens.size(); ++i)
            for (size_t j = i + 1; j < gb.gens.size(); ++j) {
                const auto& [ci, mi] = gb.leads[i];
                const auto& [cj, mj] = gb.leads[j];
                if (ci != cj) continue;
                Monomial l = Monomial::lcm(mi, mj);
                FreeModuleElement s =
                    gb.gens[i].times_term(l.divided_by(mi), Scalar::one(r->field)) -
                    gb.gens[j].times_term(l.divided_by(mj), Scalar::one(r->field));
                REQUIRE(normal_form(s, gb).is_zero());
            }
    }
}

TEST_CASE("empty input yields an empty basis") {
    auto r = qring({"y"});
    auto gb = buchberger({}, 1, r);
    CHECK(gb.gens.empty());
    CHECK(normal_form(P(r, "y^2+1"), gb) == P(r, "y^2+1"));
}
