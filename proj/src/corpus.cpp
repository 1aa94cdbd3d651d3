#include "flatlab/corpus.hpp"

#include <algorithm>

namespace flatlab {

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % n;
}

int64_t Rng::range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
}

const std::vector<AlgebraTemplate>& corpus_algebra_pool() {
    static const std::vector<AlgebraTemplate> pool = {
        {"A2", {"y"}, {"y^2"}, true},
        {"A3", {"y"}, {"y^3"}, true},
        {"A4", {"y"}, {"y^4"}, true},
        {"A6", {"y"}, {"y^6"}, true},
        {"B3", {"y", "z"}, {"y^2", "y*z", "z^2"}, true},
        {"B4", {"y", "z"}, {"y^2", "z^2"}, true},
        {"B6", {"y", "z"}, {"y^3", "z^2"}, true},
        {"B5", {"y", "z"}, {"y^3", "y^2*z", "z^2"}, true},
        {"Bbin", {"y", "z"}, {"y^2 - z^2", "y*z"}, false},
        {"Bmix", {"y", "z"}, {"y^2 + z^3", "z^4"}, false},
        {"C4", {"y", "z", "w"}, {"y^2", "y*z", "y*w", "z^2", "z*w", "w^2"}, true},
        {"C8", {"y", "z", "w"}, {"y^2", "z^2", "w^2"}, true},
        {"C5", {"y", "z", "w"}, {"y^3", "z^2", "w^2", "y*z", "y*w", "z*w"}, true},
    };
    return pool;
}

const std::vector<AlgebraTemplate>& free_suite_algebra_pool() {
    static const std::vector<AlgebraTemplate> pool = [] {
        std::vector<AlgebraTemplate> v;
        for (int k = 2; k <= 12; ++k)
            v.push_back({"U" + std::to_string(k),
                         {"y"},
                         {"y^" + std::to_string(k)},
                         true});
        v.push_back({"P3", {"y", "z"}, {"y^2", "y*z", "z^2"}, true});
        v.push_back({"P4", {"y", "z"}, {"y^2", "z^2"}, true});
        v.push_back({"P6", {"y", "z"}, {"y^3", "z^2"}, true});
        v.push_back({"P9", {"y", "z"}, {"y^3", "z^3"}, true});
        v.push_back({"P12", {"y", "z"}, {"y^4", "z^3"}, true});
        v.push_back({"Pbin", {"y", "z"}, {"y^2 - z^2", "y*z"}, false});
        v.push_back({"Q4", {"y", "z", "w"}, {"y^2", "y*z", "y*w", "z^2", "z*w", "w^2"}, true});
        v.push_back({"Q8", {"y", "z", "w"}, {"y^2", "z^2", "w^2"}, true});
        v.push_back({"Q8b", {"y", "z", "w"}, {"y^3", "z^2", "w^2", "y*z"}, true});
        return v;
    }();
    return pool;
}

ArtinPtr build_algebra(const AlgebraTemplate& t, FieldSpec field) {
    RingPtr ring = Ring::make(field, t.vars, MonomialOrder::degrevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : t.jgens) gens.push_back(parse_polynomial(ring, g));
    return ArtinAlgebra::make(ring, gens);
}

namespace {

// A random element of m: one or two terms of degree 1..maxdeg with unit-ish
// coefficients.
Polynomial random_m_element(Rng& rng, const RingPtr& ring, uint32_t maxdeg) {
    const size_t nv = ring->nvars();
    auto random_monomial = [&]() {
        uint32_t deg = static_cast<uint32_t>(rng.range(1, maxdeg));
        std::vector<uint32_t> e(nv, 0);
        for (uint32_t k = 0; k < deg; ++k) e[rng.below(nv)]++;
        return Monomial(e);
    };
    auto random_coeff = [&]() {
        long c = rng.chance(3, 4) ? 1 : 2;
        if (rng.chance(1, 2)) c = -c;
        return Scalar::from_int(ring->field, c);
    };
    std::vector<Polynomial::Term> terms;
    terms.push_back({random_monomial(), random_coeff()});
    if (rng.chance(3, 10)) terms.push_back({random_monomial(), random_coeff()});
    return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<std::vector<Polynomial>> random_columns(Rng& rng, const ArtinAlgebra& a, size_t p,
                                                    size_t q) {
    const RingPtr& ring = a.ring();
    uint32_t maxdeg = static_cast<uint32_t>(std::min<size_t>(3, a.nil_index()));
    if (maxdeg == 0) maxdeg = 1;
    std::vector<std::vector<Polynomial>> cols;
    for (size_t j = 0; j < q; ++j) {
        std::vector<Polynomial> col(p, Polynomial::zero(ring));
        for (size_t i = 0; i < p; ++i)
            if (rng.chance(7, 10)) col[i] = random_m_element(rng, ring, maxdeg);
        cols.push_back(std::move(col));
    }
    return cols;
}

// Presentation of a free module with decoy columns: J-multiples (zero in A)
// and unit-pivot columns, each of which eliminates one generator cleanly.
std::vector<std::vector<Polynomial>> disguised_free_columns(Rng& rng, const ArtinAlgebra& a,
                                                            size_t p, size_t pivots) {
    const RingPtr& ring = a.ring();
    std::vector<std::vector<Polynomial>> cols;
    size_t extra_j = rng.below(3);
    for (size_t k = 0; k < extra_j && !a.defining_ideal().empty(); ++k) {
        std::vector<Polynomial> col(p, Polynomial::zero(ring));
        const auto& jg = a.defining_ideal()[rng.below(a.defining_ideal().size())];
        Polynomial mult = rng.chance(1, 2)
                              ? Polynomial::constant(ring, 1)
                              : random_m_element(rng, ring, 1);
        col[rng.below(p)] = jg * mult;
        cols.push_back(std::move(col));
    }
    // Unit pivots occupy the trailing generators, one column each.
    for (size_t k = 0; k < pivots; ++k) {
        std::vector<Polynomial> col(p, Polynomial::zero(ring));
        size_t pivot = p - pivots + k;
        col[pivot] = Polynomial::constant(ring, 1);
        for (size_t i = 0; i < pivot; ++i)
            if (rng.chance(1, 2)) col[i] = random_m_element(rng, ring, 2);
        cols.push_back(std::move(col));
    }
    return cols;
}

ProblemFile case_problem(const AlgebraTemplate& t, FieldSpec field, const RingPtr& ring,
                         size_t rank, const std::vector<std::vector<Polynomial>>& cols) {
    ProblemFile pf;
    pf.field = field;
    pf.ring_decl.name = "A";
    pf.ring_decl.vars = t.vars;
    for (const auto& g : t.jgens) pf.ring_decl.jgens.push_back(parse_polynomial(ring, g));
    pf.affine_ring = ring;
    ModuleDecl md;
    md.name = "M";
    md.rank = rank;
    md.columns = cols;
    pf.module_decl = std::move(md);
    pf.source_text = print_problem(pf);
    return pf;
}

} // namespace

std::vector<CorpusCase> make_corpus(uint64_t seed, size_t count, FieldSpec field) {
    Rng rng(seed);
    const auto& pool = corpus_algebra_pool();

    // One algebra instance per template, shared across cases.
    std::vector<ArtinPtr> algebras;
    for (const auto& t : pool) algebras.push_back(build_algebra(t, field));

    std::vector<CorpusCase> out;
    for (size_t k = 0; k < count; ++k) {
        size_t ai = rng.below(pool.size());
        const ArtinPtr& a = algebras[ai];
        size_t p = 1 + rng.below(3);
        std::vector<std::vector<Polynomial>> cols;
        uint64_t kind = rng.below(10);
        if (kind < 2) {
            // genuinely free, possibly with zero-in-A decoy columns
            cols = disguised_free_columns(rng, *a, p, 0);
        } else if (kind < 4) {
            size_t pivots = 1 + rng.below(std::min<size_t>(p, 2));
            cols = disguised_free_columns(rng, *a, p, pivots);
        } else {
            cols = random_columns(rng, *a, p, rng.below(5));
        }
        ModulePresentation m = ModulePresentation::make(a, p, cols);
        CorpusCase c{
            "case_" + std::to_string(k),
            pool[ai],
            a,
            std::move(m),
            {},
        };
        c.dsl_text = print_problem(case_problem(pool[ai], field, a->ring(), p, cols));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<IdealInA> maximal_chain(const ArtinAlgebra& a, size_t j, Rng* rng) {
    if (j == 0) throw Error(Errc::InvalidArgument, "chain must start at a positive power");
    IdealInA top = a.power_of_maximal(j);

    // Standard monomials of A/m^j of degree >= 1, peeled by decreasing degree.
    std::vector<Monomial> peel;
    for (const auto& m : top.quotient_basis)
        if (m.degree() >= 1) peel.push_back(m);
    std::stable_sort(peel.begin(), peel.end(), [&](const Monomial& x, const Monomial& y) {
        return x.degree() > y.degree();
    });
    if (rng) {
        // shuffle within each degree block
        size_t lo = 0;
        while (lo < peel.size()) {
            size_t hi = lo;
            while (hi < peel.size() && peel[hi].degree() == peel[lo].degree()) ++hi;
            for (size_t i = hi - lo; i > 1; --i)
                std::swap(peel[lo + i - 1], peel[lo + rng->below(i)]);
            lo = hi;
        }
    }

    std::vector<Polynomial> gens;
    for (const auto& m : a.monomials_of_degree(static_cast<uint32_t>(j)))
        gens.push_back(Polynomial::term(a.ring(), m, Scalar::one(a.ring()->field)));
    std::vector<IdealInA> chain{std::move(top)};
    for (const auto& m : peel) {
        gens.push_back(Polynomial::term(a.ring(), m, Scalar::one(a.ring()->field)));
        chain.push_back(a.ideal(gens));
    }
    return chain;
}

} // namespace flatlab
