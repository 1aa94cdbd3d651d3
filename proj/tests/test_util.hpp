#pragma once

#include "flatlab/corpus.hpp"
#include "flatlab/dsl.hpp"

namespace flatlab::test {

inline RingPtr qring(std::vector<std::string> vars) {
    return Ring::make(FieldSpec{0}, std::move(vars), MonomialOrder::degrevlex());
}

inline RingPtr fpring(uint32_t p, std::vector<std::string> vars) {
    return Ring::make(FieldSpec{p}, std::move(vars), MonomialOrder::degrevlex());
}

/// Shorthand: parse an expression in the given ring.
inline Polynomial P(const RingPtr& r, std::string_view text) {
    return parse_polynomial(r, text);
}

inline ArtinPtr algebra(const RingPtr& r, std::initializer_list<std::string_view> gens) {
    std::vector<Polynomial> js;
    for (auto g : gens) js.push_back(P(r, g));
    return ArtinAlgebra::make(r, std::move(js));
}

/// coker of columns given as expression strings; column c = cols[c].
inline ModulePresentation module(const ArtinPtr& a, size_t rank,
                                 std::vector<std::vector<std::string>> cols) {
    std::vector<std::vector<Polynomial>> columns;
    for (const auto& col : cols) {
        std::vector<Polynomial> c;
        for (const auto& e : col) c.push_back(P(a->ring(), e));
        columns.push_back(std::move(c));
    }
    return ModulePresentation::make(a, rank, std::move(columns));
}

inline mpq_class Q(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace flatlab::test
