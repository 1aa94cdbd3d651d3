#include "flatlab/artin.hpp"

#include <algorithm>
#include <map>

namespace flatlab {

namespace {

void check_no_constant_term(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.constant_term().is_zero())
            throw Error(Errc::NotLocalAtOrigin,
                        "defining ideal generator has a nonzero constant term: " + g.to_string());
}

void enumerate_degree(size_t nvars, uint32_t d, size_t var, std::vector<uint32_t>& cur,
                      std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur[var] = d;
        out.push_back(Monomial(cur));
        cur[var] = 0;
        return;
    }
    for (uint32_t e = 0; e <= d; ++e) {
        cur[var] = e;
        enumerate_degree(nvars, d - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

} // namespace

std::vector<Monomial> ArtinAlgebra::monomials_of_degree(uint32_t d) const {
    size_t n = ring_->nvars();
    if (n == 0) {
        if (d == 0) return {Monomial::one(0)};
        return {};
    }
    std::vector<Monomial> out;
    std::vector<uint32_t> cur(n, 0);
    enumerate_degree(n, d, 0, cur, out);
    return out;
}

std::vector<Monomial> ArtinAlgebra::monomials_below_degree(uint32_t d) const {
    std::vector<Monomial> out;
    for (uint32_t k = 0; k < d; ++k) {
        auto layer = monomials_of_degree(k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

ArtinPtr ArtinAlgebra::make(RingPtr ring, std::vector<Polynomial> jgens) {
    check_no_constant_term(jgens);
    auto a = std::shared_ptr<ArtinAlgebra>(new ArtinAlgebra());
    a->ring_ = std::move(ring);
    a->jgens_ = std::move(jgens);
    for (const auto& g : a->jgens_) require_same_ring(a->ring_, g.ring());
    a->jgb_ = groebner_ideal(a->jgens_, a->ring_);

    std::vector<std::pair<size_t, Monomial>> sm;
    try {
        sm = standard_monomials(a->jgb_, 1);
    } catch (const Error& e) {
        if (e.code() == Errc::InfiniteDimensional)
            throw Error(Errc::NotArtinian, "quotient k[y]/J is not finite-dimensional");
        throw;
    }
    for (auto& [c, m] : sm) a->std_basis_.push_back(m);
    a->length_ = a->std_basis_.size();

    // Locality at the origin: some power of the maximal ideal must die in the
    // quotient; for a local Artinian ring of length L this happens by m^L.
    for (size_t n = 1; n <= *a->length_; ++n) {
        bool all_zero = true;
        for (const auto& mono : a->monomials_of_degree(static_cast<uint32_t>(n))) {
            Polynomial p = Polynomial::term(a->ring_, mono, Scalar::one(a->ring_->field));
            if (!normal_form(p, a->jgb_).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            a->nil_index_ = n;
            break;
        }
    }
    if (!a->nil_index_)
        throw Error(Errc::NotLocalAtOrigin,
                    "V(J) has points away from the origin; the quotient is not local");
    return a;
}

ArtinPtr ArtinAlgebra::make_truncated(RingPtr ring, std::vector<Polynomial> jgens) {
    check_no_constant_term(jgens);
    try {
        return make(ring, jgens);
    } catch (const Error& e) {
        if (e.code() != Errc::NotArtinian) throw;
    }
    auto a = std::shared_ptr<ArtinAlgebra>(new ArtinAlgebra());
    a->ring_ = std::move(ring);
    a->jgens_ = std::move(jgens);
    a->jgb_ = groebner_ideal(a->jgens_, a->ring_);
    return a;
}

size_t ArtinAlgebra::length() const {
    if (!length_) throw Error(Errc::NotArtinian, "algebra is not Artinian");
    return *length_;
}

size_t ArtinAlgebra::nil_index() const {
    if (!nil_index_) throw Error(Errc::NotArtinian, "algebra is not Artinian");
    return *nil_index_;
}

const std::vector<Monomial>& ArtinAlgebra::standard_basis() const {
    if (!length_) throw Error(Errc::NotArtinian, "algebra is not Artinian");
    return std_basis_;
}

Polynomial ArtinAlgebra::reduce(const Polynomial& p) const { return normal_form(p, jgb_); }

IdealInA ArtinAlgebra::ideal(std::vector<Polynomial> gens) const {
    IdealInA out;
    for (auto& g : gens) {
        require_same_ring(ring_, g.ring());
        Polynomial r = reduce(g);
        if (!r.is_zero()) out.gens.push_back(std::move(r));
    }
    std::vector<Polynomial> combined = jgens_;
    combined.insert(combined.end(), out.gens.begin(), out.gens.end());
    out.gb = groebner_ideal(combined, ring_);
    auto sm = standard_monomials(out.gb, 1); // may throw InfiniteDimensional
    for (auto& [c, m] : sm) out.quotient_basis.push_back(m);
    out.colength = out.quotient_basis.size();
    if (out.colength == 0) throw Error(Errc::UnitIdeal, "ideal contains a unit");
    return out;
}

IdealInA ArtinAlgebra::maximal_ideal() const {
    std::vector<Polynomial> gens;
    for (size_t v = 0; v < ring_->nvars(); ++v) gens.push_back(Polynomial::variable(ring_, v));
    return ideal(std::move(gens));
}

IdealInA ArtinAlgebra::power_of_maximal(size_t j) const {
    if (j == 0) throw Error(Errc::InvalidArgument, "m^0 is the unit ideal");
    std::vector<Polynomial> gens;
    for (const auto& mono : monomials_of_degree(static_cast<uint32_t>(j)))
        gens.push_back(Polynomial::term(ring_, mono, Scalar::one(ring_->field)));
    return ideal(std::move(gens));
}

InfinitesimalNeighborhood ArtinAlgebra::neighborhood(size_t n) const {
    IdealInA i = power_of_maximal(n + 1);
    size_t c = i.colength;
    return {n, std::move(i), c};
}

std::vector<IdealInA> ArtinAlgebra::enumerate_monomial_ideals(size_t c) const {
    if (!artinian()) throw Error(Errc::NotArtinian, "enumeration needs an Artinian algebra");
    if (c == 0 || c > length())
        throw Error(Errc::InvalidArgument, "colength out of range");

    // Candidate generators: monomials of degree 1..nilIndex-1 with nonzero
    // class, sorted ascending. Enumerating antichains under divisibility
    // covers every monomial-generated ideal.
    std::vector<Monomial> cands;
    for (uint32_t d = 1; d < nil_index(); ++d)
        for (const auto& m : monomials_of_degree(d)) {
            Polynomial p = Polynomial::term(ring_, m, Scalar::one(ring_->field));
            if (!reduce(p).is_zero()) cands.push_back(m);
        }

    std::map<std::string, IdealInA> found;
    auto consider = [&](const std::vector<Monomial>& antichain) {
        std::vector<Polynomial> gens;
        for (const auto& m : antichain)
            gens.push_back(Polynomial::term(ring_, m, Scalar::one(ring_->field)));
        IdealInA i = ideal(std::move(gens));
        size_t col = i.colength;
        if (col == c) {
            std::string sig;
            for (const auto& g : i.gb.gens) sig += g.to_string() + ";";
            found.emplace(std::move(sig), std::move(i));
        }
        return col; // for pruning
    };

    std::vector<Monomial> chosen;
    // Depth-first over antichains; adding generators only shrinks colength,
    // so subtrees below colength c are pruned.
    auto rec = [&](auto&& self, size_t start) -> void {
        for (size_t idx = start; idx < cands.size(); ++idx) {
            bool compatible = true;
            for (const auto& m : chosen)
                if (m.divides(cands[idx])) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(cands[idx]);
            size_t col = consider(chosen);
            if (col > c) self(self, idx + 1);
            chosen.pop_back();
        }
    };
    if (c == length()) consider({}); // the zero ideal
    rec(rec, 0);

    std::vector<IdealInA> out;
    for (auto& [sig, i] : found) out.push_back(std::move(i));
    std::sort(out.begin(), out.end(), [](const IdealInA& a, const IdealInA& b) {
        if (a.gens.size() != b.gens.size()) return a.gens.size() < b.gens.size();
        for (size_t k = 0; k < a.gens.size(); ++k) {
            auto sa = a.gens[k].to_string(), sb = b.gens[k].to_string();
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    return out;
}

size_t colength(const ArtinAlgebra&, const IdealInA& i) { return i.colength; }

bool same_ideal_in_a(const IdealInA& a, const IdealInA& b) { return a.gb.gens == b.gb.gens; }

} // namespace flatlab
