#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flatlab/groebner.hpp"

namespace flatlab {

class ArtinAlgebra;
using ArtinPtr = std::shared_ptr<const ArtinAlgebra>;

/// Ideal of A = k[y]/J with its colength and the combined basis of J + I.
struct IdealInA {
    std::vector<Polynomial> gens;         // normal forms mod J, zeros dropped
    size_t colength = 0;                  // dim_k A/I
    GroebnerBasis gb;                     // reduced basis of J + I in k[y]
    std::vector<Monomial> quotient_basis; // standard monomials of A/I

    bool is_zero_ideal() const { return gens.empty(); }
};

/// Subscheme cut out by m^(order+1).
struct InfinitesimalNeighborhood {
    size_t order;
    IdealInA ideal;
    size_t colength;
};

/// Local algebra A = k[y1..ys]/J supported at the origin. Artinian data
/// (length, nilpotency index, monomial basis) is present whenever the
/// quotient is finite-dimensional; the truncated factory tolerates
/// non-Artinian quotients for order-bounded analyses.
class ArtinAlgebra {
public:
    /// Strict factory: requires a finite-dimensional quotient supported at
    /// the origin. Throws NotLocalAtOrigin / NotArtinian.
    static ArtinPtr make(RingPtr ring, std::vector<Polynomial> jgens);
    /// Lenient factory for truncated-mode analysis; only rejects generators
    /// with a constant term.
    static ArtinPtr make_truncated(RingPtr ring, std::vector<Polynomial> jgens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& defining_ideal() const { return jgens_; }
    const GroebnerBasis& defining_basis() const { return jgb_; }

    bool artinian() const { return length_.has_value(); }
    size_t length() const;
    size_t nil_index() const;
    const std::vector<Monomial>& standard_basis() const;

    /// Normal form modulo J.
    Polynomial reduce(const Polynomial& p) const;

    /// Builds an ideal, computing colength and quotient basis. Throws
    /// UnitIdeal when 1 ∈ J + gens.
    IdealInA ideal(std::vector<Polynomial> gens) const;
    IdealInA zero_ideal() const { return ideal({}); }
    IdealInA maximal_ideal() const;
    /// m^j, generated by the degree-j monomials (j >= 1).
    IdealInA power_of_maximal(size_t j) const;
    InfinitesimalNeighborhood neighborhood(size_t n) const;

    /// All monomial-generated ideals of colength exactly c, deduplicated.
    std::vector<IdealInA> enumerate_monomial_ideals(size_t c) const;

    std::vector<Monomial> monomials_of_degree(uint32_t d) const;
    std::vector<Monomial> monomials_below_degree(uint32_t d) const;

private:
    ArtinAlgebra() = default;

    RingPtr ring_;
    std::vector<Polynomial> jgens_;
    GroebnerBasis jgb_;
    std::optional<size_t> length_;
    std::optional<size_t> nil_index_;
    std::vector<Monomial> std_basis_;
};

/// dim_k A/I (spec-level free function; the value is computed at ideal
/// construction).
size_t colength(const ArtinAlgebra& a, const IdealInA& i);

/// Ideal equality inside A, via uniqueness of the reduced basis of J + I.
bool same_ideal_in_a(const IdealInA& a, const IdealInA& b);

} // namespace flatlab
