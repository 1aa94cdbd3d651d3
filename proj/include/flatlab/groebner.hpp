#pragma once

#include <optional>
#include <vector>

#include "flatlab/polynomial.hpp"

namespace flatlab {

/// Element of a free module R^p, stored as one polynomial per component.
class FreeModuleElement {
public:
    struct ModTerm {
        size_t comp;
        Monomial mono;
        Scalar coeff;
    };

    FreeModuleElement(RingPtr ring, size_t rank)
        : ring_(std::move(ring)), comps_(rank, Polynomial::zero(ring_)) {}
    explicit FreeModuleElement(std::vector<Polynomial> comps);

    /// v = p placed in component `comp` of a rank-`rank` module.
    static FreeModuleElement unit_times(const Polynomial& p, size_t comp, size_t rank);

    const RingPtr& ring() const { return ring_; }
    size_t rank() const { return comps_.size(); }
    const Polynomial& comp(size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& comps() const { return comps_; }
    void set_comp(size_t i, Polynomial p);

    bool is_zero() const;

    FreeModuleElement operator+(const FreeModuleElement& o) const;
    FreeModuleElement operator-(const FreeModuleElement& o) const;
    FreeModuleElement times_term(const Monomial& m, const Scalar& c) const;
    FreeModuleElement scaled(const Scalar& c) const;

    bool operator==(const FreeModuleElement& o) const { return comps_ == o.comps_; }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

/// Module term order: term-over-position with the lower component index
/// winning ties, so leading terms track the ring order uniformly across
/// components. elim_split > 0 makes components below the split dominate
/// outright (position-over-term between the two blocks) — the elimination
/// order used internally for syzygy computations.
struct ModuleOrder {
    MonomialOrder base;
    size_t elim_split = 0;

    int cmp(size_t c1, const Monomial& m1, size_t c2, const Monomial& m2) const {
        if (elim_split > 0) {
            bool a = c1 < elim_split, b = c2 < elim_split;
            if (a != b) return a ? 1 : -1;
        }
        int t = base.cmp(m1, m2);
        if (t != 0) return t;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }
};

/// Reduced Gröbner basis of a submodule of R^rank (rank 1 for ideals).
struct GroebnerBasis {
    RingPtr ring;
    size_t rank = 1;
    ModuleOrder order;
    std::vector<FreeModuleElement> gens;           // monic, tail-reduced, sorted by lead desc
    std::vector<std::pair<size_t, Monomial>> leads; // parallel to gens

    bool contains_unit_component(size_t comp) const;
};

/// The element's order-maximal term, or nullopt for 0.
std::optional<FreeModuleElement::ModTerm> leading_mod_term(const FreeModuleElement& v,
                                                           const ModuleOrder& ord);

/// Buchberger with the normal selection strategy and the standard pair
/// criteria (the coprimality shortcut is applied for ideals only, where it
/// is valid). Returns the reduced basis.
GroebnerBasis buchberger(std::vector<FreeModuleElement> gens, size_t rank, RingPtr ring);
GroebnerBasis buchberger(std::vector<FreeModuleElement> gens, size_t rank, RingPtr ring,
                         ModuleOrder order);

/// Full normal form: no term of the result is divisible by a basis lead.
FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& gb);

/// (component, monomial) pairs outside the leading-term module; their classes
/// are a k-basis of the quotient. Throws InfiniteDimensional when some
/// component's staircase is unbounded (pure-power detection).
std::vector<std::pair<size_t, Monomial>> standard_monomials(const GroebnerBasis& gb, size_t rank);

/// Generators of the relation module among the given columns, over the
/// polynomial ring. Computed by the block elimination order on the graph
/// module {(column_l, e_l)}.
std::vector<FreeModuleElement> syzygy_basis(const std::vector<FreeModuleElement>& columns,
                                            RingPtr ring, size_t rank);

// Ideal (rank-1) conveniences.
GroebnerBasis groebner_ideal(const std::vector<Polynomial>& gens, RingPtr ring);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

} // namespace flatlab
