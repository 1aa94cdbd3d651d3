#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatlab/monomial.hpp"
#include "flatlab/scalar.hpp"

namespace flatlab {

/// Ambient polynomial ring: field, named variables, active term order.
/// Immutable and shared; every Polynomial points at its ring.
struct Ring {
    FieldSpec field;
    std::vector<std::string> vars;
    MonomialOrder order;

    size_t nvars() const { return vars.size(); }
    std::optional<size_t> var_index(std::string_view name) const;

    /// Variables [x_start, nvars) for block rings; nvars..nvars for degrevlex.
    size_t x_start() const { return order.kind == MonomialOrder::Kind::Block ? order.x_start : nvars(); }
    uint32_t xdeg(const Monomial& m) const { return m.degree_range(x_start(), nvars()); }
    uint32_t ydeg(const Monomial& m) const { return m.degree_range(0, x_start()); }

    static std::shared_ptr<const Ring> make(FieldSpec field, std::vector<std::string> names,
                                            MonomialOrder order);
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse multivariate polynomial in canonical form: terms sorted descending
/// by the ring's order, no zero coefficients.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Scalar coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, long n);
    static Polynomial term(RingPtr ring, Monomial m, Scalar c);
    static Polynomial variable(RingPtr ring, size_t idx, uint32_t e = 1);
    /// Canonicalizing constructor: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Order-maximal term; throws ZeroPolynomial on 0.
    const Term& leading_term() const;
    uint32_t degree() const; // total degree, 0 for the zero polynomial
    Scalar constant_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    /// c * m * (*this) in one pass.
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const; // divide by leading coefficient

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace flatlab
