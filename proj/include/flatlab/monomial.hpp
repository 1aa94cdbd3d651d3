#pragma once

#include <cstdint>
#include <vector>

#include "flatlab/errors.hpp"

namespace flatlab {

/// Exponent vector with cached total degree. The ambient variable count is
/// fixed at construction; all arithmetic requires matching lengths.
class Monomial {
public:
    explicit Monomial(size_t nvars) : exps_(nvars, 0), degree_(0) {}
    explicit Monomial(std::vector<uint32_t> exps);

    static Monomial one(size_t nvars) { return Monomial(nvars); }
    static Monomial variable(size_t nvars, size_t idx, uint32_t e = 1);

    size_t nvars() const { return exps_.size(); }
    uint32_t degree() const { return degree_; }
    uint32_t operator[](size_t i) const { return exps_[i]; }
    const std::vector<uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    /// Total degree restricted to variables [lo, hi).
    uint32_t degree_range(size_t lo, size_t hi) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// *this / d; requires d.divides(*this).
    Monomial divided_by(const Monomial& d) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<uint32_t> exps_;
    uint32_t degree_;
};

/// Term orders. Degrevlex treats earlier variables as larger. The block order
/// splits the variables at x_start: the upper block [x_start, n) is compared
/// first (degrevlex), then the lower block — used for the bigraded ring where
/// the projective variables dominate.
struct MonomialOrder {
    enum class Kind { Degrevlex, Block };

    Kind kind = Kind::Degrevlex;
    size_t x_start = 0; // Block only

    /// +1 if a > b, 0 if equal, -1 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;

    static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
    static MonomialOrder block(size_t x_start) { return {Kind::Block, x_start}; }
};

} // namespace flatlab
