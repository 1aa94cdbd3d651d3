#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "flatlab/errors.hpp"

namespace flatlab {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p, p < 2^31.
struct FieldSpec {
    uint32_t characteristic = 0; // 0 = Q

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const {
        return is_rational() ? "Q" : "F" + std::to_string(characteristic);
    }
};

/// Returns true iff p is prime (p < 2^31, trial division is plenty).
bool is_prime_u32(uint32_t p);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; F_p values are kept as the canonical residue in [0, p).
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(FieldSpec f) { return Scalar(mpq_class(0), f); }
    static Scalar one(FieldSpec f) { return from_int(f, 1); }
    static Scalar from_int(FieldSpec f, long n);
    static Scalar from_mpz(FieldSpec f, const mpz_class& n);
    /// num/den as a field element; den must be invertible.
    static Scalar from_fraction(FieldSpec f, const mpz_class& num, const mpz_class& den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True when the canonical form starts with a minus sign (always false over F_p).
    bool is_negative() const { return sgn(value_) < 0; }

    /// Underlying rational value (for Q) or integer residue (for F_p).
    const mpq_class& value() const { return value_; }

    std::string to_string() const;

private:
    Scalar(mpq_class v, FieldSpec f) : value_(std::move(v)), field_(f) {}
    void check_same_field(const Scalar& o) const;
    Scalar reduced(mpq_class v) const; // canonicalize into the field

    mpq_class value_;
    FieldSpec field_;
};

/// "num/den" with an explicit denominator, in lowest terms ("3/1", "-2/5").
std::string rational_string(const mpq_class& q);

/// Human-friendly rational rendering ("3", "-2/5").
std::string rational_pretty(const mpq_class& q);

} // namespace flatlab
