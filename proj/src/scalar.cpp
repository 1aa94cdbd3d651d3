#include "flatlab/scalar.hpp"

namespace flatlab {

bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

mpz_class mod_reduce(const mpz_class& n, uint32_t p) {
    mpz_class r = n % p;
    if (r < 0) r += p;
    return r;
}

} // namespace

Scalar Scalar::from_int(FieldSpec f, long n) { return from_mpz(f, mpz_class(n)); }

Scalar Scalar::from_mpz(FieldSpec f, const mpz_class& n) {
    if (f.is_rational()) return Scalar(mpq_class(n), f);
    return Scalar(mpq_class(mod_reduce(n, f.characteristic)), f);
}

Scalar Scalar::from_fraction(FieldSpec f, const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q), f);
    }
    return from_mpz(f, num) / from_mpz(f, den);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw Error(Errc::FieldMismatch,
                    "scalar fields differ: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::reduced(mpq_class v) const {
    if (field_.is_rational()) return Scalar(std::move(v), field_);
    // Operands over F_p are integers, so sums/products stay integral.
    return Scalar(mpq_class(mod_reduce(v.get_num(), field_.characteristic)), field_);
}

Scalar Scalar::operator-() const { return reduced(-value_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return reduced(value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return reduced(value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return reduced(value_ * o.value_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (field_.is_rational()) return Scalar(1 / value_, field_);
    mpz_class r;
    mpz_class m(field_.characteristic);
    if (mpz_invert(r.get_mpz_t(), value_.get_num().get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(Errc::DivisionByZero, "non-invertible residue");
    return Scalar(mpq_class(r), field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return value_.get_num().get_str();
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string rational_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_pretty(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace flatlab
