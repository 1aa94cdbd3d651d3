#include "flatlab/monomial.hpp"

namespace flatlab {

namespace {

constexpr uint64_t kDegreeLimit = 1u << 30;

uint32_t checked_degree(uint64_t d) {
    if (d >= kDegreeLimit) throw Error(Errc::InvalidArgument, "monomial degree overflow");
    return static_cast<uint32_t>(d);
}

} // namespace

Monomial::Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {
    uint64_t d = 0;
    for (uint32_t e : exps_) d += e;
    degree_ = checked_degree(d);
}

Monomial Monomial::variable(size_t nvars, size_t idx, uint32_t e) {
    Monomial m(nvars);
    m.exps_.at(idx) = e;
    m.degree_ = e;
    return m;
}

uint32_t Monomial::degree_range(size_t lo, size_t hi) const {
    uint64_t d = 0;
    for (size_t i = lo; i < hi && i < exps_.size(); ++i) d += exps_[i];
    return static_cast<uint32_t>(d);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw Error(Errc::VariableMismatch, "monomial arity mismatch");
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    r.degree_ = checked_degree(uint64_t(degree_) + o.degree_);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial r(nvars());
    uint64_t deg = 0;
    for (size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] = exps_[i] - d.exps_[i];
        deg += r.exps_[i];
    }
    r.degree_ = static_cast<uint32_t>(deg);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    uint64_t deg = 0;
    for (size_t i = 0; i < a.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        deg += r.exps_[i];
    }
    r.degree_ = checked_degree(deg);
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

namespace {

// Degrevlex restricted to variables [lo, hi): higher total degree wins; on a
// tie, the rightmost variable where the exponents differ decides, with the
// smaller exponent winning.
int drl_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    uint32_t da = a.degree_range(lo, hi);
    uint32_t db = b.degree_range(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    size_t n = a.nvars();
    if (n != b.nvars()) throw Error(Errc::VariableMismatch, "monomial arity mismatch");
    if (kind == Kind::Degrevlex) return drl_range(a, b, 0, n);
    int r = drl_range(a, b, x_start, n);
    if (r != 0) return r;
    return drl_range(a, b, 0, x_start);
}

} // namespace flatlab
