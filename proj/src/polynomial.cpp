#include "flatlab/polynomial.hpp"

#include <algorithm>
#include <map>

namespace flatlab {

std::optional<size_t> Ring::var_index(std::string_view name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

std::shared_ptr<const Ring> Ring::make(FieldSpec field, std::vector<std::string> names,
                                       MonomialOrder order) {
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw Error(Errc::InvalidArgument, "duplicate variable name '" + names[i] + "'");
    auto r = std::make_shared<Ring>();
    r->field = field;
    r->vars = std::move(names);
    r->order = order;
    return r;
}

bool same_ring(const Ring& a, const Ring& b) {
    return a.field == b.field && a.vars == b.vars && a.order == b.order;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !same_ring(*a, *b))
        throw Error(Errc::VariableMismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long n) {
    auto f = ring->field;
    return constant(std::move(ring), Scalar::from_int(f, n));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
    if (m.nvars() != ring->nvars()) throw Error(Errc::VariableMismatch, "monomial arity mismatch");
    if (c.field() != ring->field)
        throw Error(Errc::FieldMismatch, "coefficient field does not match the ring");
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t idx, uint32_t e) {
    auto f = ring->field;
    auto n = ring->nvars();
    return term(std::move(ring), Monomial::variable(n, idx, e), Scalar::one(f));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    struct MonoGreater {
        const Ring* ring;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ring->order.cmp(a, b) > 0;
        }
    };
    std::map<Monomial, Scalar, MonoGreater> acc{MonoGreater{ring.get()}};
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars())
            throw Error(Errc::VariableMismatch, "monomial arity mismatch");
        auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
        if (!fresh) it->second = it->second + t.coeff;
    }
    Polynomial p(ring);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of zero polynomial");
    return terms_.front();
}

uint32_t Polynomial::degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Scalar Polynomial::constant_term() const {
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Scalar::zero(ring_->field);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->order.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // multiplying every monomial by m preserves the order, so no re-sort
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(*ring_, *o.ring_)) return false;
    return terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Scalar c = t.coeff;
        if (i == 0) {
            if (c.is_negative()) {
                out += "-";
                c = -c;
            }
        } else {
            if (c.is_negative()) {
                out += " - ";
                c = -c;
            } else {
                out += " + ";
            }
        }
        bool coeff_shown = !c.is_one() || t.mono.is_one();
        if (coeff_shown) out += c.to_string();
        bool first_factor = !coeff_shown;
        for (size_t v = 0; v < t.mono.nvars(); ++v) {
            if (t.mono[v] == 0) continue;
            if (!first_factor) out += "*";
            out += ring_->vars[v];
            if (t.mono[v] > 1) out += "^" + std::to_string(t.mono[v]);
            first_factor = false;
        }
    }
    return out;
}

} // namespace flatlab
