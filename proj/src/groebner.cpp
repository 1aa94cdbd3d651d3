#include "flatlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flatlab {

FreeModuleElement::FreeModuleElement(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw Error(Errc::InvalidArgument, "module element needs a rank");
    ring_ = comps_[0].ring();
    for (const auto& p : comps_) require_same_ring(ring_, p.ring());
}

FreeModuleElement FreeModuleElement::unit_times(const Polynomial& p, size_t comp, size_t rank) {
    FreeModuleElement v(p.ring(), rank);
    v.set_comp(comp, p);
    return v;
}

void FreeModuleElement::set_comp(size_t i, Polynomial p) {
    require_same_ring(ring_, p.ring());
    comps_.at(i) = std::move(p);
}

bool FreeModuleElement::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
    if (rank() != o.rank()) throw Error(Errc::RankMismatch, "module ranks differ");
    FreeModuleElement r(ring_, rank());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
    if (rank() != o.rank()) throw Error(Errc::RankMismatch, "module ranks differ");
    FreeModuleElement r(ring_, rank());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

FreeModuleElement FreeModuleElement::times_term(const Monomial& m, const Scalar& c) const {
    FreeModuleElement r(ring_, rank());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].times_term(m, c);
    return r;
}

FreeModuleElement FreeModuleElement::scaled(const Scalar& c) const {
    FreeModuleElement r(ring_, rank());
    for (size_t i = 0; i < comps_.size(); ++i) r.comps_[i] = comps_[i].scaled(c);
    return r;
}

std::string FreeModuleElement::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ", ";
        out += comps_[i].to_string();
    }
    return out + ")";
}

std::optional<FreeModuleElement::ModTerm> leading_mod_term(const FreeModuleElement& v,
                                                           const ModuleOrder& ord) {
    std::optional<FreeModuleElement::ModTerm> best;
    for (size_t c = 0; c < v.rank(); ++c) {
        const Polynomial& p = v.comp(c);
        if (p.is_zero()) continue;
        const auto& lt = p.leading_term();
        if (!best || ord.cmp(c, lt.mono, best->comp, best->mono) > 0)
            best = FreeModuleElement::ModTerm{c, lt.mono, lt.coeff};
    }
    return best;
}

bool GroebnerBasis::contains_unit_component(size_t comp) const {
    for (const auto& [c, m] : leads)
        if (c == comp && m.is_one()) return true;
    return false;
}

namespace {

// Full reduction of v against a list of (monic or not) basis elements.
// Deterministic: scans candidates in list order, first dividing lead wins.
FreeModuleElement reduce_full(const FreeModuleElement& v,
                              const std::vector<FreeModuleElement>& basis,
                              const std::vector<std::pair<size_t, Monomial>>& leads,
                              const ModuleOrder& ord) {
    FreeModuleElement rem(v.ring(), v.rank());
    FreeModuleElement work = v;
    while (true) {
        auto lt = leading_mod_term(work, ord);
        if (!lt) break;
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const auto& [bc, bm] = leads[k];
            if (bc != lt->comp || !bm.divides(lt->mono)) continue;
            const Scalar& bcoeff = basis[k].comp(bc).leading_term().coeff;
            work = work - basis[k].times_term(lt->mono.divided_by(bm), lt->coeff / bcoeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible head term over to the remainder
            Polynomial t = Polynomial::term(work.ring(), lt->mono, lt->coeff);
            rem.set_comp(lt->comp, rem.comp(lt->comp) + t);
            work.set_comp(lt->comp, work.comp(lt->comp) - t);
        }
    }
    return rem;
}

struct PairKey {
    uint32_t deg; // total degree of the lcm
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis buchberger(std::vector<FreeModuleElement> gens, size_t rank, RingPtr ring) {
    ModuleOrder ord{ring->order, 0};
    return buchberger(std::move(gens), rank, std::move(ring), ord);
}

GroebnerBasis buchberger(std::vector<FreeModuleElement> input, size_t rank, RingPtr ring,
                         ModuleOrder ord) {
    std::vector<FreeModuleElement> g;
    std::vector<std::pair<size_t, Monomial>> leads;
    for (auto& v : input) {
        if (v.rank() != rank) throw Error(Errc::RankMismatch, "generator rank mismatch");
        require_same_ring(ring, v.ring());
        if (!v.is_zero()) {
            auto lt = leading_mod_term(v, ord);
            leads.emplace_back(lt->comp, lt->mono);
            g.push_back(std::move(v));
        }
    }

    std::set<PairKey> pending;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].first != leads[j].first) continue;
            Monomial l = Monomial::lcm(leads[i].second, leads[j].second);
            pending.insert({l.degree(), i, j});
        }
    };
    for (size_t j = 0; j < g.size(); ++j) add_pairs_for(j);

    auto pair_pending = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        Monomial l = Monomial::lcm(leads[a].second, leads[b].second);
        return pending.count({l.degree(), a, b}) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());

        const auto& [ci, mi] = leads[i];
        const auto& [cj, mj] = leads[j];
        Monomial l = Monomial::lcm(mi, mj);

        // Coprimality criterion, valid for ideals.
        if (rank == 1 && mi.coprime_with(mj)) continue;
        // Chain criterion.
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == i || k == j || leads[k].first != ci) continue;
            if (leads[k].second.divides(l) && !pair_pending(i, k) && !pair_pending(k, j))
                skip = true;
        }
        if (skip) continue;

        const Scalar& lci = g[i].comp(ci).leading_term().coeff;
        const Scalar& lcj = g[j].comp(cj).leading_term().coeff;
        FreeModuleElement s = g[i].times_term(l.divided_by(mi), lci.inverse()) -
                              g[j].times_term(l.divided_by(mj), lcj.inverse());
        FreeModuleElement r = reduce_full(s, g, leads, ord);
        if (!r.is_zero()) {
            auto lt = leading_mod_term(r, ord);
            g.push_back(r.scaled(lt->coeff.inverse()));
            leads.emplace_back(lt->comp, lt->mono);
            add_pairs_for(g.size() - 1);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another kept lead.
    std::vector<size_t> idx(g.size());
    for (size_t k = 0; k < g.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = ord.cmp(leads[a].first, leads[a].second, leads[b].first, leads[b].second);
        if (c != 0) return c < 0; // ascending lead
        return a < b;
    });
    std::vector<size_t> kept;
    for (size_t k : idx) {
        bool redundant = false;
        for (size_t h : kept)
            if (leads[h].first == leads[k].first && leads[h].second.divides(leads[k].second)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(k);
    }

    std::vector<FreeModuleElement> mins;
    std::vector<std::pair<size_t, Monomial>> minleads;
    for (size_t k : kept) {
        mins.push_back(g[k]);
        minleads.push_back(leads[k]);
    }

    // Tail-reduce every element against the others for the reduced basis.
    std::vector<FreeModuleElement> red;
    for (size_t k = 0; k < mins.size(); ++k) {
        std::vector<FreeModuleElement> others;
        std::vector<std::pair<size_t, Monomial>> olds;
        for (size_t h = 0; h < mins.size(); ++h)
            if (h != k) {
                others.push_back(mins[h]);
                olds.push_back(minleads[h]);
            }
        red.push_back(reduce_full(mins[k], others, olds, ord));
    }

    GroebnerBasis out;
    out.ring = ring;
    out.rank = rank;
    out.order = ord;
    std::vector<size_t> sorted(red.size());
    for (size_t k = 0; k < red.size(); ++k) sorted[k] = k;
    std::sort(sorted.begin(), sorted.end(), [&](size_t a, size_t b) {
        return ord.cmp(minleads[a].first, minleads[a].second, minleads[b].first,
                       minleads[b].second) > 0;
    });
    for (size_t k : sorted) {
        auto lt = leading_mod_term(red[k], ord);
        out.gens.push_back(red[k].scaled(lt->coeff.inverse()));
        out.leads.emplace_back(lt->comp, lt->mono);
    }
    return out;
}

FreeModuleElement normal_form(const FreeModuleElement& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.rank) throw Error(Errc::RankMismatch, "element rank mismatch");
    require_same_ring(v.ring(), gb.ring);
    return reduce_full(v, gb.gens, gb.leads, gb.order);
}

std::vector<std::pair<size_t, Monomial>> standard_monomials(const GroebnerBasis& gb, size_t rank) {
    const size_t n = gb.ring->nvars();
    std::vector<std::pair<size_t, Monomial>> out;
    for (size_t comp = 0; comp < rank; ++comp) {
        std::vector<Monomial> L;
        for (const auto& [c, m] : gb.leads)
            if (c == comp) L.push_back(m);
        bool dead = false;
        for (const auto& m : L)
            if (m.is_one()) dead = true;
        if (dead) continue;

        for (size_t v = 0; v < n; ++v) {
            bool has_pure_power = false;
            for (const auto& m : L) {
                if (m[v] == 0) continue;
                bool pure = true;
                for (size_t w = 0; w < n; ++w)
                    if (w != v && m[w] > 0) pure = false;
                if (pure) {
                    has_pure_power = true;
                    break;
                }
            }
            if (!has_pure_power)
                throw Error(Errc::InfiniteDimensional,
                            "quotient is not finite-dimensional (no pure power of " +
                                gb.ring->vars[v] + " in the leading terms)");
        }

        // Walk the staircase from 1; children of a non-standard monomial are
        // never standard, so the frontier stays under the staircase.
        std::set<std::vector<uint32_t>> seen;
        std::vector<Monomial> queue{Monomial::one(n)};
        seen.insert(queue[0].exponents());
        while (!queue.empty()) {
            Monomial m = queue.back();
            queue.pop_back();
            bool standard = true;
            for (const auto& l : L)
                if (l.divides(m)) {
                    standard = false;
                    break;
                }
            if (!standard) continue;
            out.emplace_back(comp, m);
            for (size_t v = 0; v < n; ++v) {
                Monomial next = m * Monomial::variable(n, v);
                if (seen.insert(next.exponents()).second) queue.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return gb.ring->order.cmp(a.second, b.second) < 0;
    });
    return out;
}

std::vector<FreeModuleElement> syzygy_basis(const std::vector<FreeModuleElement>& columns,
                                            RingPtr ring, size_t rank) {
    const size_t L = columns.size();
    if (L == 0) return {};
    std::vector<FreeModuleElement> embedded;
    for (size_t l = 0; l < L; ++l) {
        if (columns[l].rank() != rank) throw Error(Errc::RankMismatch, "column rank mismatch");
        FreeModuleElement v(ring, rank + L);
        for (size_t i = 0; i < rank; ++i) v.set_comp(i, columns[l].comp(i));
        v.set_comp(rank + l, Polynomial::constant(ring, 1));
        embedded.push_back(std::move(v));
    }
    ModuleOrder elim{ring->order, rank};
    GroebnerBasis gb = buchberger(std::move(embedded), rank + L, ring, elim);

    std::vector<FreeModuleElement> syz;
    for (const auto& gel : gb.gens) {
        bool first_block_zero = true;
        for (size_t i = 0; i < rank && first_block_zero; ++i)
            if (!gel.comp(i).is_zero()) first_block_zero = false;
        if (!first_block_zero) continue;
        FreeModuleElement s(ring, L);
        for (size_t l = 0; l < L; ++l) s.set_comp(l, gel.comp(rank + l));
        syz.push_back(std::move(s));
    }
    return syz;
}

GroebnerBasis groebner_ideal(const std::vector<Polynomial>& gens, RingPtr ring) {
    std::vector<FreeModuleElement> v;
    for (const auto& p : gens) v.push_back(FreeModuleElement::unit_times(p, 0, 1));
    return buchberger(std::move(v), 1, std::move(ring));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(FreeModuleElement::unit_times(p, 0, 1), gb).comp(0);
}

} // namespace flatlab
