#include "flatlab/graded.hpp"

#include <algorithm>
#include <map>

namespace flatlab {

namespace {

// Re-embed an affine polynomial into the bigraded ring (the y-variables come
// first there, in the same order).
Polynomial lift_poly(const Polynomial& p, const RingPtr& big) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : p.terms()) {
        std::vector<uint32_t> e(big->nvars(), 0);
        for (size_t v = 0; v < t.mono.nvars(); ++v) e[v] = t.mono[v];
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(big, std::move(terms));
}

void enumerate_exact_degree(size_t nvars, uint32_t d, std::vector<std::vector<uint32_t>>& out) {
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return;
    }
    std::vector<uint32_t> cur(nvars, 0);
    auto rec = [&](auto&& self, size_t var, uint32_t left) -> void {
        if (var + 1 == nvars) {
            cur[var] = left;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
            cur[var] = 0;
        }
    };
    rec(rec, 0, d);
}

} // namespace

RingPtr GradedModule::projective_ring(const ArtinAlgebra& base,
                                      const std::vector<std::string>& xvars) {
    if (xvars.empty()) throw Error(Errc::InvalidArgument, "need at least one x-variable");
    std::vector<std::string> names = base.ring()->vars;
    names.insert(names.end(), xvars.begin(), xvars.end());
    return Ring::make(base.ring()->field, std::move(names),
                      MonomialOrder::block(base.ring()->nvars()));
}

GradedModule GradedModule::make(ArtinPtr base, std::vector<std::string> xvars,
                                std::vector<int64_t> degrees,
                                std::vector<std::vector<Polynomial>> columns) {
    GradedModule gm;
    gm.base_ = std::move(base);
    gm.ring_ = projective_ring(*gm.base_, xvars);
    gm.xcount_ = xvars.size();
    gm.degrees_ = std::move(degrees);
    const size_t p = gm.degrees_.size();

    for (const auto& g : gm.base_->defining_ideal()) gm.jgens_big_.push_back(lift_poly(g, gm.ring_));

    for (auto& col : columns) {
        if (col.size() != p)
            throw Error(Errc::RankMismatch, "relation column length does not match the rank");
        std::optional<int64_t> coldeg;
        bool all_zero = true;
        for (size_t i = 0; i < p; ++i) {
            require_same_ring(gm.ring_, col[i].ring());
            if (col[i].is_zero()) continue;
            all_zero = false;
            for (const auto& t : col[i].terms()) {
                int64_t internal = static_cast<int64_t>(gm.ring_->xdeg(t.mono)) + gm.degrees_[i];
                if (!coldeg) coldeg = internal;
                if (*coldeg != internal)
                    throw Error(Errc::InhomogeneousRelation,
                                "relation column is not x-homogeneous: " + col[i].to_string());
            }
        }
        if (all_zero) continue;
        gm.columns_.push_back(std::move(col));
        gm.column_degrees_.push_back(*coldeg);
    }
    return gm;
}

GradedModule GradedModule::free_module(ArtinPtr base, std::vector<std::string> xvars,
                                       std::vector<int64_t> degrees) {
    return make(std::move(base), std::move(xvars), std::move(degrees), {});
}

GroebnerBasis graded_slice_basis(const GradedModule& gm, size_t n) {
    const size_t p = gm.rank();
    const RingPtr& ring = gm.ring();
    std::vector<FreeModuleElement> cols;
    for (const auto& col : gm.columns()) cols.emplace_back(col);
    for (const auto& g : gm.lifted_defining_ideal())
        for (size_t c = 0; c < p; ++c) cols.push_back(FreeModuleElement::unit_times(g, c, p));
    // m^(n+1) e_i: all y-monomials of degree n+1.
    std::vector<std::vector<uint32_t>> ydegs;
    size_t s = ring->x_start();
    enumerate_exact_degree(s, static_cast<uint32_t>(n + 1), ydegs);
    for (const auto& ye : ydegs) {
        std::vector<uint32_t> e(ring->nvars(), 0);
        for (size_t v = 0; v < s; ++v) e[v] = ye[v];
        Polynomial mono = Polynomial::term(ring, Monomial(std::move(e)), Scalar::one(ring->field));
        for (size_t c = 0; c < p; ++c) cols.push_back(FreeModuleElement::unit_times(mono, c, p));
    }
    return buchberger(std::move(cols), p, ring);
}

size_t graded_piece_dim(const GradedModule& gm, const GroebnerBasis& slice, size_t n, int64_t m) {
    const RingPtr& ring = gm.ring();
    const size_t s = ring->x_start();
    const size_t nx = gm.xcount();
    size_t count = 0;
    for (size_t i = 0; i < gm.rank(); ++i) {
        int64_t e = m - gm.degrees()[i];
        if (e < 0) continue;
        std::vector<Monomial> leads;
        for (size_t k = 0; k < slice.leads.size(); ++k)
            if (slice.leads[k].first == i) leads.push_back(slice.leads[k].second);

        std::vector<std::vector<uint32_t>> xparts;
        enumerate_exact_degree(nx, static_cast<uint32_t>(e), xparts);
        for (uint32_t yd = 0; yd <= n; ++yd) {
            std::vector<std::vector<uint32_t>> yparts;
            enumerate_exact_degree(s, yd, yparts);
            for (const auto& yp : yparts) {
                for (const auto& xp : xparts) {
                    std::vector<uint32_t> exps(ring->nvars(), 0);
                    for (size_t v = 0; v < s; ++v) exps[v] = yp[v];
                    for (size_t v = 0; v < nx; ++v) exps[s + v] = xp[v];
                    Monomial mono(std::move(exps));
                    bool standard = true;
                    for (const auto& l : leads)
                        if (l.divides(mono)) {
                            standard = false;
                            break;
                        }
                    if (standard) ++count;
                }
            }
        }
    }
    return count;
}

size_t graded_piece_dim(const GradedModule& gm, size_t n, int64_t m) {
    return graded_piece_dim(gm, graded_slice_basis(gm, n), n, m);
}

size_t graded_piece_dim_bruteforce(const GradedModule& gm, size_t n, int64_t m) {
    const RingPtr& ring = gm.ring();
    const size_t s = ring->x_start();
    const size_t nx = gm.xcount();
    const size_t p = gm.rank();
    const FieldSpec field = ring->field;

    // Explicit basis: (component, y-monomial of degree <= n, x-monomial of
    // degree m - d_i).
    std::vector<std::pair<size_t, Monomial>> basis;
    std::map<std::pair<size_t, std::vector<uint32_t>>, size_t> index;
    for (size_t i = 0; i < p; ++i) {
        int64_t e = m - gm.degrees()[i];
        if (e < 0) continue;
        std::vector<std::vector<uint32_t>> xparts;
        enumerate_exact_degree(nx, static_cast<uint32_t>(e), xparts);
        for (uint32_t yd = 0; yd <= n; ++yd) {
            std::vector<std::vector<uint32_t>> yparts;
            enumerate_exact_degree(s, yd, yparts);
            for (const auto& yp : yparts)
                for (const auto& xp : xparts) {
                    std::vector<uint32_t> exps(ring->nvars(), 0);
                    for (size_t v = 0; v < s; ++v) exps[v] = yp[v];
                    for (size_t v = 0; v < nx; ++v) exps[s + v] = xp[v];
                    index.emplace(std::make_pair(i, exps), basis.size());
                    basis.emplace_back(i, Monomial(std::move(exps)));
                }
        }
    }
    if (basis.empty()) return 0;

    // Sources: relation columns and lifted J per component, each with its
    // internal degree; multipliers run over matching x-degrees and y-degrees
    // up to n (higher y-parts die against m^(n+1)).
    struct Source {
        const std::vector<Polynomial>* col = nullptr;
        const Polynomial* jpoly = nullptr;
        size_t jcomp = 0;
        int64_t internal = 0;
    };
    std::vector<Source> sources;
    for (size_t j = 0; j < gm.columns().size(); ++j)
        sources.push_back({&gm.columns()[j], nullptr, 0, gm.column_degrees()[j]});
    for (const auto& g : gm.lifted_defining_ideal())
        for (size_t c = 0; c < p; ++c) sources.push_back({nullptr, &g, c, gm.degrees()[c]});

    std::vector<std::vector<Scalar>> rows;
    for (const auto& src : sources) {
        int64_t xneed = m - src.internal;
        if (xneed < 0) continue;
        std::vector<std::vector<uint32_t>> xparts;
        enumerate_exact_degree(nx, static_cast<uint32_t>(xneed), xparts);
        for (uint32_t yd = 0; yd <= n; ++yd) {
            std::vector<std::vector<uint32_t>> yparts;
            enumerate_exact_degree(s, yd, yparts);
            for (const auto& yp : yparts)
                for (const auto& xp : xparts) {
                    std::vector<uint32_t> exps(ring->nvars(), 0);
                    for (size_t v = 0; v < s; ++v) exps[v] = yp[v];
                    for (size_t v = 0; v < nx; ++v) exps[s + v] = xp[v];
                    Monomial mu(std::move(exps));
                    std::vector<Scalar> row(basis.size(), Scalar::zero(field));
                    bool nonzero = false;
                    for (size_t i = 0; i < p; ++i) {
                        const Polynomial* entry = nullptr;
                        if (src.col) {
                            entry = &(*src.col)[i];
                        } else if (src.jcomp == i) {
                            entry = src.jpoly;
                        }
                        if (!entry || entry->is_zero()) continue;
                        Polynomial prod = entry->times_term(mu, Scalar::one(field));
                        for (const auto& t : prod.terms()) {
                            if (ring->ydeg(t.mono) > n) continue; // killed by m^(n+1)
                            auto it = index.find(std::make_pair(i, t.mono.exponents()));
                            if (it == index.end())
                                throw Error(Errc::InvalidArgument,
                                            "inhomogeneous product in degree oracle");
                            row[it->second] = row[it->second] + t.coeff;
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        }
    }

    DenseMatrix mat(rows.size(), basis.size(), field);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < basis.size(); ++c) mat.at(r, c) = rows[r][c];
    return basis.size() - matrix_rank(std::move(mat));
}

namespace {

DegreeWindow default_window(const GradedModule& gm, const GroebnerBasis& slice) {
    const RingPtr& ring = gm.ring();
    int64_t top = 0;
    for (size_t k = 0; k < slice.leads.size(); ++k) {
        const auto& [comp, mono] = slice.leads[k];
        top = std::max(top,
                       static_cast<int64_t>(ring->xdeg(mono)) + gm.degrees()[comp]);
    }
    for (int64_t d : gm.degrees()) top = std::max(top, d);
    int64_t n = static_cast<int64_t>(gm.projective_dim());
    return {0, top + n + 2};
}

std::vector<mpq_class> newton_polynomial(const std::vector<size_t>& values, int64_t m0,
                                         size_t degree) {
    // forward differences at m0
    std::vector<mpq_class> diff;
    for (size_t k = 0; k <= degree; ++k) diff.emplace_back(static_cast<unsigned long>(values[k]));
    std::vector<std::vector<mpq_class>> table{diff};
    for (size_t j = 1; j <= degree; ++j) {
        std::vector<mpq_class> next;
        for (size_t k = 0; k + 1 < table.back().size(); ++k)
            next.push_back(table.back()[k + 1] - table.back()[k]);
        table.push_back(std::move(next));
    }

    std::vector<mpq_class> coeffs(degree + 1, mpq_class(0));
    std::vector<mpq_class> binom{mpq_class(1)}; // product_{r<j} (m - m0 - r) / j!
    mpz_class factorial(1);
    for (size_t j = 0; j <= degree; ++j) {
        if (j > 0) {
            // multiply by (m - (m0 + j - 1))
            std::vector<mpq_class> next(binom.size() + 1, mpq_class(0));
            mpq_class shift(-(m0 + static_cast<int64_t>(j) - 1));
            for (size_t k = 0; k < binom.size(); ++k) {
                next[k] += binom[k] * shift;
                next[k + 1] += binom[k];
            }
            binom = std::move(next);
            factorial *= static_cast<unsigned long>(j);
        }
        const mpq_class& dj = table[j][0];
        if (dj == 0) continue;
        mpq_class scale = dj / mpq_class(factorial);
        for (size_t k = 0; k < binom.size(); ++k) coeffs[k] += binom[k] * scale;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() == 1 && coeffs[0] == 0) coeffs.clear();
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, int64_t m) {
    mpq_class acc(0);
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * m + coeffs[k];
    return acc;
}

} // namespace

HilbertTable hilbert_table(const GradedModule& gm, size_t n, std::optional<DegreeWindow> window) {
    GroebnerBasis slice = graded_slice_basis(gm, n);
    DegreeWindow w = window ? *window : default_window(gm, slice);
    if (w.hi < w.lo) throw Error(Errc::InvalidArgument, "empty degree window");

    HilbertTable table;
    table.order = n;
    table.window = w;
    for (int64_t m = w.lo; m <= w.hi; ++m)
        table.values.push_back(graded_piece_dim(gm, slice, n, m));

    const size_t N = gm.projective_dim();

    // (N+1)-st forward differences of the window values.
    std::vector<std::vector<int64_t>> diffs;
    std::vector<int64_t> cur(table.values.begin(), table.values.end());
    for (size_t j = 0; j <= N + 1 && !cur.empty(); ++j) {
        diffs.push_back(cur);
        std::vector<int64_t> next;
        for (size_t k = 0; k + 1 < cur.size(); ++k) next.push_back(cur[k + 1] - cur[k]);
        cur = std::move(next);
    }
    if (diffs.size() < N + 2)
        throw Error(Errc::WindowTooSmall, "window shorter than the difference order");
    const std::vector<int64_t>& top = diffs[N + 1];

    // Smallest m0 whose whole difference tail vanishes, with at least N+2
    // window points from m0 on.
    std::optional<int64_t> threshold;
    for (size_t start = 0; start < top.size(); ++start) {
        bool all_zero = true;
        for (size_t k = start; k < top.size(); ++k)
            if (top[k] != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) continue;
        int64_t m0 = w.lo + static_cast<int64_t>(start);
        if (static_cast<size_t>(w.hi - m0 + 1) < N + 2) break; // tail too short
        threshold = m0;
        break;
    }
    if (!threshold)
        throw Error(Errc::WindowTooSmall,
                    "stabilization not certified in window [" + std::to_string(w.lo) + ", " +
                        std::to_string(w.hi) + "]; widen it");

    size_t off = static_cast<size_t>(*threshold - w.lo);
    std::vector<size_t> tail(table.values.begin() + off, table.values.end());
    table.polynomial = newton_polynomial(tail, *threshold, N);
    table.threshold = *threshold;
    table.stabilized = true;

    for (size_t k = 0; k < tail.size(); ++k) {
        int64_t m = *threshold + static_cast<int64_t>(k);
        if (eval_poly(table.polynomial, m) != mpq_class(static_cast<unsigned long>(tail[k])))
            throw Error(Errc::Disagreement, "interpolation failed to match the table (bug)");
    }
    return table;
}

VarpiPolynomial varpi_projective(const GradedModule& gm, size_t n,
                                 std::optional<DegreeWindow> window) {
    HilbertTable t = hilbert_table(gm, n, window);
    size_t col = gm.base()->neighborhood(n).colength;
    VarpiPolynomial v;
    v.order = n;
    v.threshold = t.threshold;
    for (const auto& c : t.polynomial) {
        mpq_class q = c / mpq_class(static_cast<unsigned long>(col));
        q.canonicalize();
        v.coeffs.push_back(std::move(q));
    }
    return v;
}

GradedVerdict projective_flat_verdict(const GradedModule& gm,
                                      std::optional<DegreeWindow> window) {
    const auto& a = *gm.base();
    if (!a.artinian())
        throw Error(Errc::ModeUnsupported, "projective verdicts need an Artinian base");
    GradedVerdict out;
    for (size_t n = 0; n < a.nil_index(); ++n) {
        out.profile.push_back(varpi_projective(gm, n, window));
        if (out.profile[n].coeffs != out.profile[0].coeffs && out.status == FlatStatus::Flat) {
            out.status = FlatStatus::NotFlat;
            out.witness = GradedWitness{n, out.profile[n].coeffs, out.profile[0].coeffs};
        }
    }
    return out;
}

} // namespace flatlab
