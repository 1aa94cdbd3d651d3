#include "flatlab/module.hpp"

#include <algorithm>
#include <map>

namespace flatlab {

namespace {

std::vector<Monomial> monomials_below(const RingPtr& ring, uint32_t d) {
    std::vector<Monomial> out;
    if (ring->nvars() == 0) {
        if (d > 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<uint32_t> exps(ring->nvars(), 0);
    auto rec = [&](auto&& self, size_t var, uint32_t left) -> void {
        if (var + 1 == exps.size()) {
            exps[var] = left;
            out.push_back(Monomial(exps));
            exps[var] = 0;
            return;
        }
        for (uint32_t e = 0; e <= left; ++e) {
            exps[var] = e;
            self(self, var + 1, left - e);
            exps[var] = 0;
        }
    };
    for (uint32_t k = 0; k < d; ++k) rec(rec, 0, k);
    return out;
}

// Truncate below degree D.
Polynomial truncate_below(const Polynomial& p, uint32_t d) {
    std::vector<Polynomial::Term> kept;
    for (const auto& t : p.terms())
        if (t.mono.degree() < d) kept.push_back(t);
    return Polynomial::from_terms(p.ring(), std::move(kept));
}

struct MonoIndex {
    std::map<std::vector<uint32_t>, size_t> pos;
    explicit MonoIndex(const std::vector<Monomial>& basis) {
        for (size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k].exponents(), k);
    }
    size_t at(const Monomial& m) const {
        auto it = pos.find(m.exponents());
        if (it == pos.end()) throw Error(Errc::InvalidArgument, "monomial outside basis");
        return it->second;
    }
};

} // namespace

ModulePresentation ModulePresentation::make(ArtinPtr algebra, size_t rank,
                                            std::vector<std::vector<Polynomial>> columns) {
    ModulePresentation m;
    m.algebra_ = std::move(algebra);
    m.rank_ = rank;
    for (auto& col : columns) {
        if (col.size() != rank)
            throw Error(Errc::RankMismatch, "relation column length does not match the rank");
        std::vector<Polynomial> reduced;
        reduced.reserve(col.size());
        bool all_zero = true;
        for (auto& e : col) {
            require_same_ring(m.algebra_->ring(), e.ring());
            Polynomial r = m.algebra_->reduce(e);
            if (!r.is_zero()) all_zero = false;
            reduced.push_back(std::move(r));
        }
        if (!all_zero) m.columns_.push_back(std::move(reduced));
    }
    return m;
}

ModulePresentation ModulePresentation::free_module(ArtinPtr algebra, size_t rank) {
    return make(std::move(algebra), rank, {});
}

namespace {

// Columns of the defining submodule of k[y]^p: relations + J e_i + I e_i.
std::vector<FreeModuleElement> presentation_columns(const ModulePresentation& m,
                                                    const IdealInA& i) {
    const auto& a = *m.algebra();
    const size_t p = m.rank();
    std::vector<FreeModuleElement> cols;
    for (const auto& col : m.columns()) cols.emplace_back(col);
    for (const auto& g : a.defining_ideal())
        for (size_t c = 0; c < p; ++c) cols.push_back(FreeModuleElement::unit_times(g, c, p));
    for (const auto& g : i.gens)
        for (size_t c = 0; c < p; ++c) cols.push_back(FreeModuleElement::unit_times(g, c, p));
    return cols;
}

} // namespace

size_t fiber_dim(const ModulePresentation& m, const IdealInA& i) {
    const size_t p = m.rank();
    if (p == 0) return 0;
    auto gb = buchberger(presentation_columns(m, i), p, m.algebra()->ring());
    return standard_monomials(gb, p).size();
}

LocalStructure brute_force_local_structure(const RingPtr& ring,
                                           const std::vector<Polynomial>& jgens,
                                           size_t degree_cap) {
    auto quotient_dim = [&](uint32_t d) -> size_t {
        auto basis = monomials_below(ring, d);
        MonoIndex idx(basis);
        std::vector<std::vector<Scalar>> rows;
        for (const auto& g : jgens) {
            for (const auto& mu : basis) {
                Polynomial prod = truncate_below(g.times_term(mu, Scalar::one(ring->field)), d);
                if (prod.is_zero()) continue;
                std::vector<Scalar> row(basis.size(), Scalar::zero(ring->field));
                for (const auto& t : prod.terms()) row[idx.at(t.mono)] = t.coeff;
                rows.push_back(std::move(row));
            }
        }
        DenseMatrix mat(rows.size(), basis.size(), ring->field);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < basis.size(); ++c) mat.at(r, c) = rows[r][c];
        return basis.size() - matrix_rank(std::move(mat));
    };

    size_t prev = quotient_dim(1); // = 1
    for (uint32_t d = 1; d <= degree_cap; ++d) {
        size_t next = quotient_dim(d + 1);
        if (next == prev) return {true, prev, d};
        prev = next;
    }
    return {false, 0, 0};
}

size_t brute_force_fiber_dim(const ModulePresentation& m, const IdealInA& i) {
    const auto& a = *m.algebra();
    const RingPtr& ring = a.ring();
    const size_t p = m.rank();
    if (p == 0) return 0;

    LocalStructure ls = brute_force_local_structure(ring, a.defining_ideal());
    if (!ls.artinian) throw Error(Errc::NotArtinian, "oracle needs an Artinian algebra");
    const uint32_t d = static_cast<uint32_t>(ls.nil_index);

    auto basis = monomials_below(ring, d);
    MonoIndex idx(basis);
    const size_t b0 = basis.size();

    std::vector<std::vector<Polynomial>> sources = m.columns();
    for (const auto& g : a.defining_ideal())
        for (size_t c = 0; c < p; ++c) {
            std::vector<Polynomial> col(p, Polynomial::zero(ring));
            col[c] = g;
            sources.push_back(std::move(col));
        }
    for (const auto& g : i.gens)
        for (size_t c = 0; c < p; ++c) {
            std::vector<Polynomial> col(p, Polynomial::zero(ring));
            col[c] = g;
            sources.push_back(std::move(col));
        }

    std::vector<std::vector<Scalar>> rows;
    for (const auto& w : sources) {
        for (const auto& mu : basis) {
            std::vector<Scalar> row(p * b0, Scalar::zero(ring->field));
            bool nonzero = false;
            for (size_t c = 0; c < p; ++c) {
                if (w[c].is_zero()) continue;
                Polynomial prod = truncate_below(w[c].times_term(mu, Scalar::one(ring->field)), d);
                for (const auto& t : prod.terms()) {
                    row[c * b0 + idx.at(t.mono)] = t.coeff;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    DenseMatrix mat(rows.size(), p * b0, ring->field);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < p * b0; ++c) mat.at(r, c) = rows[r][c];
    return p * b0 - matrix_rank(std::move(mat));
}

size_t minimal_generator_count(const ModulePresentation& m) {
    if (m.rank() == 0) return 0;
    return fiber_dim(m, m.algebra()->maximal_ideal());
}

namespace {

// k-linear expansion of a list of module columns against the quotient B=A/I:
// one matrix row per (column, basis monomial) pair, coordinates over
// (component, basis monomial). Returns the rank.
size_t expanded_rank(const std::vector<std::vector<Polynomial>>& columns, size_t target_rank,
                     const IdealInA& i, const RingPtr& ring) {
    const auto& basis = i.quotient_basis;
    MonoIndex idx(basis);
    const size_t nb = basis.size();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& col : columns) {
        for (const auto& nu : basis) {
            std::vector<Scalar> row(target_rank * nb, Scalar::zero(ring->field));
            bool nonzero = false;
            for (size_t c = 0; c < target_rank; ++c) {
                if (col[c].is_zero()) continue;
                Polynomial red =
                    normal_form(col[c].times_term(nu, Scalar::one(ring->field)), i.gb);
                for (const auto& t : red.terms()) {
                    row[c * nb + idx.at(t.mono)] = t.coeff;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    DenseMatrix mat(rows.size(), target_rank * nb, ring->field);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = rows[r][c];
    return matrix_rank(std::move(mat));
}

// Syzygies over A of the given rank-`rank` columns: adjoin J e_i, compute
// syzygies over k[y], project onto the original coordinates.
std::vector<std::vector<Polynomial>> syzygies_over_a(
    const std::vector<std::vector<Polynomial>>& columns, size_t rank, const ArtinAlgebra& a) {
    const RingPtr& ring = a.ring();
    std::vector<FreeModuleElement> cols;
    for (const auto& c : columns) cols.emplace_back(c);
    size_t q = cols.size();
    for (const auto& g : a.defining_ideal())
        for (size_t c = 0; c < rank; ++c) cols.push_back(FreeModuleElement::unit_times(g, c, rank));
    auto syz = syzygy_basis(cols, ring, rank);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& s : syz) {
        std::vector<Polynomial> head;
        bool nonzero = false;
        for (size_t l = 0; l < q; ++l) {
            Polynomial r = a.reduce(s.comp(l));
            if (!r.is_zero()) nonzero = true;
            head.push_back(std::move(r));
        }
        if (nonzero) out.push_back(std::move(head));
    }
    return out;
}

} // namespace

size_t tor1_dim(const ModulePresentation& m, const IdealInA& i) {
    const auto& a = *m.algebra();
    const size_t p = m.rank();
    const size_t q = m.columns().size();
    if (p == 0 || q == 0) return 0; // free (or zero) module

    const size_t nb = i.colength;
    size_t rank_phi = expanded_rank(m.columns(), p, i, a.ring());
    size_t ker_phi = q * nb - rank_phi;

    auto psi = syzygies_over_a(m.columns(), p, a);
    size_t im_psi = psi.empty() ? 0 : expanded_rank(psi, q, i, a.ring());
    if (im_psi > ker_phi)
        throw Error(Errc::Disagreement, "Tor computation produced im > ker (internal bug)");
    return ker_phi - im_psi;
}

MilneWitness milne_injectivity_witness(const ModulePresentation& m, const IdealInA& i) {
    const auto& a = *m.algebra();
    const size_t p = m.rank();
    size_t via_tor = tor1_dim(m, i);

    size_t via_tensor = 0;
    const size_t r = i.gens.size();
    if (r > 0 && p > 0) {
        // Presentation of I ⊗ M on r·p generators: M's relations per block
        // plus syzygies of the ideal generators spread across blocks.
        std::vector<std::vector<Polynomial>> igen_cols;
        for (const auto& g : i.gens) igen_cols.push_back({g});
        auto sigma = syzygies_over_a(igen_cols, 1, a);

        std::vector<std::vector<Polynomial>> cols;
        for (size_t l = 0; l < r; ++l)
            for (const auto& mcol : m.columns()) {
                std::vector<Polynomial> v(r * p, Polynomial::zero(a.ring()));
                for (size_t c = 0; c < p; ++c) v[l * p + c] = mcol[c];
                cols.push_back(std::move(v));
            }
        for (const auto& s : sigma)
            for (size_t c = 0; c < p; ++c) {
                std::vector<Polynomial> v(r * p, Polynomial::zero(a.ring()));
                for (size_t l = 0; l < r; ++l) v[l * p + c] = s[l];
                cols.push_back(std::move(v));
            }
        ModulePresentation tensor = ModulePresentation::make(m.algebra(), r * p, std::move(cols));
        size_t dim_tensor = fiber_dim(tensor, a.zero_ideal());
        size_t dim_im = fiber_dim(m, a.zero_ideal()) - fiber_dim(m, i);
        via_tensor = dim_tensor - dim_im;
    }

    if (via_tor != via_tensor)
        throw Error(Errc::Disagreement, "Milne kernel paths disagree: Tor route " +
                                            std::to_string(via_tor) + ", tensor route " +
                                            std::to_string(via_tensor));
    return {via_tor, via_tor, via_tensor};
}

} // namespace flatlab
