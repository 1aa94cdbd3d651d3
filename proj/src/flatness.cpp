#include "flatlab/flatness.hpp"

namespace flatlab {

const char* flat_status_name(FlatStatus s) {
    switch (s) {
        case FlatStatus::Flat: return "Flat";
        case FlatStatus::NotFlat: return "NotFlat";
        case FlatStatus::FlatUpToOrder: return "FlatUpToOrder";
    }
    return "?";
}

namespace {

ProfileRow profile_row(const ModulePresentation& m, size_t n) {
    InfinitesimalNeighborhood nb = m.algebra()->neighborhood(n);
    size_t f = fiber_dim(m, nb.ideal);
    mpq_class v(static_cast<unsigned long>(f), static_cast<unsigned long>(nb.colength));
    v.canonicalize();
    return {n, nb.colength, f, v};
}

} // namespace

mpq_class varpi_affine(const ModulePresentation& m, size_t n) { return profile_row(m, n).varpi; }

InfinitesimalProfile infinitesimal_profile(const ModulePresentation& m) {
    size_t nil = m.algebra()->nil_index(); // throws NotArtinian when unbounded
    InfinitesimalProfile prof;
    for (size_t n = 0; n < nil; ++n) prof.rows.push_back(profile_row(m, n));
    return prof;
}

FlatnessVerdict flat_verdict(const ModulePresentation& m, const AnalysisMode& mode) {
    const auto& a = *m.algebra();
    FlatnessVerdict out;

    if (mode.kind != AnalysisMode::Kind::Truncated && !a.artinian())
        throw Error(Errc::ModeUnsupported,
                    "definitive verdicts need an Artinian base; use truncated mode");

    size_t top_order =
        mode.kind == AnalysisMode::Kind::Truncated ? mode.limit : a.nil_index() - 1;
    for (size_t n = 0; n <= top_order; ++n) out.profile.rows.push_back(profile_row(m, n));

    const mpq_class& expected = out.profile.rows.front().varpi; // = minimal generator count
    for (const auto& row : out.profile.rows) {
        if (row.varpi != expected) {
            out.status = FlatStatus::NotFlat;
            out.witness = Witness{row.order, std::nullopt, row.varpi, expected};
            return out;
        }
    }

    if (mode.kind == AnalysisMode::Kind::Enumeration) {
        size_t mingens = out.profile.rows.front().fiber;
        size_t c_max = std::min<size_t>(mode.limit, a.length());
        for (size_t c = 1; c <= c_max; ++c) {
            for (auto& ideal : a.enumerate_monomial_ideals(c)) {
                size_t f = fiber_dim(m, ideal);
                if (f != c * mingens) {
                    mpq_class lhs(static_cast<unsigned long>(f), static_cast<unsigned long>(c));
                    lhs.canonicalize();
                    out.status = FlatStatus::NotFlat;
                    out.witness = Witness{std::nullopt, std::move(ideal), lhs, expected};
                    return out;
                }
            }
        }
    }

    if (mode.kind == AnalysisMode::Kind::Truncated) {
        out.status = FlatStatus::FlatUpToOrder;
        out.up_to_order = mode.limit;
    } else {
        out.status = FlatStatus::Flat;
    }
    return out;
}

CrossValidation cross_validate(const ModulePresentation& m) {
    FlatnessVerdict v = flat_verdict(m, AnalysisMode::powers_only());
    size_t tor = tor1_dim(m, m.algebra()->maximal_ideal());
    bool agree = (v.status == FlatStatus::Flat) == (tor == 0);
    if (!agree)
        throw Error(Errc::Disagreement,
                    std::string("criterion and Tor oracle disagree: verdict ") +
                        flat_status_name(v.status) + " with Tor_1 dimension " +
                        std::to_string(tor));
    return {std::move(v), tor, true};
}

CofiltrationReport cofiltration_check(const ModulePresentation& m,
                                      const std::vector<IdealInA>& chain) {
    const auto& a = *m.algebra();
    if (chain.empty()) throw Error(Errc::BadChain, "empty chain");

    for (size_t t = 0; t + 1 < chain.size(); ++t) {
        if (chain[t].colength != chain[t + 1].colength + 1)
            throw Error(Errc::BadChain, "consecutive colengths must differ by exactly 1");
        for (const auto& g : chain[t].gens)
            if (!normal_form(g, chain[t + 1].gb).is_zero())
                throw Error(Errc::BadChain, "chain is not increasing: generator " +
                                                g.to_string() + " escapes the next ideal");
    }

    // Endpoints: some m^j at the top, m at the bottom.
    bool top_ok = false;
    for (size_t j = 1; j <= a.nil_index(); ++j) {
        IdealInA pj = a.power_of_maximal(j);
        if (pj.colength == chain.front().colength && same_ideal_in_a(pj, chain.front())) {
            top_ok = true;
            break;
        }
    }
    if (!top_ok) throw Error(Errc::BadChain, "chain must start at a power of the maximal ideal");
    if (!same_ideal_in_a(chain.back(), a.maximal_ideal()))
        throw Error(Errc::BadChain, "chain must end at the maximal ideal");

    CofiltrationReport rep;
    rep.minimal_generators = minimal_generator_count(m);
    rep.subadditive = true;
    rep.equality_throughout = true;
    std::vector<size_t> dims;
    for (const auto& i : chain) dims.push_back(fiber_dim(m, i));
    for (size_t t = 0; t + 1 < chain.size(); ++t) {
        CofiltrationStep st;
        st.colength_fine = chain[t].colength;
        st.colength_coarse = chain[t + 1].colength;
        st.dim_fine = dims[t];
        st.dim_coarse = dims[t + 1];
        st.subadditive = dims[t] <= dims[t + 1] + rep.minimal_generators;
        st.equality = dims[t] == dims[t + 1] + rep.minimal_generators;
        rep.subadditive = rep.subadditive && st.subadditive;
        rep.equality_throughout = rep.equality_throughout && st.equality;
        rep.steps.push_back(st);
    }
    rep.status = flat_verdict(m, AnalysisMode::powers_only()).status;
    return rep;
}

} // namespace flatlab
