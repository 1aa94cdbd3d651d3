#include "flatlab/report.hpp"

#include <chrono>

#include "flatlab/exportscript.hpp"
#include "flatlab/version.hpp"

namespace flatlab {

using json = nlohmann::ordered_json;

std::string input_digest(std::string_view text) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

ArtinPtr build_algebra(const ProblemFile& pf, bool truncated_ok) {
    if (truncated_ok && pf.options.mode.kind == AnalysisMode::Kind::Truncated)
        return ArtinAlgebra::make_truncated(pf.affine_ring, pf.ring_decl.jgens);
    return ArtinAlgebra::make(pf.affine_ring, pf.ring_decl.jgens);
}

ModulePresentation build_module(const ProblemFile& pf, const ArtinPtr& a) {
    if (!pf.module_decl) throw Error(Errc::InvalidArgument, "no module declared in the input");
    return ModulePresentation::make(a, pf.module_decl->rank, pf.module_decl->columns);
}

GradedModule build_graded(const ProblemFile& pf, const ArtinPtr& a) {
    if (!pf.graded_decl)
        throw Error(Errc::InvalidArgument, "no graded module declared in the input");
    return GradedModule::make(a, pf.graded_decl->xvars, pf.graded_decl->degrees,
                              pf.graded_decl->columns);
}

json profile_json(const InfinitesimalProfile& prof) {
    json rows = json::array();
    for (const auto& r : prof.rows)
        rows.push_back(json{{"n", r.order},
                            {"colength", r.colength},
                            {"fiber_dim", r.fiber},
                            {"varpi", rational_string(r.varpi)}});
    return rows;
}

json coeffs_json(const std::vector<mpq_class>& coeffs) {
    json a = json::array();
    for (const auto& c : coeffs) a.push_back(rational_string(c));
    return a;
}

std::string join_gens(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i].to_string();
    }
    return s;
}

std::string profile_human(const InfinitesimalProfile& prof) {
    std::string out = "  n   colength   fiber_dim   varpi\n";
    for (const auto& r : prof.rows) {
        char buf[96];
        snprintf(buf, sizeof(buf), "  %-3zu %-10zu %-11zu %s\n", r.order, r.colength, r.fiber,
                 rational_pretty(r.varpi).c_str());
        out += buf;
    }
    return out;
}

struct AnalyzeOutcome {
    int exit_code;
    json body;
    std::string human;
};

AnalyzeOutcome analyze_affine(const ProblemFile& pf) {
    ArtinPtr a = build_algebra(pf, /*truncated_ok=*/true);
    ModulePresentation m = build_module(pf, a);
    FlatnessVerdict v = flat_verdict(m, pf.options.mode);
    size_t tor = tor1_dim(m, a->maximal_ideal());

    bool agreement = true;
    if (v.status == FlatStatus::Flat) {
        agreement = tor == 0;
    } else if (v.status == FlatStatus::NotFlat) {
        agreement = tor != 0;
    }
    if (!agreement)
        throw Error(Errc::Disagreement, std::string("verdict ") + flat_status_name(v.status) +
                                            " contradicts Tor_1 dimension " +
                                            std::to_string(tor));

    // cross-check the fiber dimensions against the Gröbner-free oracle
    if (a->artinian()) {
        for (const auto& row : v.profile.rows) {
            size_t oracle = brute_force_fiber_dim(m, a->neighborhood(row.order).ideal);
            if (oracle != row.fiber)
                throw Error(Errc::Disagreement,
                            "fiber dimension " + std::to_string(row.fiber) + " at order " +
                                std::to_string(row.order) + " disagrees with brute force " +
                                std::to_string(oracle));
        }
    }

    json body;
    body["verdict"] = flat_status_name(v.status);
    if (v.up_to_order) body["up_to_order"] = *v.up_to_order;
    if (v.witness) {
        json w;
        if (v.witness->neighborhood_order) w["n"] = *v.witness->neighborhood_order;
        if (v.witness->ideal) w["ideal"] = join_gens(v.witness->ideal->gens);
        w["lhs"] = rational_string(v.witness->lhs);
        w["rhs"] = rational_string(v.witness->rhs);
        body["witness"] = w;
    }
    body["profile"] = profile_json(v.profile);
    body["tor"] = json{{"ideal", "m"}, {"dim", tor}};
    body["oracle_agreement"] = true;

    std::string human = std::string("verdict: ") + flat_status_name(v.status);
    if (v.up_to_order) human += " (order <= " + std::to_string(*v.up_to_order) + ")";
    human += "\n";
    if (v.witness) {
        human += "witness: ";
        if (v.witness->neighborhood_order)
            human += "n = " + std::to_string(*v.witness->neighborhood_order);
        if (v.witness->ideal) human += "ideal (" + join_gens(v.witness->ideal->gens) + ")";
        human += "  [" + rational_pretty(v.witness->lhs) + " vs " +
                 rational_pretty(v.witness->rhs) + "]\n";
    }
    human += profile_human(v.profile);
    human += "Tor_1(A/m, M) dimension: " + std::to_string(tor) + "\n";

    int code = kExitFlat;
    if (v.status == FlatStatus::NotFlat) code = kExitNotFlat;
    if (v.status == FlatStatus::FlatUpToOrder) code = kExitFlatUpToOrder;
    return {code, std::move(body), std::move(human)};
}

AnalyzeOutcome analyze_graded(const ProblemFile& pf) {
    ArtinPtr a = build_algebra(pf, /*truncated_ok=*/false);
    GradedModule gm = build_graded(pf, a);
    GradedVerdict v = projective_flat_verdict(gm, pf.options.window);

    // confirm a few table entries per order against the elimination oracle
    for (size_t n = 0; n < a->nil_index(); ++n) {
        HilbertTable t = hilbert_table(gm, n, pf.options.window);
        int64_t hi = std::min(t.window.lo + 4, t.window.hi);
        for (int64_t m = t.window.lo; m <= hi; ++m) {
            size_t oracle = graded_piece_dim_bruteforce(gm, n, m);
            if (oracle != t.values[static_cast<size_t>(m - t.window.lo)])
                throw Error(Errc::Disagreement,
                            "graded piece dimension disagrees with the degree oracle at n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
        }
    }

    json body;
    body["verdict"] = flat_status_name(v.status);
    if (v.witness) {
        body["witness"] = json{{"n", v.witness->order},
                               {"lhs", coeffs_json(v.witness->lhs)},
                               {"rhs", coeffs_json(v.witness->rhs)}};
    }
    json polys = json::array();
    for (const auto& p : v.profile)
        polys.push_back(json{{"n", p.order},
                             {"coeffs", coeffs_json(p.coeffs)},
                             {"threshold", p.threshold}});
    body["polynomials"] = polys;
    body["oracle_agreement"] = true;

    std::string human = std::string("verdict: ") + flat_status_name(v.status) + "\n";
    for (const auto& p : v.profile) {
        human += "  n = " + std::to_string(p.order) + ": varpi coefficients [";
        for (size_t i = 0; i < p.coeffs.size(); ++i) {
            if (i) human += ", ";
            human += rational_pretty(p.coeffs[i]);
        }
        human += "] from m >= " + std::to_string(p.threshold) + "\n";
    }

    int code = v.status == FlatStatus::NotFlat ? kExitNotFlat : kExitFlat;
    return {code, std::move(body), std::move(human)};
}

AnalyzeOutcome dispatch(Command cmd, const ProblemFile& pf, const CommandOptions& opts) {
    switch (cmd) {
        case Command::Analyze: {
            bool want_module = pf.module_decl.has_value();
            bool want_graded = pf.graded_decl.has_value();
            if (opts.target == "module") {
                want_graded = false;
            } else if (opts.target == "graded") {
                want_module = false;
            } else if (want_module && want_graded) {
                throw Error(Errc::InvalidArgument,
                            "input declares both a module and a graded module; pick one with "
                            "--target");
            }
            if (want_module) return analyze_affine(pf);
            if (want_graded) return analyze_graded(pf);
            throw Error(Errc::InvalidArgument, "nothing to analyze: declare a module or a "
                                               "graded module");
        }
        case Command::Varpi: {
            ArtinPtr a = build_algebra(pf, true);
            ModulePresentation m = build_module(pf, a);
            InfinitesimalProfile prof;
            if (opts.order_n) {
                InfinitesimalNeighborhood nb = a->neighborhood(*opts.order_n);
                size_t f = fiber_dim(m, nb.ideal);
                mpq_class v(static_cast<unsigned long>(f),
                            static_cast<unsigned long>(nb.colength));
                v.canonicalize();
                prof.rows.push_back({*opts.order_n, nb.colength, f, v});
            } else {
                prof = infinitesimal_profile(m);
            }
            json body;
            body["profile"] = profile_json(prof);
            return {kExitFlat, std::move(body), profile_human(prof)};
        }
        case Command::Tor: {
            ArtinPtr a = build_algebra(pf, true);
            ModulePresentation m = build_module(pf, a);
            IdealInA ideal =
                opts.ideal_text
                    ? a->ideal(parse_polynomial_list(pf.affine_ring, *opts.ideal_text))
                    : a->maximal_ideal();
            size_t d = tor1_dim(m, ideal);
            json body;
            body["tor"] = json{{"ideal", opts.ideal_text ? join_gens(ideal.gens) : "m"},
                               {"dim", d}};
            return {kExitFlat, std::move(body),
                    "Tor_1 dimension: " + std::to_string(d) + "\n"};
        }
        case Command::Hilbert: {
            ArtinPtr a = build_algebra(pf, false);
            GradedModule gm = build_graded(pf, a);
            size_t n = opts.order_n.value_or(0);
            auto window = opts.window ? opts.window : pf.options.window;
            HilbertTable t = hilbert_table(gm, n, window);
            json body;
            json vals = json::array();
            for (size_t v : t.values) vals.push_back(v);
            body["hilbert"] = json{{"n", t.order},
                                   {"window", {t.window.lo, t.window.hi}},
                                   {"values", vals},
                                   {"threshold", t.threshold},
                                   {"coeffs", coeffs_json(t.polynomial)}};
            std::string human = "h(" + std::to_string(n) + ", m) for m = " +
                                std::to_string(t.window.lo) + ".." + std::to_string(t.window.hi) +
                                ":";
            for (size_t v : t.values) human += " " + std::to_string(v);
            human += "\n";
            return {kExitFlat, std::move(body), std::move(human)};
        }
        case Command::EnumIdeals: {
            if (!opts.colength) throw Error(Errc::InvalidArgument, "--colength is required");
            ArtinPtr a = build_algebra(pf, false);
            auto ideals = a->enumerate_monomial_ideals(*opts.colength);
            json body;
            json arr = json::array();
            std::string human;
            for (const auto& i : ideals) {
                json gens = json::array();
                for (const auto& g : i.gens) gens.push_back(g.to_string());
                arr.push_back(json{{"gens", gens}, {"colength", i.colength}});
                human += "(" + join_gens(i.gens) + ")  colength " +
                         std::to_string(i.colength) + "\n";
            }
            body["ideals"] = arr;
            return {kExitFlat, std::move(body), std::move(human)};
        }
        case Command::Export: {
            std::string script = export_crosscheck(pf, opts.dialect);
            json body;
            body["script"] = script;
            return {kExitFlat, std::move(body), script};
        }
    }
    throw Error(Errc::InvalidArgument, "unknown command");
}

} // namespace

RunResult run_command(Command cmd, const ProblemFile& pf, const CommandOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    RunResult out;
    json report;
    report["version"] = kVersion;
    report["input_digest"] = input_digest(pf.source_text);
    try {
        AnalyzeOutcome oc = dispatch(cmd, pf, opts);
        out.exit_code = oc.exit_code;
        for (auto& [k, v] : oc.body.items()) report[k] = v;
        out.human = std::move(oc.human);
    } catch (const Error& e) {
        out.exit_code = e.code() == Errc::Disagreement ? kExitDisagreement : kExitInputError;
        report["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
        out.human = std::string("error [") + errc_name(e.code()) + "]: " + e.what() + "\n";
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report["timing_ms"] = elapsed;
    out.json = std::move(report);
    return out;
}

} // namespace flatlab
