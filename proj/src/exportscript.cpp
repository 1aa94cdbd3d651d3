#include "flatlab/exportscript.hpp"

#include "flatlab/report.hpp"
#include "flatlab/version.hpp"

namespace flatlab {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string m2_coeff_ring(const FieldSpec& f) {
    return f.is_rational() ? "QQ" : "ZZ/" + std::to_string(f.characteristic);
}

std::string list_dims(const std::vector<size_t>& dims) {
    std::vector<std::string> parts;
    for (size_t d : dims) parts.push_back(std::to_string(d));
    return join(parts, ", ");
}

struct AffineExpectations {
    std::vector<size_t> fibers; // over m^(n+1), n = 0..nil-1
    size_t nil = 0;
    size_t tor = 0;
};

AffineExpectations affine_expectations(const ProblemFile& pf, const ArtinPtr& a,
                                       const ModulePresentation& m) {
    AffineExpectations e;
    e.nil = a->nil_index();
    for (size_t n = 0; n < e.nil; ++n) e.fibers.push_back(fiber_dim(m, a->neighborhood(n).ideal));
    e.tor = tor1_dim(m, a->maximal_ideal());
    (void)pf;
    return e;
}

std::string export_affine_m2(const ProblemFile& pf) {
    ArtinPtr a = ArtinAlgebra::make(pf.affine_ring, pf.ring_decl.jgens);
    ModulePresentation m =
        ModulePresentation::make(a, pf.module_decl->rank, pf.module_decl->columns);
    if (m.rank() == 0)
        throw Error(Errc::InvalidArgument, "m2 dialect: zero-generator module not supported");
    AffineExpectations e = affine_expectations(pf, a, m);

    std::string s;
    s += "-- flatlab " + std::string(kVersion) + " cross-check script (Macaulay2)\n";
    s += "-- input digest: " + input_digest(pf.source_text) + "\n";
    std::string vars = join(pf.ring_decl.vars, ", ");
    std::vector<std::string> jg;
    for (const auto& g : pf.ring_decl.jgens) jg.push_back(g.to_string());
    if (pf.ring_decl.vars.empty()) {
        s += "A = " + m2_coeff_ring(pf.field) + ";\n";
        s += "mm = ideal(0_A);\n";
    } else {
        s += "A = " + m2_coeff_ring(pf.field) + "[" + vars + "]" +
             (jg.empty() ? std::string() : " / ideal(" + join(jg, ", ") + ")") + ";\n";
        s += "mm = ideal vars A;\n";
    }
    const auto& cols = m.columns();
    if (cols.empty()) {
        s += "M = A^" + std::to_string(m.rank()) + ";\n";
    } else {
        std::vector<std::string> rows;
        for (size_t i = 0; i < m.rank(); ++i) {
            std::vector<std::string> row;
            for (const auto& col : cols) row.push_back(col[i].to_string());
            rows.push_back("{" + join(row, ", ") + "}");
        }
        s += "M = coker matrix {" + join(rows, ", ") + "};\n";
    }
    s += "-- expected dim_k(M ** A/m^(n+1)) for n = 0.." + std::to_string(e.nil - 1) + ": " +
         list_dims(e.fibers) + "\n";
    s += "for n from 0 to " + std::to_string(e.nil - 1) +
         " do print length(M ** (A^1 / mm^(n+1)));\n";
    s += "-- expected Tor_1 dimension at the maximal ideal: " + std::to_string(e.tor) + "\n";
    s += "print length Tor_1(M, A^1/mm);\n";
    return s;
}

std::string export_affine_singular(const ProblemFile& pf) {
    ArtinPtr a = ArtinAlgebra::make(pf.affine_ring, pf.ring_decl.jgens);
    ModulePresentation m =
        ModulePresentation::make(a, pf.module_decl->rank, pf.module_decl->columns);
    if (m.rank() == 0)
        throw Error(Errc::InvalidArgument,
                    "singular dialect: zero-generator module not supported");
    if (pf.ring_decl.vars.empty())
        throw Error(Errc::InvalidArgument, "singular dialect: ring needs at least one variable");
    AffineExpectations e = affine_expectations(pf, a, m);

    std::string s;
    s += "// flatlab " + std::string(kVersion) + " cross-check script (Singular)\n";
    s += "// input digest: " + input_digest(pf.source_text) + "\n";
    s += "LIB \"homolog.lib\";\n";
    s += "ring R = " +
         (pf.field.is_rational() ? std::string("0")
                                 : std::to_string(pf.field.characteristic)) +
         ", (" + join(pf.ring_decl.vars, ", ") + "), dp;\n";
    std::vector<std::string> jg;
    for (const auto& g : pf.ring_decl.jgens) jg.push_back(g.to_string());
    if (jg.empty()) {
        s += "// zero defining ideal\n";
        s += "qring A = std(ideal(0));\n";
    } else {
        s += "ideal J = " + join(jg, ", ") + ";\n";
        s += "qring A = std(J);\n";
    }
    const auto& cols = m.columns();
    std::string p = std::to_string(m.rank());
    if (cols.empty()) {
        s += "module M = 0 * freemodule(" + p + ");\n";
    } else {
        std::vector<std::string> vecs;
        for (const auto& col : cols) {
            std::vector<std::string> entries;
            for (const auto& entry : col) entries.push_back(entry.to_string());
            vecs.push_back("[" + join(entries, ", ") + "]");
        }
        s += "module M = " + join(vecs, ", ") + ";\n";
    }
    s += "// expected vdim for n = 0.." + std::to_string(e.nil - 1) + ": " + list_dims(e.fibers) +
         "\n";
    s += "int n;\n";
    s += "for (n = 0; n <= " + std::to_string(e.nil - 1) + "; n = n + 1) {\n";
    s += "  module Mn = M + maxideal(n+1) * freemodule(" + p + ");\n";
    s += "  vdim(std(Mn));\n";
    s += "}\n";
    s += "// expected Tor_1 dimension at the maximal ideal: " + std::to_string(e.tor) + "\n";
    s += "module kk = maxideal(1) * freemodule(1);\n";
    s += "vdim(std(Tor(1, M, kk)));\n";
    return s;
}

std::string export_graded_m2(const ProblemFile& pf) {
    ArtinPtr a = ArtinAlgebra::make(pf.affine_ring, pf.ring_decl.jgens);
    GradedModule gm = GradedModule::make(a, pf.graded_decl->xvars, pf.graded_decl->degrees,
                                         pf.graded_decl->columns);
    if (gm.rank() != 1 || gm.degrees()[0] != 0)
        throw Error(Errc::InvalidArgument,
                    "m2 dialect: graded export supports a single degree-0 generator");

    const int64_t mhi = 4;
    std::string s;
    s += "-- flatlab " + std::string(kVersion) + " cross-check script (Macaulay2)\n";
    s += "-- input digest: " + input_digest(pf.source_text) + "\n";
    std::vector<std::string> names = pf.ring_decl.vars;
    names.insert(names.end(), pf.graded_decl->xvars.begin(), pf.graded_decl->xvars.end());
    std::vector<std::string> degs;
    for (size_t i = 0; i < pf.ring_decl.vars.size(); ++i) degs.push_back("{1,0}");
    for (size_t i = 0; i < pf.graded_decl->xvars.size(); ++i) degs.push_back("{0,1}");
    s += "T = " + m2_coeff_ring(pf.field) + "[" + join(names, ", ") + ", Degrees => {" +
         join(degs, ",") + "}];\n";
    std::vector<std::string> ideal_parts;
    for (const auto& g : pf.ring_decl.jgens) ideal_parts.push_back(g.to_string());
    for (const auto& col : pf.graded_decl->columns) ideal_parts.push_back(col[0].to_string());
    s += "I = ideal(" + (ideal_parts.empty() ? "0_T" : join(ideal_parts, ", ")) + ");\n";
    if (!pf.ring_decl.vars.empty())
        s += "my = ideal(" + join(pf.ring_decl.vars, ", ") + ");\n";

    for (size_t n = 0; n < a->nil_index(); ++n) {
        std::vector<size_t> row;
        for (int64_t m = 0; m <= mhi; ++m) row.push_back(graded_piece_dim(gm, n, m));
        s += "-- expected h(" + std::to_string(n) + ", m) for m = 0.." + std::to_string(mhi) +
             ": " + list_dims(row) + "\n";
        std::string in = "I" + (pf.ring_decl.vars.empty()
                                    ? std::string()
                                    : " + my^" + std::to_string(n + 1));
        s += "N = T^1 / (" + in + ");\n";
        s += "print apply(toList(0.." + std::to_string(mhi) + "), m -> sum(toList(0.." +
             std::to_string(n) + "), d -> hilbertFunction({d, m}, N)));\n";
    }
    return s;
}

std::string export_graded_singular(const ProblemFile& pf) {
    ArtinPtr a = ArtinAlgebra::make(pf.affine_ring, pf.ring_decl.jgens);
    GradedModule gm = GradedModule::make(a, pf.graded_decl->xvars, pf.graded_decl->degrees,
                                         pf.graded_decl->columns);
    if (a->length() != 1)
        throw Error(Errc::InvalidArgument,
                    "singular dialect: graded export supports one-point reduced bases only");
    if (gm.rank() != 1 || gm.degrees()[0] != 0)
        throw Error(Errc::InvalidArgument,
                    "singular dialect: graded export supports a single degree-0 generator");

    // Over a length-1 base the table reduces to the classical fiber: drop
    // every term containing a y-variable.
    const RingPtr big = gm.ring();
    std::vector<std::string> rels;
    for (const auto& col : pf.graded_decl->columns) {
        std::vector<Polynomial::Term> kept;
        for (const auto& t : col[0].terms())
            if (big->ydeg(t.mono) == 0) kept.push_back(t);
        Polynomial r = Polynomial::from_terms(big, kept);
        if (!r.is_zero()) rels.push_back(r.to_string());
    }

    const int64_t mhi = 4;
    std::vector<size_t> row;
    for (int64_t m = 0; m <= mhi; ++m) row.push_back(graded_piece_dim(gm, 0, m));

    std::string s;
    s += "// flatlab " + std::string(kVersion) + " cross-check script (Singular)\n";
    s += "// input digest: " + input_digest(pf.source_text) + "\n";
    s += "ring T = " +
         (pf.field.is_rational() ? std::string("0")
                                 : std::to_string(pf.field.characteristic)) +
         ", (" + join(pf.graded_decl->xvars, ", ") + "), dp;\n";
    s += "ideal I = " + (rels.empty() ? "0" : join(rels, ", ")) + ";\n";
    s += "ideal SI = std(I);\n";
    s += "// expected h(0, m) for m = 0.." + std::to_string(mhi) + ": " + list_dims(row) + "\n";
    s += "int m;\n";
    s += "for (m = 0; m <= " + std::to_string(mhi) + "; m = m + 1) {\n";
    s += "  size(kbase(SI, m));\n";
    s += "}\n";
    return s;
}

} // namespace

std::string export_crosscheck(const ProblemFile& pf, const std::string& dialect) {
    if (dialect != "m2" && dialect != "singular")
        throw Error(Errc::InvalidArgument, "unknown dialect '" + dialect + "' (use m2|singular)");
    bool graded = pf.graded_decl.has_value() && !pf.module_decl.has_value();
    if (pf.module_decl) {
        return dialect == "m2" ? export_affine_m2(pf) : export_affine_singular(pf);
    }
    if (graded) {
        return dialect == "m2" ? export_graded_m2(pf) : export_graded_singular(pf);
    }
    throw Error(Errc::InvalidArgument, "nothing to export: declare a module or a graded module");
}

} // namespace flatlab
