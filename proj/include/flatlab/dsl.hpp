#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flatlab/flatness.hpp"
#include "flatlab/graded.hpp"

namespace flatlab {

/// Parse failure with a 1-based source position.
struct Diagnostic {
    size_t line = 0;
    size_t col = 0;
    std::string message;
    std::vector<std::string> expected; // candidate tokens, possibly empty

    std::string render() const;
};

struct RingDecl {
    std::string name;
    std::vector<std::string> vars;
    std::vector<Polynomial> jgens;
};

struct ModuleDecl {
    std::string name;
    size_t rank = 0;
    std::vector<std::vector<Polynomial>> columns;
};

struct GradedDecl {
    std::string name;
    std::vector<std::string> xvars;
    std::vector<int64_t> degrees;
    std::vector<std::vector<Polynomial>> columns;
};

struct ProblemOptions {
    AnalysisMode mode = AnalysisMode::powers_only();
    bool mode_given = false;
    std::optional<DegreeWindow> window;
};

/// Abstract form of one input file. Rings are materialized (polynomials are
/// parsed into them); algebra construction and all Gröbner work happen later,
/// at analysis time.
struct ProblemFile {
    FieldSpec field;
    RingDecl ring_decl;
    RingPtr affine_ring;
    std::optional<ModuleDecl> module_decl;
    std::optional<GradedDecl> graded_decl;
    RingPtr graded_ring; // present iff graded_decl
    ProblemOptions options;
    std::string source_text;

    bool same_abstract_form(const ProblemFile& o) const;
};

struct ParseResult {
    std::optional<ProblemFile> problem;
    std::optional<Diagnostic> diagnostic;
    bool ok() const { return problem.has_value(); }
};

/// Never throws: every input yields a problem or a diagnostic.
ParseResult parse_problem(std::string_view text);

/// Canonical text whose re-parse reproduces the abstract form.
std::string print_problem(const ProblemFile& pf);

/// Standalone polynomial expression in the given ring; throws Error on bad
/// input. Used by tests and by CLI flags like --ideal.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

} // namespace flatlab
