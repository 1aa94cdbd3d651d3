#pragma once

#include "flatlab/module.hpp"

namespace flatlab {

/// One row of the neighborhood table: order n, colength of m^(n+1), fiber
/// dimension over that neighborhood, and their exact ratio.
struct ProfileRow {
    size_t order;
    size_t colength;
    size_t fiber;
    mpq_class varpi;
};

struct InfinitesimalProfile {
    std::vector<ProfileRow> rows;
};

/// fiber_dim(M, m^(n+1)) / colength(m^(n+1)) as an exact fraction.
mpq_class varpi_affine(const ModulePresentation& m, size_t n);

/// Rows for n = 0 .. nilIndex-1; constancy of the last column is the
/// flatness criterion. Requires an Artinian base.
InfinitesimalProfile infinitesimal_profile(const ModulePresentation& m);

struct AnalysisMode {
    enum class Kind { PowersOnly, Enumeration, Truncated };
    Kind kind = Kind::PowersOnly;
    size_t limit = 0; // c_max (Enumeration) or N_max (Truncated)

    static AnalysisMode powers_only() { return {Kind::PowersOnly, 0}; }
    static AnalysisMode enumeration(size_t c_max) { return {Kind::Enumeration, c_max}; }
    static AnalysisMode truncated(size_t n_max) { return {Kind::Truncated, n_max}; }
};

enum class FlatStatus { Flat, NotFlat, FlatUpToOrder };

const char* flat_status_name(FlatStatus s);

/// Where the normalized-dimension equality first failed: a neighborhood
/// order or an enumerated ideal, with both sides of the comparison.
struct Witness {
    std::optional<size_t> neighborhood_order;
    std::optional<IdealInA> ideal;
    mpq_class lhs; // normalized fiber dimension at the failure
    mpq_class rhs; // expected value, the minimal generator count
};

struct FlatnessVerdict {
    FlatStatus status = FlatStatus::Flat;
    std::optional<size_t> up_to_order; // FlatUpToOrder only
    std::optional<Witness> witness;    // NotFlat only
    InfinitesimalProfile profile;
};

/// The decision procedure. Powers of the maximal ideal suffice for a
/// definitive verdict over an Artinian base; enumeration mode re-verifies
/// the equality on every monomial ideal of colength <= c_max; truncated
/// mode bounds the order and never answers Flat.
FlatnessVerdict flat_verdict(const ModulePresentation& m, const AnalysisMode& mode);

/// Verdict plus the independent Tor-based oracle. A mismatch is an
/// implementation bug and throws Disagreement.
struct CrossValidation {
    FlatnessVerdict verdict;
    size_t tor_dim_at_m;
    bool agreement;
};
CrossValidation cross_validate(const ModulePresentation& m);

/// One link of a colength-1 cofiltration and the dimension bookkeeping.
struct CofiltrationStep {
    size_t colength_fine;   // chain[t]
    size_t colength_coarse; // chain[t+1]
    size_t dim_fine;
    size_t dim_coarse;
    bool subadditive; // dim_fine <= dim_coarse + mingens
    bool equality;    // dim_fine == dim_coarse + mingens
};

struct CofiltrationReport {
    std::vector<CofiltrationStep> steps;
    size_t minimal_generators;
    bool subadditive;
    bool equality_throughout;
    FlatStatus status; // powers-only verdict of the module
};

/// Validates a chain m^j = I_0 ⊂ I_1 ⊂ ... ⊂ m with colength dropping by
/// one per step, then checks the dimension inequalities along it (equalities
/// when the module is flat). Throws BadChain on malformed chains.
CofiltrationReport cofiltration_check(const ModulePresentation& m,
                                      const std::vector<IdealInA>& chain);

} // namespace flatlab
