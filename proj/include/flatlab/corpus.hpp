#pragma once

#include <random>

#include "flatlab/dsl.hpp"

namespace flatlab {

/// Deterministic RNG with portable integer sampling (no standard-library
/// distributions, whose outputs are implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    /// Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n);
    /// Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi);
    /// True with probability num/den.
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

struct AlgebraTemplate {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::string> jgens; // DSL polynomial expressions
    bool monomial;                  // J generated by monomials
};

/// Algebras the random corpus draws from (lengths <= 12, 1-3 variables).
const std::vector<AlgebraTemplate>& corpus_algebra_pool();
/// The 20 fixed algebras of the free-module suite (lengths 2-12).
const std::vector<AlgebraTemplate>& free_suite_algebra_pool();

ArtinPtr build_algebra(const AlgebraTemplate& t, FieldSpec field);

struct CorpusCase {
    std::string name;
    AlgebraTemplate algebra_template;
    ArtinPtr algebra;
    ModulePresentation module;
    std::string dsl_text; // printable problem file for this case
};

/// Seeded random presentations (p <= 3, q <= 4) over pool algebras. The mix
/// includes genuinely free and disguised-free modules so that flat cases are
/// well represented.
std::vector<CorpusCase> make_corpus(uint64_t seed, size_t count, FieldSpec field = FieldSpec{0});

/// Maximal chain of monomial ideals from m^j down to m, colength dropping by
/// one per link (valid for monomial defining ideals). Ties within a degree
/// are shuffled by the RNG when given.
std::vector<IdealInA> maximal_chain(const ArtinAlgebra& a, size_t j, Rng* rng = nullptr);

} // namespace flatlab
