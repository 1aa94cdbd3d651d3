#pragma once

#include "flatlab/flatness.hpp"

namespace flatlab {

/// Finitely presented graded module over A[x_0..x_N], standing for a
/// coherent sheaf on P^N over the local base. Generators may sit in
/// arbitrary degrees (twists); relation columns must be x-homogeneous
/// relative to those degrees.
class GradedModule {
public:
    /// The bigraded ring k[y..., x...] with the projective block dominant.
    static RingPtr projective_ring(const ArtinAlgebra& base,
                                   const std::vector<std::string>& xvars);

    static GradedModule make(ArtinPtr base, std::vector<std::string> xvars,
                             std::vector<int64_t> degrees,
                             std::vector<std::vector<Polynomial>> columns);
    static GradedModule free_module(ArtinPtr base, std::vector<std::string> xvars,
                                    std::vector<int64_t> degrees);

    const ArtinPtr& base() const { return base_; }
    const RingPtr& ring() const { return ring_; }
    size_t xcount() const { return xcount_; }
    size_t projective_dim() const { return xcount_ - 1; } // N
    size_t rank() const { return degrees_.size(); }
    const std::vector<int64_t>& degrees() const { return degrees_; }
    const std::vector<std::vector<Polynomial>>& columns() const { return columns_; }
    const std::vector<int64_t>& column_degrees() const { return column_degrees_; }
    const std::vector<Polynomial>& lifted_defining_ideal() const { return jgens_big_; }

private:
    GradedModule() = default;
    ArtinPtr base_;
    RingPtr ring_;
    size_t xcount_ = 0;
    std::vector<int64_t> degrees_;
    std::vector<std::vector<Polynomial>> columns_;
    std::vector<int64_t> column_degrees_;
    std::vector<Polynomial> jgens_big_;
};

/// Basis of (relations + J·e_i + m^(n+1)·e_i) in the bigraded free module;
/// its staircase answers every degree slice at neighborhood order n.
GroebnerBasis graded_slice_basis(const GradedModule& gm, size_t n);

/// dim_k of the x-degree-m piece of M ⊗_A A/m^(n+1).
size_t graded_piece_dim(const GradedModule& gm, size_t n, int64_t m);
size_t graded_piece_dim(const GradedModule& gm, const GroebnerBasis& slice, size_t n, int64_t m);

/// The same dimension by per-degree exact elimination on the explicit
/// monomial basis — no Gröbner machinery involved.
size_t graded_piece_dim_bruteforce(const GradedModule& gm, size_t n, int64_t m);

struct DegreeWindow {
    int64_t lo = 0;
    int64_t hi = 0;
};

struct HilbertTable {
    size_t order;            // neighborhood order n
    DegreeWindow window;
    std::vector<size_t> values; // h(n, m) for m = lo..hi
    bool stabilized;
    int64_t threshold;          // m_0: values match the polynomial from here on
    std::vector<mpq_class> polynomial; // ascending coefficients, trimmed
};

/// Hilbert function of the restriction to the n-th neighborhood plus its
/// eventual polynomial, recovered by exact finite differences. Throws
/// WindowTooSmall when the tail cannot be certified inside the window.
HilbertTable hilbert_table(const GradedModule& gm, size_t n,
                           std::optional<DegreeWindow> window = std::nullopt);

struct VarpiPolynomial {
    size_t order;
    std::vector<mpq_class> coeffs; // ascending, exact
    int64_t threshold;
};

/// Hilbert polynomial of the n-th neighborhood restriction divided by the
/// neighborhood length.
VarpiPolynomial varpi_projective(const GradedModule& gm, size_t n,
                                 std::optional<DegreeWindow> window = std::nullopt);

struct GradedWitness {
    size_t order;
    std::vector<mpq_class> lhs; // ϖ polynomial at the failing order
    std::vector<mpq_class> rhs; // ϖ polynomial at order 0
};

struct GradedVerdict {
    FlatStatus status = FlatStatus::Flat;
    std::optional<GradedWitness> witness;
    std::vector<VarpiPolynomial> profile;
};

/// Flat iff the ϖ polynomial is the same at every order n = 0..nilIndex-1.
GradedVerdict projective_flat_verdict(const GradedModule& gm,
                                      std::optional<DegreeWindow> window = std::nullopt);

} // namespace flatlab
