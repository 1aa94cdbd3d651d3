#pragma once

#include "flatlab/artin.hpp"
#include "flatlab/linalg.hpp"

namespace flatlab {

/// Finitely generated A-module given as the cokernel of a polynomial matrix:
/// p generators, one relation per column. Presentations need not be minimal.
class ModulePresentation {
public:
    static ModulePresentation make(ArtinPtr algebra, size_t rank,
                                   std::vector<std::vector<Polynomial>> columns);
    static ModulePresentation free_module(ArtinPtr algebra, size_t rank);

    const ArtinPtr& algebra() const { return algebra_; }
    size_t rank() const { return rank_; }
    const std::vector<std::vector<Polynomial>>& columns() const { return columns_; }

private:
    ModulePresentation() = default;
    ArtinPtr algebra_;
    size_t rank_ = 0;
    std::vector<std::vector<Polynomial>> columns_;
};

/// dim_k (M ⊗_A A/I), by counting standard monomials of the submodule
/// (relations + J·e_i + I·e_i) of k[y]^p.
size_t fiber_dim(const ModulePresentation& m, const IdealInA& i);

/// Same value, Gröbner-free: the quotient is rebuilt inside the truncated
/// algebra k[y]/m^D (D found by a rank-stabilization scan) and the dimension
/// comes out of one exact rank computation.
size_t brute_force_fiber_dim(const ModulePresentation& m, const IdealInA& i);

/// dim_k (M ⊗_A k) = fiber dimension at the maximal ideal.
size_t minimal_generator_count(const ModulePresentation& m);

/// dim_k Tor_1^A(A/I, M) from the two-step resolution F2 -> F1 -> F0 of M,
/// with second syzygies computed over A and both kernels/images expanded to
/// exact k-matrices.
size_t tor1_dim(const ModulePresentation& m, const IdealInA& i);

/// Kernel of the multiplication map I ⊗_A M -> M, measured two independent
/// ways; 0 means injective (Milne's criterion holds at I).
struct MilneWitness {
    size_t kernel_dim;
    size_t via_tor;
    size_t via_tensor;
    bool injective() const { return kernel_dim == 0; }
};
MilneWitness milne_injectivity_witness(const ModulePresentation& m, const IdealInA& i);

/// Length and nilpotency index of k[y]/J recovered without Gröbner bases:
/// truncated-algebra ranks stabilize exactly at the nilpotency index.
struct LocalStructure {
    bool artinian;
    size_t length;
    size_t nil_index;
};
LocalStructure brute_force_local_structure(const RingPtr& ring,
                                           const std::vector<Polynomial>& jgens,
                                           size_t degree_cap = 64);

} // namespace flatlab
