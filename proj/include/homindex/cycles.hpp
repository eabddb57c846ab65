#ifndef HOMINDEX_CYCLES_HPP
#define HOMINDEX_CYCLES_HPP

#include "homindex/chain.hpp"

namespace homindex {

/// Elementary tensor with polynomial legs, one of which is certified to
/// factor through an ideal generator: legs[witness_leg] = left * gen * right.
struct WitnessedTensor {
    GaussQ coeff;
    std::vector<FreePoly> legs;
    std::size_t witness_leg = 0;
    FreePoly left;
    FreePoly gen;
    FreePoly right;

    bool reconstructs() const { return left * gen * right == legs[witness_leg]; }
};

/// Certificate that a chain lies in the relative subspace: every elementary
/// tensor carries a factored leg. Membership is never decided, only witnessed.
struct RelWitness {
    unsigned degree = 0;
    std::vector<WitnessedTensor> tensors;

    Chain expand() const;
    bool validate() const;
};

/// Witness transport along the boundary operators: the factored leg is kept
/// factored when faces multiply it into a neighbour.
RelWitness witnessed_b(const RelWitness& c);
RelWitness witnessed_t(const RelWitness& c);
RelWitness witnessed_s(const RelWitness& c);
RelWitness witnessed_B(const RelWitness& c);

struct GammaCycle {
    Chain gamma2;      // degree 2
    Chain gamma0;      // degree 0
    RelWitness witness2;
    RelWitness witness0;
};

/// The 2-cycle (gamma2, gamma0) built from v = 1-xy, w = 1-yx and omega(n);
/// the sign of the omega (x) w^n (x) y term is the one for which cycle_check
/// passes. Rejects n = 0.
GammaCycle gamma_cycle(unsigned n);

/// The discarded sign variant of gamma2, kept as a regression probe: its
/// boundary defect is nonzero.
Chain gamma2_flipped_sign(unsigned n);

struct CycleCheck {
    bool ok;
    Chain residual; // b(g2) + B(g0), degree 1
};

/// Verifies b(g2) + B(g0) = 0 exactly.
CycleCheck cycle_check(const Chain& g2, const Chain& g0);

} // namespace homindex

#endif
