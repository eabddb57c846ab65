#ifndef HOMINDEX_CLIFFORD_HPP
#define HOMINDEX_CLIFFORD_HPP

#include <vector>

#include "homindex/matrix.hpp"

namespace homindex {

/// Irreducible representation of the complex Clifford algebra on 2n-1
/// Hermitian generators, acting on dimension 2^(n-1). Entries stay in
/// {0, +-1, +-i}, so the relations hold exactly in double precision.
struct CliffordRep {
    unsigned half_dim = 0;      // n
    std::vector<CMat> gens;     // c_1 .. c_{2n-1}

    unsigned generator_count() const { return (unsigned)gens.size(); }
    std::size_t rep_dim() const { return gens.empty() ? 1 : gens.front().dim(); }

    /// max |c_j c_k + c_k c_j - 2 delta_jk| over all pairs; 0 when exact.
    double relation_defect() const;
};

/// Iterated tensor construction: n = 1 gives the scalar generator (1),
/// n = 2 the three Pauli matrices, and each step tensors the previous
/// generators with the two off-diagonal involutions and appends the
/// diagonal grading. Guarded at n <= 4.
CliffordRep clifford_build(unsigned n);

} // namespace homindex

#endif
