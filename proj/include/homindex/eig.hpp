#ifndef HOMINDEX_EIG_HPP
#define HOMINDEX_EIG_HPP

#include <vector>

#include "homindex/matrix.hpp"

namespace homindex {

struct HermitianEig {
    std::vector<double> values; // ascending
    CMat vectors;               // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic two-sided Jacobi.
/// Throws std::invalid_argument when the input departs from Hermitian
/// symmetry by more than herm_tol * max|entry|.
HermitianEig hermitian_eig(const CMat& a, double herm_tol = 1e-10);

/// Same decomposition, rotations applied round-by-round over disjoint pivot
/// pairs so rounds can run under OpenMP. Kept separate from the serial
/// reference so the two can be cross-checked.
HermitianEig hermitian_eig_parallel(const CMat& a, double herm_tol = 1e-10);

/// Singular values (descending) by one-sided Jacobi on columns.
std::vector<double> singular_values(const CMat& a);

/// Tournament-parallel variant of singular_values.
std::vector<double> singular_values_parallel(const CMat& a);

/// Dispatching entry points used by the rest of the library.
HermitianEig eig_dispatch(const CMat& a, double herm_tol = 1e-10);
std::vector<double> sv_dispatch(const CMat& a);

/// f applied through the eigendecomposition: V f(diag) V*.
CMat hermitian_function(const HermitianEig& e, double (*f)(double));

} // namespace homindex

#endif
