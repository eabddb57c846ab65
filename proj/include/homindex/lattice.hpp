#ifndef HOMINDEX_LATTICE_HPP
#define HOMINDEX_LATTICE_HPP

#include <functional>
#include <string>
#include <vector>

#include "homindex/clifford.hpp"
#include "homindex/matrix.hpp"

namespace homindex {

/// Periodic lattice on [-L, L)^{2n} with central differences; the derivative
/// matrices are anti-Hermitian circulants, so i d/dx is Hermitian and the
/// zero-potential operators are exactly normal.
struct LatticeSpec {
    unsigned half_dim = 1;    // n, space is R^{2n}
    unsigned points = 8;      // N per axis, even, >= 4
    double half_width = 4.0;  // L

    double spacing() const { return 2.0 * half_width / double(points); }
    std::size_t site_count() const;
    void validate() const;
};

/// Matrix-valued one-form: one pointwise Hermitian component per coordinate.
struct Potential {
    std::string name = "zero";
    std::size_t value_dim = 1;
    // component j evaluated at a lattice point
    std::function<CMat(unsigned j, const std::vector<double>& x)> component;
};

Potential make_potential(const std::string& name, double amplitude, double scale);
std::vector<std::string> potential_names();

/// Effective dimension cap for dense lattice assembly; the HOMINDEX_BUDGET
/// environment variable overrides the default of 16384.
std::size_t dimension_budget();

struct DiracPair {
    CMat plus;
    CMat minus;
    double adjoint_defect; // || minus - plus^* ||_max
};

/// Assembles the first-order operator pair on the periodic lattice:
///   plus  = d_{2n} + i a_{2n} + i sum_j c_j (d_j + i a_j)
///   minus = -d_{2n} - i a_{2n} + i sum_j c_j (d_j + i a_j)
/// and checks that minus is the matrix adjoint of plus.
DiracPair dirac_assemble(const LatticeSpec& spec, const Potential& pot);

/// Dense central-difference derivative along one axis (identity elsewhere).
CMat lattice_derivative(const LatticeSpec& spec, unsigned axis);

/// Plain periodic grid in any space dimension, for the scalar decay probes
/// (the operator lattice above is typed for even dimensions only).
struct ScalarGrid {
    unsigned space_dim = 1; // m
    unsigned points = 8;    // N per axis, even, >= 4
    double half_width = 4.0;

    double spacing() const { return 2.0 * half_width / double(points); }
    std::size_t site_count() const;
    void validate() const;
};

/// (1 + Delta)^{-s} for the lattice Laplacian Delta = -sum_j d_j^2, built
/// through the plane-wave eigenbasis of the circulant stencils.
CMat laplacian_inverse_power(const ScalarGrid& grid, double s);

/// Dense Delta assembled from the derivative matrices, for cross-checks.
CMat laplacian_dense(const ScalarGrid& grid);

struct RefinementRow {
    unsigned points = 0;
    double half_width = 0.0;
    double value = 0.0;
};

struct RefinementTable {
    std::vector<RefinementRow> rows;
    double ratio = 0.0; // last value / first value
};

/// Schatten-p norm of (1+Delta)^{-s} f (1+Delta)^{-r-eps} on the base grid
/// and its doubling at fixed spacing (growing box). Lemma ranges enforced:
/// s, r >= 0, s + r in (0, m/2], p = m / (2 (s + r)) >= 1.
RefinementTable schatten_decay_experiment(const ScalarGrid& base,
                                          const std::function<double(const std::vector<double>&)>& f,
                                          double s, double r, double p, double eps);

struct ScalingRow {
    double lambda = 0.0;
    double index_value = 0.0;     // homological index of the transform
    double difference_norm = 0.0; // Schatten-n norm of the defect difference
    double transform_defect = 0.0;
};

/// For each lambda: bounded transform of lambda^{-1/2} D_a^+, its index in
/// degree n (expected to vanish at this finite size), and the Schatten-n size
/// of the defect difference as a scale diagnostic.
std::vector<ScalingRow> scaling_family(const LatticeSpec& spec, const Potential& pot,
                                       const std::vector<double>& lambda_grid);

} // namespace homindex

#endif
