#ifndef HOMINDEX_NUMOP_HPP
#define HOMINDEX_NUMOP_HPP

#include <vector>

#include "homindex/evaluate.hpp"
#include "homindex/matrix.hpp"
#include "homindex/schatten.hpp"

namespace homindex {

/// Tr((1 - T*T)^n - (1 - TT*)^n). Exactly zero for finite matrices, so the
/// returned value doubles as a rounding probe.
double homological_index_dense(const CMat& t, unsigned n);

struct BoundedTransform {
    CMat op;                // D (1 + D*D)^{-1/2}
    double defect_plus;     // || (1 - T*T) - (1 + D*D)^{-1} ||_F
    double defect_minus;    // || (1 - TT*) - (1 + DD*)^{-1} ||_F
};

/// Contraction associated with D through the eigendecomposition of D*D.
/// Throws when either defect exceeds tol.
BoundedTransform bounded_transform(const CMat& d, double tol = 1e-10);

struct QuadratureKnobs {
    double cutoff = 0.0;  // 0 = derive from tol
    int panels = 64;
    int nodes = 16;
};

struct InverseSqrtResult {
    CMat value;
    double error_estimate; // truncation bound + refinement difference
};

/// (1 + D^2)^{-1/2} for Hermitian D by the half-line resolvent integral,
/// integrated after the u^2 substitution on geometrically graded panels.
InverseSqrtResult inverse_sqrt_quadrature(const CMat& d, double tol,
                                          QuadratureKnobs knobs = {});

struct ResolventReport {
    double shifted_resolvent_difference; // first-resolvent identity defect
    double x_difference;                 // X_t - X_s = (s-t) X_t X_s
    double r_difference;                 // R_t - R_s expansion defect
    double sandwich;                     // R_t = (1+(t-s)X_s*)^-1 R_s (1+(t-s)X_s)^-1
    double max_residual;
};

/// Evaluates the perturbation identities for D_t = D + tA at one (t, s, lambda).
/// D and A must be Hermitian; lambda > 0.
ResolventReport resolvent_suite(const CMat& d, const CMat& a, double t, double s,
                                double lambda);

struct DerivativeReport {
    double x_residual_h;   // finite difference vs -X^2 at step h
    double x_residual_h2;  // same at step h/2
    double r_residual_h;   // finite difference vs -RX - X*R
    double r_residual_h2;
    double rn_residual_h;  // finite difference vs the power-derivative sum
    double rn_residual_h2;
    double x_ratio() const { return x_residual_h / x_residual_h2; }
    double r_ratio() const { return r_residual_h / r_residual_h2; }
    double rn_ratio() const { return rn_residual_h / rn_residual_h2; }
};

/// Central-difference cross-check of the derivative formulas at t0 = 0.
DerivativeReport derivative_suite(const CMat& d, const CMat& a, double lambda,
                                  unsigned n, double h);

struct KnChainNorm {
    unsigned degree = 0;
    double value = 0.0;
};

/// Norm upper bound evaluated on the given decomposition: for each tensor,
/// the trace norms of all cyclic products plus the product of operator norms.
KnChainNorm kn_norm_upper(const std::vector<std::vector<CMat>>& tensors, unsigned n);

/// |Tr(x0 x1) - Tr(x1 x0)|.
double trace_cocycle_check(const CMat& x0, const CMat& x1);

struct PairingReport {
    double index_value;    // trace route through the operator
    double pairing_value;  // trace of the evaluated degree-0 cycle
    double residual;
};

/// Compares the homological index against the trace applied to the evaluated
/// cycle w^n - v^n.
PairingReport pairing_check_dense(const CMat& t, unsigned n);

/// CSV with interleaved real/imag columns.
void write_matrix_csv(const std::string& path, const CMat& m);
CMat read_matrix_csv(const std::string& path);

} // namespace homindex

#endif
