#ifndef HOMINDEX_HOMOTOPY_HPP
#define HOMINDEX_HOMOTOPY_HPP

#include <functional>
#include <vector>

#include "homindex/path.hpp"
#include "homindex/shiftop.hpp"

namespace homindex {

struct AnticommutatorReport {
    double pointwise_defect;   // coefficientwise, zero for exact inputs
    double integrated_defect;  // after the [0,1] moments are folded in
};

/// bJ + Jb on a polynomial path chain of degree >= 2, verified both before
/// and after integration.
AnticommutatorReport bj_plus_jb_check(const PathChain& c);

struct JbFormulaReport {
    double pointwise_defect;
    double integrated_defect;
};

/// The rotation-sum expansion of J B against its direct evaluation.
JbFormulaReport jb_formula_check(const PathChain& c);

struct TransgressionReport {
    double residual;            // endpoint difference minus the boundary term
    double max_path_norm;       // max_t ||T_t|| sampled on an 11-point grid
    double omega_defect;        // the two closed forms of the inner sum agree
    double quadrature_estimate; // 0 for polynomial paths
};

/// Endpoint difference of the evaluated degree-0 cycle against b(J(-gamma2)).
TransgressionReport transgression_check(const OperatorPath& path, unsigned n);

struct ContinuityRow {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double modulus_power_derivative = 0.0; // trace-norm step of d(R^n)/dt
    double modulus_velocity_power = 0.0;   // trace-norm step of (dT/dt) R^n
    bool flagged = false;
};

struct ContinuityReport {
    std::vector<ContinuityRow> rows;
    double max_modulus = 0.0;
    bool any_flagged = false;
};

/// Trace-norm moduli of continuity of the two hypothesis quantities over the
/// grid; a finite grid can only report consistency, never prove continuity.
ContinuityReport invariance_hypotheses_check(const OperatorPath& path, unsigned n,
                                             const std::vector<double>& t_grid,
                                             double flag_threshold);

struct PathIndexSlice {
    double t = 0.0;
    double value = 0.0;
    double bound = 0.0;
};

struct PathIndexReport {
    std::vector<PathIndexSlice> slices;
    double spread = 0.0; // max - min over the grid
};

/// Certified index per slice of a weight-rule family.
PathIndexReport index_along_path(const std::function<ShiftOp(double)>& family,
                                 unsigned n, const std::vector<double>& t_grid,
                                 double tol);

} // namespace homindex

#endif
