#ifndef HOMINDEX_PATH_HPP
#define HOMINDEX_PATH_HPP

#include <vector>

#include "homindex/freepoly.hpp"
#include "homindex/matrix.hpp"

namespace homindex {

/// Matrix-valued polynomial in one real parameter. Products, derivatives and
/// the integral over [0,1] are exact in the coefficients.
class MatPoly {
public:
    MatPoly() = default;
    explicit MatPoly(CMat constant) : coeffs_{std::move(constant)} {}
    explicit MatPoly(std::vector<CMat> coeffs);

    static MatPoly identity(std::size_t d) { return MatPoly(CMat::identity(d)); }
    static MatPoly zero(std::size_t d) { return MatPoly(CMat(d)); }

    std::size_t dim() const { return coeffs_.empty() ? 0 : coeffs_.front().dim(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<CMat>& coeffs() const { return coeffs_; }

    CMat eval(double t) const;
    MatPoly derivative() const;
    MatPoly adjoint() const; // coefficientwise; the parameter is real
    CMat integrate01() const;

    friend MatPoly operator+(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
    friend MatPoly operator*(const cdouble& s, const MatPoly& a);

    /// Largest coefficient entry of the difference, for exactness checks.
    double max_coeff_distance(const MatPoly& other) const;

private:
    std::vector<CMat> coeffs_; // index k multiplies t^k
};

/// One-parameter operator family, either a matrix polynomial in t or a
/// sampled uniform grid on [0,1].
struct OperatorPath {
    enum class Kind { polynomial, sampled };

    Kind kind = Kind::polynomial;
    MatPoly poly;
    std::vector<double> grid;   // strictly increasing, covers [0,1]
    std::vector<CMat> samples;

    static OperatorPath polynomial(MatPoly p);
    static OperatorPath sampled(std::vector<double> grid, std::vector<CMat> samples);

    std::size_t dim() const;
    CMat eval(double t) const; // sampled kind: exact grid points only
};

/// Chain with matrix-polynomial legs.
struct PathChain {
    struct Term {
        cdouble coeff;
        std::vector<MatPoly> legs;
    };
    unsigned degree = 0;
    std::vector<Term> terms;
};

/// Chain with constant matrix legs.
struct MatChain {
    struct Term {
        cdouble coeff;
        std::vector<CMat> legs;
    };
    unsigned degree = 0;
    std::vector<Term> terms;
};

PathChain path_b(const PathChain& c);
PathChain path_t(const PathChain& c);
PathChain path_B(const PathChain& c);

MatChain mat_b(const MatChain& c);

/// Integrand of the transgression map before integration: the first leg is
/// replaced by leg0 * d(leg1)/dt and the remaining legs shift down. The
/// defining integral identities hold pointwise in the parameter, so this
/// form supports exact verification.
PathChain jay_integrand(const PathChain& c);

/// Integral over [0,1] of a path chain, expanded multilinearly with the exact
/// 1/(k+1) moments of the parameter powers.
MatChain integrate_path_chain(const PathChain& c);

/// The transgression map itself: integrate the integrand over [0,1] with the
/// exact 1/(k+1) moments. Requires degree >= 1.
MatChain jay(const PathChain& c);

/// Chain whose legs are sampled on one shared uniform grid over [0,1].
struct SampledChain {
    struct Term {
        cdouble coeff;
        std::vector<std::vector<CMat>> leg_samples; // [leg][grid index]
    };
    unsigned degree = 0;
    std::vector<double> grid;
    std::vector<Term> terms;
};

struct JaySampledResult {
    MatChain chain;
    double error_estimate; // half-grid refinement difference, flattened scale
};

/// Composite-Simpson form of the transgression map on sampled legs, with the
/// first-leg derivative taken on the grid. Needs an odd uniform grid of at
/// least 5 points; the estimate compares against the half grid when one exists.
JaySampledResult jay_sampled(const SampledChain& c);

/// Degree-0 chain collapsed to a single matrix.
CMat mat_chain_value(const MatChain& c);

/// Kronecker flattening of a constant-leg chain; two chains are equal as
/// tensors iff their flattenings agree. Guarded against blowup.
CMat flatten(const MatChain& c);

/// Max over the parameter-degree slices of the flattened coefficient norms;
/// zero iff the path chain is the zero tensor for every parameter value.
double path_chain_flat_norm(const PathChain& c);

/// Composite-Simpson weights on a uniform odd-count grid with step h.
std::vector<double> simpson_weights_uniform(std::size_t count, double h);

/// Second-order differentiation of grid samples (one-sided at the ends).
std::vector<CMat> grid_derivative_uniform(const std::vector<CMat>& f, double h);

class Chain;

/// Evaluate a free-algebra element along the generator paths tx, ty.
MatPoly eval_poly_path(const FreePoly& p, const MatPoly& tx, const MatPoly& ty);

/// Path chain obtained by evaluating every leg of an exact chain.
PathChain chain_to_path(const Chain& c, const MatPoly& tx, const MatPoly& ty);

} // namespace homindex

#endif
