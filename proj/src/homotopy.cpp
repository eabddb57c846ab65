#include "homindex/homotopy.hpp"

#include <cmath>
#include <stdexcept>

#include "homindex/cycles.hpp"
#include "homindex/evaluate.hpp"
#include "homindex/schatten.hpp"

namespace homindex {

namespace {

PathChain concat(PathChain a, const PathChain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("chain degree mismatch");
    for (const auto& t : b.terms) a.terms.push_back(t);
    return a;
}

MatChain concat(MatChain a, const MatChain& b) {
    if (a.degree != b.degree) throw std::invalid_argument("chain degree mismatch");
    for (const auto& t : b.terms) a.terms.push_back(t);
    return a;
}

void require_uniform(const std::vector<double>& grid) {
    const double h = grid[1] - grid[0];
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-10)
            throw std::invalid_argument("sampled operations need a uniform grid");
}

} // namespace

AnticommutatorReport bj_plus_jb_check(const PathChain& c) {
    if (c.degree < 2)
        throw std::invalid_argument("the anticommutation check needs degree >= 2");
    AnticommutatorReport rep{};
    PathChain pointwise = concat(path_b(jay_integrand(c)), jay_integrand(path_b(c)));
    rep.pointwise_defect = path_chain_flat_norm(pointwise);
    MatChain integrated = concat(mat_b(jay(c)), jay(path_b(c)));
    rep.integrated_defect = flatten(integrated).max_abs();
    return rep;
}

JbFormulaReport jb_formula_check(const PathChain& c) {
    const unsigned n = c.degree;
    PathChain lhs = jay_integrand(path_B(c));

    PathChain rhs;
    rhs.degree = n;
    for (const auto& term : c.terms) {
        for (unsigned i = 0; i <= n; ++i) {
            PathChain::Term rot;
            rot.coeff = ((std::size_t(i) * n) % 2 == 0) ? term.coeff : -term.coeff;
            rot.legs.push_back(term.legs[i].derivative());
            for (unsigned j = i + 1; j <= n; ++j) rot.legs.push_back(term.legs[j]);
            for (unsigned j = 0; j < i; ++j) rot.legs.push_back(term.legs[j]);
            rhs.terms.push_back(std::move(rot));
        }
    }

    JbFormulaReport rep{};
    PathChain diff = lhs;
    for (auto term : rhs.terms) {
        term.coeff = -term.coeff;
        diff.terms.push_back(std::move(term));
    }
    rep.pointwise_defect = path_chain_flat_norm(diff);
    MatChain ints = integrate_path_chain(lhs);
    for (auto term : integrate_path_chain(rhs).terms) {
        term.coeff = -term.coeff;
        ints.terms.push_back(std::move(term));
    }
    rep.integrated_defect = flatten(ints).max_abs();
    return rep;
}

namespace {

// b(J(-gamma2)) for a polynomial path.
CMat boundary_term_polynomial(const MatPoly& tx, unsigned n) {
    const MatPoly ty = tx.adjoint();
    GammaCycle g = gamma_cycle(n);
    PathChain y_chain = chain_to_path(g.gamma2, tx, ty);
    for (auto& term : y_chain.terms) term.coeff = -term.coeff;
    return mat_chain_value(mat_b(jay(y_chain)));
}

// Same contraction through grid quadrature for a sampled path.
CMat boundary_term_sampled(const std::vector<double>& grid,
                           const std::vector<CMat>& samples, unsigned n,
                           double* estimate) {
    const std::size_t d = samples.front().dim();
    GammaCycle g = gamma_cycle(n);

    SampledChain y_chain;
    y_chain.degree = 2;
    y_chain.grid = grid;
    for (const auto& [tensor, coeff] : g.gamma2.terms()) {
        SampledChain::Term term;
        term.coeff = -coeff.to_complex();
        term.leg_samples.resize(3);
        for (std::size_t leg = 0; leg < 3; ++leg) {
            term.leg_samples[leg].reserve(grid.size());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                CMat m = CMat::identity(d);
                for (char l : tensor[leg].letters())
                    m = m * (l == 'x' ? samples[i] : samples[i].adjoint());
                term.leg_samples[leg].push_back(std::move(m));
            }
        }
        y_chain.terms.push_back(std::move(term));
    }
    JaySampledResult j = jay_sampled(y_chain);
    if (estimate) *estimate = j.error_estimate;
    return mat_chain_value(mat_b(j.chain));
}

} // namespace

TransgressionReport transgression_check(const OperatorPath& path, unsigned n) {
    if (n == 0) throw std::invalid_argument("degree must be >= 1");
    TransgressionReport rep{};
    const FreePoly cycle0 = elem_w().pow(n) - elem_v().pow(n);

    for (int i = 0; i <= 10; ++i) {
        const double t = (path.kind == OperatorPath::Kind::polynomial)
            ? double(i) / 10.0
            : path.grid[(i * (path.grid.size() - 1)) / 10];
        rep.max_path_norm = std::max(rep.max_path_norm, operator_norm(path.eval(t)));
    }

    if (path.kind == OperatorPath::Kind::polynomial) {
        const MatPoly& tx = path.poly;
        const MatPoly ty = tx.adjoint();
        MatPoly evaluated = eval_poly_path(cycle0, tx, ty);
        CMat lhs = evaluated.eval(0.0) - evaluated.eval(1.0);
        CMat rhs = boundary_term_polynomial(tx, n);
        rep.residual = (lhs - rhs).frobenius();

        // the inner sum has two printed closed forms; they must agree
        const std::size_t d = tx.dim();
        MatPoly r_minus = MatPoly::identity(d) - tx * ty;
        MatPoly r_plus = MatPoly::identity(d) - ty * tx;
        MatPoly left = MatPoly::zero(d), right = MatPoly::zero(d);
        MatPoly pm = MatPoly::identity(d), pp = MatPoly::identity(d);
        for (unsigned k = 0; k < n; ++k) {
            left = left + pm * tx;
            right = right + tx * pp;
            pm = pm * r_minus;
            pp = pp * r_plus;
        }
        rep.omega_defect = left.max_coeff_distance(right);
        rep.quadrature_estimate = 0.0;
        return rep;
    }

    require_uniform(path.grid);
    CMat pi0 = evaluate(cycle0, evaluation_from_operator(path.samples.front()));
    CMat pi1 = evaluate(cycle0, evaluation_from_operator(path.samples.back()));
    double estimate = 0.0;
    CMat rhs = boundary_term_sampled(path.grid, path.samples, n, &estimate);
    rep.residual = ((pi0 - pi1) - rhs).frobenius();
    rep.quadrature_estimate = std::isnan(estimate) ? rep.residual : estimate;
    rep.omega_defect = 0.0;
    return rep;
}

ContinuityReport invariance_hypotheses_check(const OperatorPath& path, unsigned n,
                                             const std::vector<double>& t_grid,
                                             double flag_threshold) {
    if (n == 0) throw std::invalid_argument("degree must be >= 1");
    if (t_grid.size() < 2)
        throw std::invalid_argument("the grid needs at least two points");
    const std::size_t d = path.dim();

    // doubled selfadjoint form [[0, T*],[T, 0]] and R = 1 - T^2 on it
    auto doubled = [&](const CMat& t) {
        CMat m(2 * d);
        const CMat ta = t.adjoint();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                m(i, d + j) = ta(i, j);
                m(d + i, j) = t(i, j);
            }
        return m;
    };

    std::vector<CMat> power_derivative, velocity_power;
    if (path.kind == OperatorPath::Kind::polynomial) {
        // lift the matrix polynomial to the doubled form coefficientwise
        std::vector<CMat> lifted;
        for (const auto& c : path.poly.coeffs()) lifted.push_back(doubled(c));
        MatPoly td{std::vector<CMat>(lifted)};
        MatPoly r = MatPoly::identity(2 * d) - td * td;
        MatPoly rn = MatPoly::identity(2 * d);
        for (unsigned k = 0; k < n; ++k) rn = rn * r;
        MatPoly drn = rn.derivative();
        MatPoly vel = td.derivative();
        for (double t : t_grid) {
            power_derivative.push_back(drn.eval(t));
            velocity_power.push_back(vel.eval(t) * rn.eval(t));
        }
    } else {
        require_uniform(t_grid);
        std::vector<CMat> td, rn;
        for (double t : t_grid) {
            CMat m = doubled(path.eval(t));
            td.push_back(m);
            rn.push_back(mat_pow(CMat::identity(2 * d) - m * m, n));
        }
        const double h = t_grid[1] - t_grid[0];
        power_derivative = grid_derivative_uniform(rn, h);
        std::vector<CMat> vel = grid_derivative_uniform(td, h);
        for (std::size_t i = 0; i < t_grid.size(); ++i)
            velocity_power.push_back(vel[i] * rn[i]);
    }

    ContinuityReport rep;
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
        ContinuityRow row;
        row.t_lo = t_grid[i];
        row.t_hi = t_grid[i + 1];
        row.modulus_power_derivative =
            trace_norm(power_derivative[i + 1] - power_derivative[i]);
        row.modulus_velocity_power =
            trace_norm(velocity_power[i + 1] - velocity_power[i]);
        row.flagged = row.modulus_power_derivative > flag_threshold ||
                      row.modulus_velocity_power > flag_threshold;
        rep.max_modulus = std::max({rep.max_modulus, row.modulus_power_derivative,
                                    row.modulus_velocity_power});
        rep.any_flagged = rep.any_flagged || row.flagged;
        rep.rows.push_back(row);
    }
    return rep;
}

PathIndexReport index_along_path(const std::function<ShiftOp(double)>& family,
                                 unsigned n, const std::vector<double>& t_grid,
                                 double tol) {
    PathIndexReport rep;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double t : t_grid) {
        ShiftOp op = family(t);
        ShiftIndexResult r = homological_index_shift(op, n, tol);
        rep.slices.push_back({t, r.value, r.bound});
        if (first) {
            lo = hi = r.value;
            first = false;
        } else {
            lo = std::min(lo, r.value);
            hi = std::max(hi, r.value);
        }
    }
    rep.spread = hi - lo;
    return rep;
}

} // namespace homindex
