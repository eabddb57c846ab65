#include "homindex/numop.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homindex {

namespace {

void require_hermitian(const CMat& m, const char* what) {
    const double scale = std::max(m.max_abs(), 1e-300);
    const std::size_t d = m.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-10 * scale)
                throw std::invalid_argument(std::string(what) + " must be Hermitian");
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace

double homological_index_dense(const CMat& t, unsigned n) {
    const std::size_t d = t.dim();
    const CMat id = CMat::identity(d);
    const CMat ta = t.adjoint();
    const CMat r_plus = id - ta * t;  // 1 - T*T
    const CMat r_minus = id - t * ta; // 1 - TT*
    return (mat_pow(r_plus, n).trace() - mat_pow(r_minus, n).trace()).real();
}

BoundedTransform bounded_transform(const CMat& d, double tol) {
    const std::size_t dim = d.dim();
    const CMat id = CMat::identity(dim);
    const CMat da = d.adjoint();
    const CMat w = da * d;
    HermitianEig e = eig_dispatch(w, 1e-8);
    CMat half(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const double f = 1.0 / std::sqrt(1.0 + std::max(e.values[j], 0.0));
        for (std::size_t i = 0; i < dim; ++i) half(i, j) = e.vectors(i, j) * f;
    }
    BoundedTransform out;
    out.op = d * (half * e.vectors.adjoint());

    const CMat ta = out.op.adjoint();
    const CMat lhs_plus = id - ta * out.op;
    const CMat lhs_minus = id - out.op * ta;
    const CMat inv_plus = inverse(id + w);
    const CMat inv_minus = inverse(id + d * da);
    out.defect_plus = (lhs_plus - inv_plus).frobenius();
    out.defect_minus = (lhs_minus - inv_minus).frobenius();
    if (out.defect_plus > tol || out.defect_minus > tol)
        throw std::runtime_error("bounded transform residual above tolerance");
    return out;
}

InverseSqrtResult inverse_sqrt_quadrature(const CMat& d, double tol, QuadratureKnobs knobs) {
    require_hermitian(d, "inverse_sqrt_quadrature input");
    if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
    const std::size_t dim = d.dim();
    const CMat id = CMat::identity(dim);
    const CMat dsq = d * d;

    const double cutoff = knobs.cutoff > 0.0
        ? knobs.cutoff
        : std::max(100.0, 4.0 / (M_PI * tol));
    const int panels = std::max(knobs.panels, 2);
    const int nodes = std::max(knobs.nodes, 4);

    // geometric grading: the integrand lives at u = O(1), the cutoff far out
    std::vector<double> bounds(panels + 1, 0.0);
    const double first = std::min(0.5, cutoff);
    bounds[1] = first;
    const double ratio = std::pow(cutoff / first, 1.0 / (panels - 1));
    for (int k = 2; k <= panels; ++k) bounds[k] = bounds[k - 1] * ratio;
    bounds[panels] = cutoff;

    auto integrate = [&](int n_nodes) {
        std::vector<double> gx, gw;
        gauss_legendre(n_nodes, gx, gw);
        CMat acc(dim);
        for (int p = 0; p < panels; ++p) {
            const double lo = bounds[p], hi = bounds[p + 1];
            const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            for (int q = 0; q < n_nodes; ++q) {
                const double u = mid + half * gx[q];
                CMat shifted = (cdouble(1.0 + u * u, 0.0) * id) + dsq;
                acc += (cdouble(half * gw[q] * 2.0 / M_PI, 0.0) * inverse(shifted));
            }
        }
        return acc;
    };

    InverseSqrtResult out;
    out.value = integrate(nodes);
    CMat coarse = integrate(nodes / 2);
    out.error_estimate = 2.0 / (M_PI * cutoff) + (out.value - coarse).frobenius();
    return out;
}

ResolventReport resolvent_suite(const CMat& d, const CMat& a, double t, double s,
                                double lambda) {
    require_hermitian(d, "resolvent_suite D");
    require_hermitian(a, "resolvent_suite A");
    if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
    const std::size_t dim = d.dim();
    const CMat id = CMat::identity(dim);
    const cdouble il(0.0, std::sqrt(lambda));

    auto d_at = [&](double tt) { return d + (cdouble(tt, 0.0) * a); };
    auto shifted_inv = [&](double tt) { return inverse((il * id) + d_at(tt)); };
    auto x_at = [&](double tt) { return a * shifted_inv(tt); };
    auto r_at = [&](double tt) {
        const CMat dt = d_at(tt);
        return inverse((cdouble(lambda, 0.0) * id) + dt * dt);
    };

    const CMat st = shifted_inv(t), ss = shifted_inv(s);
    const CMat xt = x_at(t), xs = x_at(s);
    const CMat rt = r_at(t), rs = r_at(s);
    const cdouble smt(s - t, 0.0);

    ResolventReport rep{};
    rep.shifted_resolvent_difference = ((st - ss) - (smt * (st * xs))).frobenius();
    rep.x_difference = ((xt - xs) - (smt * (xt * xs))).frobenius();
    rep.r_difference = ((rt - rs) - (smt * (rt * xs + xt.adjoint() * rs))).frobenius();
    const cdouble tms(t - s, 0.0);
    const CMat left = inverse(id + (tms * xs.adjoint()));
    const CMat right = inverse(id + (tms * xs));
    rep.sandwich = (rt - left * rs * right).frobenius();
    rep.max_residual = std::max({rep.shifted_resolvent_difference, rep.x_difference,
                                 rep.r_difference, rep.sandwich});
    return rep;
}

DerivativeReport derivative_suite(const CMat& d, const CMat& a, double lambda,
                                  unsigned n, double h) {
    require_hermitian(d, "derivative_suite D");
    require_hermitian(a, "derivative_suite A");
    if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
    if (h <= 0.0) throw std::invalid_argument("step must be positive");
    const std::size_t dim = d.dim();
    const CMat id = CMat::identity(dim);
    const cdouble il(0.0, std::sqrt(lambda));

    auto x_at = [&](double tt) {
        return a * inverse((il * id) + d + (cdouble(tt, 0.0) * a));
    };
    auto r_at = [&](double tt) {
        const CMat dt = d + (cdouble(tt, 0.0) * a);
        return inverse((cdouble(lambda, 0.0) * id) + dt * dt);
    };
    auto rn_at = [&](double tt) { return mat_pow(r_at(tt), n); };

    const CMat x0 = x_at(0.0), r0 = r_at(0.0);
    const CMat dx = cdouble(-1.0, 0.0) * (x0 * x0);
    const CMat dr = cdouble(-1.0, 0.0) * (r0 * x0 + x0.adjoint() * r0);
    CMat drn(dim);
    const CMat core = r0 * x0 + x0.adjoint() * r0;
    for (unsigned j = 0; j < n; ++j)
        drn += mat_pow(r0, j) * core * mat_pow(r0, n - 1 - j);
    drn = cdouble(-1.0, 0.0) * drn;

    auto central = [&](auto f, double step) {
        const cdouble inv2h(1.0 / (2.0 * step), 0.0);
        return inv2h * (f(step) - f(-step));
    };

    DerivativeReport rep{};
    rep.x_residual_h = (central(x_at, h) - dx).frobenius();
    rep.x_residual_h2 = (central(x_at, h / 2.0) - dx).frobenius();
    rep.r_residual_h = (central(r_at, h) - dr).frobenius();
    rep.r_residual_h2 = (central(r_at, h / 2.0) - dr).frobenius();
    rep.rn_residual_h = (central(rn_at, h) - drn).frobenius();
    rep.rn_residual_h2 = (central(rn_at, h / 2.0) - drn).frobenius();
    return rep;
}

KnChainNorm kn_norm_upper(const std::vector<std::vector<CMat>>& tensors, unsigned n) {
    KnChainNorm out;
    out.degree = n;
    if (tensors.empty()) return out;
    const std::size_t dim = tensors.front().front().dim();
    for (const auto& legs : tensors) {
        if (legs.size() != n + 1)
            throw std::invalid_argument("tensor arity does not match the degree");
        for (const auto& leg : legs)
            if (leg.dim() != dim)
                throw std::invalid_argument("tensor legs must share a dimension");
        double cyclic_sum = 0.0;
        for (unsigned rot = 0; rot <= n; ++rot) {
            CMat prod = CMat::identity(dim);
            for (unsigned i = 0; i <= n; ++i)
                prod = prod * legs[(n + 1 - rot + i) % (n + 1)];
            cyclic_sum += trace_norm(prod);
        }
        double norm_prod = 1.0;
        for (const auto& leg : legs) norm_prod *= operator_norm(leg);
        out.value += cyclic_sum + norm_prod;
    }
    return out;
}

double trace_cocycle_check(const CMat& x0, const CMat& x1) {
    return std::abs((x0 * x1).trace() - (x1 * x0).trace());
}

PairingReport pairing_check_dense(const CMat& t, unsigned n) {
    if (n == 0) throw std::invalid_argument("degree must be >= 1");
    PairingReport rep{};
    rep.index_value = homological_index_dense(t, n);
    const FreePoly cycle0 = elem_w().pow(n) - elem_v().pow(n);
    rep.pairing_value = evaluate(cycle0, evaluation_from_operator(t)).trace().real();
    rep.residual = std::abs(rep.index_value - rep.pairing_value);
    return rep;
}

void write_matrix_csv(const std::string& path, const CMat& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f.precision(17);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) f << ",";
            f << m(i, j).real() << "," << m(i, j).imag();
        }
        f << "\n";
    }
}

CMat read_matrix_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    const std::size_t d = rows.size();
    CMat m(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != 2 * d)
            throw std::runtime_error("matrix csv must have interleaved re/im columns");
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = {rows[i][2 * j], rows[i][2 * j + 1]};
    }
    return m;
}

} // namespace homindex
