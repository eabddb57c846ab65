#include "homindex/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "homindex/numop.hpp"
#include "homindex/schatten.hpp"

namespace homindex {

namespace {

void validate_grid(unsigned points) {
    if (points < 4 || points % 2 != 0)
        throw std::invalid_argument("lattice needs an even point count >= 4");
}

std::size_t pow_size(std::size_t base, unsigned exp) {
    std::size_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// multi-index decode: axis a digit of the site id
inline unsigned site_digit(std::size_t site, unsigned axis, unsigned points) {
    for (unsigned a = 0; a < axis; ++a) site /= points;
    return unsigned(site % points);
}

std::vector<double> site_position(std::size_t site, unsigned dims, unsigned points,
                                  double half_width, double h) {
    std::vector<double> x(dims);
    for (unsigned a = 0; a < dims; ++a) {
        x[a] = -half_width + h * double(site % points);
        site /= points;
    }
    return x;
}

// derivative matrix on the bare site space (V x V), central difference
CMat site_derivative(unsigned dims, unsigned points, double h, unsigned axis) {
    const std::size_t v = pow_size(points, dims);
    const std::size_t stride = pow_size(points, axis);
    CMat m(v);
    const double c = 1.0 / (2.0 * h);
    for (std::size_t site = 0; site < v; ++site) {
        const unsigned digit = site_digit(site, axis, points);
        const std::size_t up = site + stride * ((digit + 1) % points) - stride * digit;
        const std::size_t down = site + stride * ((digit + points - 1) % points) - stride * digit;
        m(site, up) += c;
        m(site, down) -= c;
    }
    return m;
}

CMat scalar_laplacian(unsigned dims, unsigned points, double h) {
    const std::size_t v = pow_size(points, dims);
    CMat acc(v);
    for (unsigned a = 0; a < dims; ++a) {
        CMat d = site_derivative(dims, points, h, a);
        acc -= d * d;
    }
    return acc;
}

// (1 + Delta)^{-s} through the plane-wave modes of the circulant stencils
CMat scalar_inverse_power(unsigned dims, unsigned points, double h, double s) {
    const std::size_t v = pow_size(points, dims);
    const unsigned N = points;

    // per-axis mode frequencies of -d^2
    std::vector<double> nu2(N);
    for (unsigned k = 0; k < N; ++k) {
        const double sk = std::sin(2.0 * M_PI * double(k) / double(N)) / h;
        nu2[k] = sk * sk;
    }
    // phase table e^{2 pi i k r / N}
    std::vector<cdouble> phase(N * N);
    for (unsigned k = 0; k < N; ++k)
        for (unsigned r = 0; r < N; ++r)
            phase[k * N + r] = std::polar(1.0, 2.0 * M_PI * double(k) * double(r) / double(N));

    // displacement kernel
    std::vector<cdouble> kernel(v);
#pragma omp parallel for schedule(static)
    for (long long disp = 0; disp < (long long)v; ++disp) {
        cdouble acc = 0.0;
        for (std::size_t mode = 0; mode < v; ++mode) {
            double lam = 0.0;
            cdouble ph = 1.0;
            std::size_t mm = mode;
            std::size_t dd = (std::size_t)disp;
            for (unsigned a = 0; a < dims; ++a) {
                const unsigned km = unsigned(mm % N);
                const unsigned rm = unsigned(dd % N);
                lam += nu2[km];
                ph *= phase[km * N + rm];
                mm /= N;
                dd /= N;
            }
            acc += std::pow(1.0 + lam, -s) * ph;
        }
        kernel[(std::size_t)disp] = acc / double(v);
    }

    CMat out(v);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            // displacement (i - j) per axis, modulo N
            std::size_t ii = (std::size_t)i, jj = j, disp = 0, stride = 1;
            for (unsigned a = 0; a < dims; ++a) {
                const unsigned di = unsigned(ii % N), dj = unsigned(jj % N);
                disp += stride * ((di + N - dj) % N);
                ii /= N;
                jj /= N;
                stride *= N;
            }
            out((std::size_t)i, j) = kernel[disp];
        }
    }
    return out;
}

} // namespace

std::size_t LatticeSpec::site_count() const { return pow_size(points, 2 * half_dim); }

void LatticeSpec::validate() const {
    if (half_dim == 0) throw std::invalid_argument("half dimension must be >= 1");
    validate_grid(points);
    if (half_width <= 0.0) throw std::invalid_argument("half width must be positive");
}

std::size_t ScalarGrid::site_count() const { return pow_size(points, space_dim); }

void ScalarGrid::validate() const {
    if (space_dim == 0) throw std::invalid_argument("space dimension must be >= 1");
    validate_grid(points);
    if (half_width <= 0.0) throw std::invalid_argument("half width must be positive");
}

Potential make_potential(const std::string& name, double amplitude, double scale) {
    Potential pot;
    pot.name = name;
    pot.value_dim = 1;
    if (name == "zero") {
        pot.component = [](unsigned, const std::vector<double>&) { return CMat(1); };
        return pot;
    }
    if (name == "gaussian") {
        pot.component = [amplitude, scale](unsigned, const std::vector<double>& x) {
            double r2 = 0.0;
            for (double c : x) r2 += c * c;
            CMat m(1);
            m(0, 0) = amplitude * std::exp(-r2 / (scale * scale));
            return m;
        };
        return pot;
    }
    if (name == "inverse-poly") {
        pot.component = [amplitude, scale](unsigned, const std::vector<double>& x) {
            double r2 = 0.0;
            for (double c : x) r2 += c * c;
            CMat m(1);
            m(0, 0) = amplitude / std::pow(1.0 + r2, scale / 2.0);
            return m;
        };
        return pot;
    }
    throw std::invalid_argument("unknown potential rule: " + name);
}

std::vector<std::string> potential_names() { return {"zero", "gaussian", "inverse-poly"}; }

std::size_t dimension_budget() {
    if (const char* env = std::getenv("HOMINDEX_BUDGET")) {
        const long v = std::atol(env);
        if (v > 0) return (std::size_t)v;
    }
    return 16384;
}

CMat lattice_derivative(const LatticeSpec& spec, unsigned axis) {
    spec.validate();
    if (axis >= 2 * spec.half_dim) throw std::invalid_argument("axis out of range");
    return site_derivative(2 * spec.half_dim, spec.points, spec.spacing(), axis);
}

DiracPair dirac_assemble(const LatticeSpec& spec, const Potential& pot) {
    spec.validate();
    const unsigned dims = 2 * spec.half_dim;
    const CliffordRep cl = clifford_build(spec.half_dim);
    const std::size_t v = spec.site_count();
    const std::size_t sdim = cl.rep_dim();
    const std::size_t pdim = pot.value_dim;
    const std::size_t total = v * sdim * pdim;
    if (total > dimension_budget())
        throw std::invalid_argument("lattice dimension exceeds the configured budget");

    const double h = spec.spacing();
    const double c = 1.0 / (2.0 * h);
    const unsigned last_axis = dims - 1;

    // pointwise potential samples, Hermiticity checked once per site
    std::vector<std::vector<CMat>> a_samples(dims);
    for (unsigned j = 0; j < dims; ++j) {
        a_samples[j].reserve(v);
        for (std::size_t site = 0; site < v; ++site) {
            std::vector<double> x = site_position(site, dims, spec.points, spec.half_width, h);
            CMat aj = pot.component(j, x);
            if (aj.dim() != pdim)
                throw std::invalid_argument("potential component dimension mismatch");
            if ((aj - aj.adjoint()).max_abs() > 1e-12 * std::max(1.0, aj.max_abs()))
                throw std::invalid_argument("non-Hermitian potential sample");
            a_samples[j].push_back(std::move(aj));
        }
    }

    auto assemble = [&](double sign) {
        CMat m(total);
#pragma omp parallel for schedule(static)
        for (long long site_ll = 0; site_ll < (long long)v; ++site_ll) {
            const std::size_t site = (std::size_t)site_ll;
            auto idx = [&](std::size_t st, std::size_t sp, std::size_t pp) {
                return (st * sdim + sp) * pdim + pp;
            };
            // derivative hops
            for (unsigned axis = 0; axis < dims; ++axis) {
                const std::size_t stride = pow_size(spec.points, axis);
                const unsigned digit = site_digit(site, axis, spec.points);
                const std::size_t up = site + stride * ((digit + 1) % spec.points) - stride * digit;
                const std::size_t down = site + stride * ((digit + spec.points - 1) % spec.points) - stride * digit;
                if (axis == last_axis) {
                    const cdouble hop(sign * c, 0.0);
                    for (std::size_t sp = 0; sp < sdim; ++sp)
                        for (std::size_t pp = 0; pp < pdim; ++pp) {
                            m(idx(site, sp, pp), idx(up, sp, pp)) += hop;
                            m(idx(site, sp, pp), idx(down, sp, pp)) -= hop;
                        }
                } else {
                    const CMat& cj = cl.gens[axis];
                    for (std::size_t sp = 0; sp < sdim; ++sp)
                        for (std::size_t sq = 0; sq < sdim; ++sq) {
                            const cdouble entry = cdouble(0.0, c) * cj(sp, sq);
                            if (entry == cdouble(0.0, 0.0)) continue;
                            for (std::size_t pp = 0; pp < pdim; ++pp) {
                                m(idx(site, sp, pp), idx(up, sq, pp)) += entry;
                                m(idx(site, sp, pp), idx(down, sq, pp)) -= entry;
                            }
                        }
                }
            }
            // potential terms
            for (std::size_t pp = 0; pp < pdim; ++pp)
                for (std::size_t pq = 0; pq < pdim; ++pq) {
                    const cdouble a_last = a_samples[last_axis][site](pp, pq);
                    if (a_last != cdouble(0.0, 0.0)) {
                        const cdouble term = cdouble(0.0, sign) * a_last;
                        for (std::size_t sp = 0; sp < sdim; ++sp)
                            m(idx(site, sp, pp), idx(site, sp, pq)) += term;
                    }
                    for (unsigned j = 0; j < last_axis; ++j) {
                        const cdouble aj = a_samples[j][site](pp, pq);
                        if (aj == cdouble(0.0, 0.0)) continue;
                        const CMat& cj = cl.gens[j];
                        for (std::size_t sp = 0; sp < sdim; ++sp)
                            for (std::size_t sq = 0; sq < sdim; ++sq) {
                                const cdouble entry = cj(sp, sq);
                                if (entry == cdouble(0.0, 0.0)) continue;
                                m(idx(site, sp, pp), idx(site, sq, pq)) -= entry * aj;
                            }
                    }
                }
        }
        return m;
    };

    DiracPair pair{assemble(1.0), assemble(-1.0), 0.0};
    pair.adjoint_defect = (pair.minus - pair.plus.adjoint()).max_abs();
    const double scale = std::max(1.0, pair.plus.max_abs());
    if (pair.adjoint_defect > 1e-12 * scale)
        throw std::runtime_error("assembled pair is not mutually adjoint");
    return pair;
}

CMat laplacian_inverse_power(const ScalarGrid& grid, double s) {
    grid.validate();
    return scalar_inverse_power(grid.space_dim, grid.points, grid.spacing(), s);
}

CMat laplacian_dense(const ScalarGrid& grid) {
    grid.validate();
    return scalar_laplacian(grid.space_dim, grid.points, grid.spacing());
}

RefinementTable schatten_decay_experiment(const ScalarGrid& base,
                                          const std::function<double(const std::vector<double>&)>& f,
                                          double s, double r, double p, double eps) {
    base.validate();
    const double m = double(base.space_dim);
    if (s < 0.0 || r < 0.0 || eps <= 0.0 || s + r <= 0.0 || s + r > m / 2.0 || p < 1.0)
        throw std::invalid_argument("decay parameters outside the admissible ranges");
    if (std::abs(p - m / (2.0 * (s + r))) > 1e-9)
        throw std::invalid_argument("exponent p must match m / (2 (s + r))");

    RefinementTable table;
    ScalarGrid grid = base;
    for (int level = 0; level < 2; ++level) {
        const std::size_t v = grid.site_count();
        if (v > dimension_budget())
            throw std::invalid_argument("grid size exceeds the configured budget");
        CMat fd(v);
        const double h = grid.spacing();
        for (std::size_t site = 0; site < v; ++site) {
            std::vector<double> x =
                site_position(site, grid.space_dim, grid.points, grid.half_width, h);
            fd(site, site) = f(x);
        }
        CMat op = fd * laplacian_inverse_power(grid, r + eps);
        if (s > 0.0) op = laplacian_inverse_power(grid, s) * op;
        table.rows.push_back({grid.points, grid.half_width, schatten_norm(op, p).value});
        // double the box at fixed spacing
        grid.points *= 2;
        grid.half_width *= 2.0;
    }
    table.ratio = table.rows.back().value /
                  std::max(table.rows.front().value, 1e-300);
    return table;
}

std::vector<ScalingRow> scaling_family(const LatticeSpec& spec, const Potential& pot,
                                       const std::vector<double>& lambda_grid) {
    DiracPair pair = dirac_assemble(spec, pot);
    const unsigned n = spec.half_dim;
    std::vector<ScalingRow> rows;
    for (double lambda : lambda_grid) {
        if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
        ScalingRow row;
        row.lambda = lambda;
        CMat scaled = cdouble(1.0 / std::sqrt(lambda), 0.0) * pair.plus;
        BoundedTransform bt = bounded_transform(scaled, 1e-8);
        row.transform_defect = std::max(bt.defect_plus, bt.defect_minus);
        row.index_value = homological_index_dense(bt.op, n);
        const std::size_t d = bt.op.dim();
        const CMat id = CMat::identity(d);
        const CMat ta = bt.op.adjoint();
        CMat diff = mat_pow(id - ta * bt.op, n) - mat_pow(id - bt.op * ta, n);
        row.difference_norm = schatten_norm(diff, std::max(1.0, double(n))).value;
        rows.push_back(row);
    }
    return rows;
}

} // namespace homindex
