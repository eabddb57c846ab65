#include "homindex/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homindex {

namespace {

void check_hermitian(const CMat& a, double tol) {
    const std::size_t d = a.dim();
    double scale = a.max_abs();
    if (scale == 0.0) return;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol * scale)
                throw std::invalid_argument("matrix is not Hermitian");
}

double offdiag_norm(const CMat& a) {
    double s = 0.0;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

struct Rotation {
    double c;
    double s;
    cdouble phase; // e^{i phi} with a(p,q) = |a(p,q)| e^{i phi}
};

// Angle zeroing the (p,q) entry of the Hermitian 2x2 block.
Rotation make_rotation(double app, double aqq, cdouble apq) {
    Rotation r;
    const double g = std::abs(apq);
    r.phase = apq / g;
    const double tau = (aqq - app) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    r.c = 1.0 / std::sqrt(1.0 + t * t);
    r.s = t * r.c;
    return r;
}

// A <- J* A J and V <- V J for the plane (p,q) with J = [[c, s],[-s e^{-i phi}, c e^{-i phi}]].
void apply_two_sided(CMat& a, CMat& v, std::size_t p, std::size_t q, const Rotation& r) {
    const std::size_t d = a.dim();
    const cdouble ph = r.phase;
    const cdouble phc = std::conj(ph);
    // column update: C = A J
    for (std::size_t i = 0; i < d; ++i) {
        const cdouble aip = a(i, p), aiq = a(i, q);
        a(i, p) = r.c * aip - r.s * phc * aiq;
        a(i, q) = r.s * aip + r.c * phc * aiq;
    }
    // row update: A' = J* C
    for (std::size_t j = 0; j < d; ++j) {
        const cdouble apj = a(p, j), aqj = a(q, j);
        a(p, j) = r.c * apj - r.s * ph * aqj;
        a(q, j) = r.s * apj + r.c * ph * aqj;
    }
    for (std::size_t i = 0; i < d; ++i) {
        const cdouble vip = v(i, p), viq = v(i, q);
        v(i, p) = r.c * vip - r.s * phc * viq;
        v(i, q) = r.s * vip + r.c * phc * viq;
    }
}

HermitianEig finish(CMat& a, CMat& v) {
    const std::size_t d = a.dim();
    HermitianEig out;
    out.values.resize(d);
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) {
        out.values[i] = a(i, i).real();
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return out.values[l] < out.values[r];
    });
    std::vector<double> sorted(d);
    CMat vs(d);
    for (std::size_t k = 0; k < d; ++k) {
        sorted[k] = out.values[order[k]];
        for (std::size_t i = 0; i < d; ++i) vs(i, k) = v(i, order[k]);
    }
    out.values = std::move(sorted);
    out.vectors = std::move(vs);
    return out;
}

constexpr int kMaxSweeps = 64;

} // namespace

HermitianEig hermitian_eig(const CMat& a_in, double herm_tol) {
    check_hermitian(a_in, herm_tol);
    CMat a = a_in;
    const std::size_t d = a.dim();
    CMat v = CMat::identity(d);
    if (d <= 1) return finish(a, v);
    const double stop = 1e-15 * std::max(a.frobenius(), 1e-300);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                Rotation r = make_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
                apply_two_sided(a, v, p, q, r);
            }
    }
    return finish(a, v);
}

HermitianEig hermitian_eig_parallel(const CMat& a_in, double herm_tol) {
    check_hermitian(a_in, herm_tol);
    CMat a = a_in;
    const std::size_t d = a.dim();
    CMat v = CMat::identity(d);
    if (d <= 1) return finish(a, v);

    // round-robin tournament: n slots (n even), d-1 rounds of disjoint pairs
    const std::size_t n = d + (d % 2);
    std::vector<std::size_t> slot(n);
    for (std::size_t i = 0; i < n; ++i) slot[i] = i;

    const double stop = 1e-15 * std::max(a.frobenius(), 1e-300);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (std::size_t round = 0; round + 1 < n; ++round) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            std::vector<Rotation> rots;
            pairs.reserve(n / 2);
            for (std::size_t k = 0; k < n / 2; ++k) {
                std::size_t p = slot[k], q = slot[n - 1 - k];
                if (p > q) std::swap(p, q);
                if (q >= d || std::abs(a(p, q)) <= 1e-300) continue;
                pairs.emplace_back(p, q);
                rots.push_back(make_rotation(a(p, p).real(), a(q, q).real(), a(p, q)));
            }
            // disjoint planes: column phase first, then row phase
            const long long m = (long long)pairs.size();
#pragma omp parallel for schedule(static)
            for (long long k = 0; k < m; ++k) {
                auto [p, q] = pairs[(std::size_t)k];
                const Rotation& r = rots[(std::size_t)k];
                const cdouble phc = std::conj(r.phase);
                for (std::size_t i = 0; i < d; ++i) {
                    const cdouble aip = a(i, p), aiq = a(i, q);
                    a(i, p) = r.c * aip - r.s * phc * aiq;
                    a(i, q) = r.s * aip + r.c * phc * aiq;
                }
            }
#pragma omp parallel for schedule(static)
            for (long long k = 0; k < m; ++k) {
                auto [p, q] = pairs[(std::size_t)k];
                const Rotation& r = rots[(std::size_t)k];
                const cdouble ph = r.phase;
                const cdouble phc = std::conj(ph);
                for (std::size_t j = 0; j < d; ++j) {
                    const cdouble apj = a(p, j), aqj = a(q, j);
                    a(p, j) = r.c * apj - r.s * ph * aqj;
                    a(q, j) = r.s * apj + r.c * ph * aqj;
                }
                for (std::size_t i = 0; i < d; ++i) {
                    const cdouble vip = v(i, p), viq = v(i, q);
                    v(i, p) = r.c * vip - r.s * phc * viq;
                    v(i, q) = r.s * vip + r.c * phc * viq;
                }
            }
            // rotate tournament slots, slot[0] fixed
            std::size_t last = slot[n - 1];
            for (std::size_t i = n - 1; i > 1; --i) slot[i] = slot[i - 1];
            slot[1] = last;
        }
    }
    return finish(a, v);
}

namespace {

struct ColRot {
    double c, s;
    cdouble phase;
};

// Zeroes the Gram off-diagonal of columns (i, j); returns false when already orthogonal.
bool column_rotation(const CMat& a, std::size_t i, std::size_t j, double eps, ColRot& out) {
    const std::size_t d = a.dim();
    double alpha = 0.0, beta = 0.0;
    cdouble gamma = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        alpha += std::norm(a(k, i));
        beta += std::norm(a(k, j));
        gamma += std::conj(a(k, i)) * a(k, j);
    }
    const double g = std::abs(gamma);
    if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) return false;
    out.phase = gamma / g;
    const double tau = (beta - alpha) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    out.c = 1.0 / std::sqrt(1.0 + t * t);
    out.s = t * out.c;
    return true;
}

void apply_column_rotation(CMat& a, std::size_t i, std::size_t j, const ColRot& r) {
    const std::size_t d = a.dim();
    const cdouble phc = std::conj(r.phase);
    for (std::size_t k = 0; k < d; ++k) {
        const cdouble ci = a(k, i), cj = a(k, j) * phc;
        a(k, i) = r.c * ci - r.s * cj;
        a(k, j) = r.s * ci + r.c * cj;
    }
}

std::vector<double> column_norms_sorted(const CMat& a) {
    const std::size_t d = a.dim();
    std::vector<double> sv(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) s += std::norm(a(k, j));
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

constexpr double kOneSidedEps = 1e-14;

} // namespace

std::vector<double> singular_values(const CMat& a_in) {
    CMat a = a_in;
    const std::size_t d = a.dim();
    if (d <= 1) return column_norms_sorted(a);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                ColRot r;
                if (column_rotation(a, i, j, kOneSidedEps, r)) {
                    apply_column_rotation(a, i, j, r);
                    rotated = true;
                }
            }
        if (!rotated) break;
    }
    return column_norms_sorted(a);
}

std::vector<double> singular_values_parallel(const CMat& a_in) {
    CMat a = a_in;
    const std::size_t d = a.dim();
    if (d <= 1) return column_norms_sorted(a);
    const std::size_t n = d + (d % 2);
    std::vector<std::size_t> slot(n);
    for (std::size_t i = 0; i < n; ++i) slot[i] = i;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        int rotated = 0;
        for (std::size_t round = 0; round + 1 < n; ++round) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t k = 0; k < n / 2; ++k) {
                std::size_t p = slot[k], q = slot[n - 1 - k];
                if (p > q) std::swap(p, q);
                if (q < d) pairs.emplace_back(p, q);
            }
            const long long m = (long long)pairs.size();
#pragma omp parallel for schedule(static)
            for (long long k = 0; k < m; ++k) {
                auto [p, q] = pairs[(std::size_t)k];
                ColRot r;
                if (column_rotation(a, p, q, kOneSidedEps, r)) {
                    apply_column_rotation(a, p, q, r);
#pragma omp atomic write
                    rotated = 1;
                }
            }
            std::size_t last = slot[n - 1];
            for (std::size_t i = n - 1; i > 1; --i) slot[i] = slot[i - 1];
            slot[1] = last;
        }
        if (!rotated) break;
    }
    return column_norms_sorted(a);
}

HermitianEig eig_dispatch(const CMat& a, double herm_tol) {
    if (a.dim() >= kernels::parallel_threshold())
        return hermitian_eig_parallel(a, herm_tol);
    return hermitian_eig(a, herm_tol);
}

std::vector<double> sv_dispatch(const CMat& a) {
    if (a.dim() >= kernels::parallel_threshold())
        return singular_values_parallel(a);
    return singular_values(a);
}

CMat hermitian_function(const HermitianEig& e, double (*f)(double)) {
    const std::size_t d = e.vectors.dim();
    CMat scaled(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double fj = f(e.values[j]);
        for (std::size_t i = 0; i < d; ++i) scaled(i, j) = e.vectors(i, j) * fj;
    }
    return scaled * e.vectors.adjoint();
}

} // namespace homindex
