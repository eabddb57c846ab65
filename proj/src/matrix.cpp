#include "homindex/matrix.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace homindex {
namespace kernels {

namespace {
std::atomic<std::size_t> g_parallel_threshold{96};

inline void mul_row(const cdouble* a, const cdouble* b, cdouble* out,
                    std::size_t d, std::size_t i) {
    cdouble* out_row = out + i * d;
    for (std::size_t j = 0; j < d; ++j) out_row[j] = 0.0;
    const cdouble* a_row = a + i * d;
    for (std::size_t k = 0; k < d; ++k) {
        const cdouble aik = a_row[k];
        if (aik == cdouble(0.0, 0.0)) continue;
        const cdouble* b_row = b + k * d;
        for (std::size_t j = 0; j < d; ++j) out_row[j] += aik * b_row[j];
    }
}
} // namespace

std::size_t parallel_threshold() { return g_parallel_threshold.load(); }
void set_parallel_threshold(std::size_t d) { g_parallel_threshold.store(d); }

void mul_serial(const CMat& a, const CMat& b, CMat& out) {
    const std::size_t d = a.dim();
    if (b.dim() != d) throw std::invalid_argument("matrix dimension mismatch");
    if (out.dim() != d) out = CMat(d);
    for (std::size_t i = 0; i < d; ++i) mul_row(a.data(), b.data(), out.data(), d, i);
}

void mul_parallel(const CMat& a, const CMat& b, CMat& out) {
    const std::size_t d = a.dim();
    if (b.dim() != d) throw std::invalid_argument("matrix dimension mismatch");
    if (out.dim() != d) out = CMat(d);
    const cdouble* ap = a.data();
    const cdouble* bp = b.data();
    cdouble* op = out.data();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)d; ++i)
        mul_row(ap, bp, op, d, (std::size_t)i);
}

CMat mul(const CMat& a, const CMat& b) {
    CMat out(a.dim());
    if (a.dim() >= parallel_threshold())
        mul_parallel(a, b, out);
    else
        mul_serial(a, b, out);
    return out;
}

} // namespace kernels

CMat kron(const CMat& a, const CMat& b) {
    const std::size_t da = a.dim(), db = b.dim();
    CMat r(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cdouble aij = a(i, j);
            if (aij == cdouble(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    r(i * db + k, j * db + l) = aij * b(k, l);
        }
    return r;
}

CMat mat_pow(const CMat& a, unsigned k) {
    CMat r = CMat::identity(a.dim());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

LU::LU(CMat a) : lu_(std::move(a)), perm_(lu_.dim()) {
    const std::size_t d = lu_.dim();
    for (std::size_t i = 0; i < d; ++i) perm_[i] = i;
    double scale = lu_.max_abs();
    if (scale == 0.0) scale = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        double best = std::abs(lu_(col, col));
        for (std::size_t r = col + 1; r < d; ++r) {
            double v = std::abs(lu_(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best <= 1e-300 * scale || best == 0.0)
            throw std::runtime_error("singular matrix in LU");
        if (piv != col) {
            for (std::size_t j = 0; j < d; ++j)
                std::swap(lu_(piv, j), lu_(col, j));
            std::swap(perm_[piv], perm_[col]);
        }
        const cdouble diag = lu_(col, col);
        for (std::size_t r = col + 1; r < d; ++r) {
            const cdouble f = lu_(r, col) / diag;
            lu_(r, col) = f;
            for (std::size_t j = col + 1; j < d; ++j)
                lu_(r, j) -= f * lu_(col, j);
        }
    }
}

std::vector<cdouble> LU::solve(const std::vector<cdouble>& rhs) const {
    const std::size_t d = lu_.dim();
    if (rhs.size() != d) throw std::invalid_argument("rhs dimension mismatch");
    std::vector<cdouble> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = rhs[perm_[i]];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (std::size_t ii = d; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < d; ++j) x[ii] -= lu_(ii, j) * x[j];
        x[ii] /= lu_(ii, ii);
    }
    return x;
}

CMat LU::solve(const CMat& rhs) const {
    const std::size_t d = lu_.dim();
    if (rhs.dim() != d) throw std::invalid_argument("rhs dimension mismatch");
    CMat out(d);
    std::vector<cdouble> col(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) col[i] = rhs(i, j);
        auto x = solve(col);
        for (std::size_t i = 0; i < d; ++i) out(i, j) = x[i];
    }
    return out;
}

CMat LU::inverse() const { return solve(CMat::identity(lu_.dim())); }

CMat inverse(const CMat& a) { return LU(a).inverse(); }

} // namespace homindex
