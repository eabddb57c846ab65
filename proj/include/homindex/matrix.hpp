#ifndef HOMINDEX_MATRIX_HPP
#define HOMINDEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace homindex {

using cdouble = std::complex<double>;

/// Square complex matrix, row-major, value semantics.
class CMat {
public:
    CMat() : d_(0) {}
    explicit CMat(std::size_t d) : d_(d), a_(d * d, cdouble(0.0, 0.0)) {}

    static CMat identity(std::size_t d) {
        CMat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return d_; }
    cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    cdouble* data() { return a_.data(); }
    const cdouble* data() const { return a_.data(); }

    CMat adjoint() const {
        CMat r(d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cdouble trace() const {
        cdouble t = 0.0;
        for (std::size_t i = 0; i < d_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    friend CMat operator+(const CMat& a, const CMat& b) {
        check_same(a, b);
        CMat r(a.d_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend CMat operator-(const CMat& a, const CMat& b) {
        check_same(a, b);
        CMat r(a.d_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend CMat operator*(const cdouble& s, const CMat& a) {
        CMat r(a.d_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
        return r;
    }
    friend CMat operator*(const CMat& a, const CMat& b);
    CMat& operator+=(const CMat& o) { *this = *this + o; return *this; }
    CMat& operator-=(const CMat& o) { *this = *this - o; return *this; }

private:
    static void check_same(const CMat& a, const CMat& b) {
        if (a.d_ != b.d_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t d_;
    std::vector<cdouble> a_;
};

namespace kernels {

/// Reference product, one sequential dot per output entry.
void mul_serial(const CMat& a, const CMat& b, CMat& out);

/// OpenMP product, parallel over output rows. Each entry is computed by the
/// same sequential dot as the reference, so results are bit-identical.
void mul_parallel(const CMat& a, const CMat& b, CMat& out);

/// Dispatch by size; both paths produce identical bits.
CMat mul(const CMat& a, const CMat& b);

/// Dimension at or above which mul() takes the parallel path.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t d);

} // namespace kernels

inline CMat operator*(const CMat& a, const CMat& b) { return kernels::mul(a, b); }

/// Kronecker product (dim a.dim*b.dim); used to flatten tensor chains.
CMat kron(const CMat& a, const CMat& b);

/// A^k by repeated multiplication.
CMat mat_pow(const CMat& a, unsigned k);

/// In-place LU with partial pivoting. Throws std::runtime_error when singular.
class LU {
public:
    explicit LU(CMat a);
    std::vector<cdouble> solve(const std::vector<cdouble>& rhs) const;
    CMat solve(const CMat& rhs) const;
    CMat inverse() const;

private:
    CMat lu_;
    std::vector<std::size_t> perm_;
};

/// (A)^-1 via LU.
CMat inverse(const CMat& a);

} // namespace homindex

#endif
