#ifndef HOMINDEX_RATIONAL_HPP
#define HOMINDEX_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homindex {

/// Exact rational with 64-bit numerator/denominator, kept reduced with
/// positive denominator. Overflow throws instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        if (d == 0) throw std::domain_error("rational with zero denominator");
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() {
        *this = from128(num_, den_);
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// Gaussian rational a + b*i with exact rational parts.
class GaussQ {
public:
    GaussQ() = default;
    GaussQ(std::int64_t n) : re_(n) {}
    GaussQ(Rational re) : re_(re) {}
    GaussQ(Rational re, Rational im) : re_(re), im_(im) {}

    static GaussQ i() { return GaussQ(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
        Rational n2 = b.re_ * b.re_ + b.im_ * b.im_;
        if (n2.is_zero()) throw std::domain_error("gaussian rational division by zero");
        return GaussQ((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                      (a.im_ * b.re_ - a.re_ * b.im_) / n2);
    }
    GaussQ operator-() const { return GaussQ(-re_, -im_); }
    GaussQ& operator+=(const GaussQ& o) { *this = *this + o; return *this; }
    GaussQ& operator*=(const GaussQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussQ& a, const GaussQ& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    /// "3", "-1/2", "i", "(1/2+3i)" depending on shape.
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        if (re_.is_zero()) return im_.str() + "i";
        std::string s = "(" + re_.str();
        if (!(im_ < Rational(0))) s += "+";
        s += im_.str() + "i)";
        return s;
    }

private:
    Rational re_;
    Rational im_;
};

} // namespace homindex

#endif
