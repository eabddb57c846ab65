#ifndef HOMINDEX_FREEPOLY_HPP
#define HOMINDEX_FREEPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "homindex/rational.hpp"

namespace homindex {

/// A word over the alphabet {x, y}; the empty word is the algebra unit.
/// Ordering is degree-then-lexicographic so canonical forms compare bytewise.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {
        for (char c : letters_)
            if (c != 'x' && c != 'y')
                throw std::invalid_argument("word letters must be 'x' or 'y'");
    }

    static Word unit() { return Word(); }
    static Word x() { return Word("x"); }
    static Word y() { return Word("y"); }

    std::size_t length() const { return letters_.size(); }
    bool is_unit() const { return letters_.empty(); }
    const std::string& letters() const { return letters_; }

    friend Word operator*(const Word& a, const Word& b) {
        Word w;
        w.letters_ = a.letters_ + b.letters_;
        return w;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    std::string letters_;
};

/// Element of the free unital algebra on x, y with Gaussian-rational
/// coefficients. The term map is the canonical form: no zero coefficients,
/// words in degree-then-lex order.
class FreePoly {
public:
    using TermMap = std::map<Word, GaussQ>;

    FreePoly() = default;
    FreePoly(std::int64_t c) { if (c != 0) terms_[Word::unit()] = GaussQ(c); }
    FreePoly(const GaussQ& c) { if (!c.is_zero()) terms_[Word::unit()] = c; }
    explicit FreePoly(const Word& w) { terms_[w] = GaussQ(1); }
    FreePoly(const Word& w, const GaussQ& c) { if (!c.is_zero()) terms_[w] = c; }

    static FreePoly one() { return FreePoly(std::int64_t(1)); }
    static FreePoly x() { return FreePoly(Word::x()); }
    static FreePoly y() { return FreePoly(Word::y()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest word length present.
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.length());
        return d;
    }

    void add_term(const Word& w, const GaussQ& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FreePoly operator+(const FreePoly& a, const FreePoly& b) {
        FreePoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend FreePoly operator-(const FreePoly& a, const FreePoly& b) {
        FreePoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
        FreePoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                r.add_term(wa * wb, ca * cb);
        return r;
    }
    FreePoly operator-() const {
        FreePoly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    FreePoly& operator+=(const FreePoly& o) { *this = *this + o; return *this; }
    FreePoly& operator-=(const FreePoly& o) { *this = *this - o; return *this; }
    FreePoly& operator*=(const FreePoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const FreePoly& a, const FreePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FreePoly& a, const FreePoly& b) { return !(a == b); }
    friend bool operator<(const FreePoly& a, const FreePoly& b);

    FreePoly pow(unsigned n) const {
        FreePoly r = one();
        for (unsigned k = 0; k < n; ++k) r = r * (*this);
        return r;
    }

    /// Textual form, e.g. "1 - 1*x*y". Deterministic over the canonical order.
    std::string str() const;

    /// Parses the subset of the textual form produced by str().
    static FreePoly parse(const std::string& s);

private:
    TermMap terms_;
};

inline bool operator<(const FreePoly& a, const FreePoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first < ib->first) return true;
        if (ib->first < ia->first) return false;
        const GaussQ &ca = ia->second, &cb = ib->second;
        if (ca.re() < cb.re()) return true;
        if (cb.re() < ca.re()) return false;
        if (ca.im() < cb.im()) return true;
        if (cb.im() < ca.im()) return false;
    }
    return ib != b.terms_.end();
}

/// v = 1 - x*y
FreePoly elem_v();
/// w = 1 - y*x
FreePoly elem_w();
/// omega(n) = x + v*x + ... + v^{n-1}*x; rejects n = 0.
FreePoly omega(unsigned n);

} // namespace homindex

#endif
