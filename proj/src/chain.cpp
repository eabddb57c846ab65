#include "homindex/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homindex {

void Chain::add_term(const Tensor& t, const GaussQ& c) {
    if (t.size() != degree_ + 1)
        throw std::invalid_argument("tensor arity does not match chain degree");
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Chain Chain::from_polys(const std::vector<FreePoly>& legs, const GaussQ& scale) {
    if (legs.empty()) throw std::invalid_argument("tensor needs at least one leg");
    Chain out((unsigned)legs.size() - 1);
    std::vector<FreePoly::TermMap::const_iterator> its;
    for (const auto& p : legs) {
        if (p.is_zero()) return out;
        its.push_back(p.terms().begin());
    }
    // odometer over the term maps
    while (true) {
        Tensor t;
        GaussQ c = scale;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            t.push_back(its[i]->first);
            c *= its[i]->second;
        }
        out.add_term(t, c);
        std::size_t pos = legs.size();
        while (pos > 0) {
            --pos;
            ++its[pos];
            if (its[pos] != legs[pos].terms().end()) break;
            its[pos] = legs[pos].terms().begin();
            if (pos == 0) return out;
        }
    }
}

Chain operator+(const Chain& a, const Chain& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("chain degree mismatch");
    Chain r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, c);
    return r;
}

Chain operator-(const Chain& a, const Chain& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("chain degree mismatch");
    Chain r = a;
    for (const auto& [t, c] : b.terms_) r.add_term(t, -c);
    return r;
}

Chain Chain::operator-() const {
    Chain r(degree_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

Chain operator*(const GaussQ& s, const Chain& c) {
    Chain r(c.degree_);
    if (s.is_zero()) return r;
    for (const auto& [t, co] : c.terms_) r.terms_.emplace(t, s * co);
    return r;
}

std::string Chain::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"coeff\":\"" << c.str() << "\",\"legs\":[";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) os << ",";
            os << "\"" << FreePoly(t[i]).str() << "\"";
        }
        os << "]}";
    }
    os << "]";
    return os.str();
}

Chain hochschild_b(const Chain& c) {
    const unsigned k = c.degree();
    if (k == 0) return Chain(0);
    Chain out(k - 1);
    for (const auto& [t, coeff] : c.terms()) {
        for (unsigned i = 0; i + 1 <= k; ++i) {
            Chain::Tensor face;
            face.reserve(k);
            for (unsigned j = 0; j < i; ++j) face.push_back(t[j]);
            face.push_back(t[i] * t[i + 1]);
            for (unsigned j = i + 2; j <= k; ++j) face.push_back(t[j]);
            out.add_term(face, (i % 2 == 0) ? coeff : -coeff);
        }
        Chain::Tensor wrap;
        wrap.reserve(k);
        wrap.push_back(t[k] * t[0]);
        for (unsigned j = 1; j < k; ++j) wrap.push_back(t[j]);
        out.add_term(wrap, (k % 2 == 0) ? coeff : -coeff);
    }
    return out;
}

Chain cyclic_t(const Chain& c) {
    const unsigned k = c.degree();
    Chain out(k);
    for (const auto& [t, coeff] : c.terms()) {
        Chain::Tensor rot;
        rot.reserve(k + 1);
        rot.push_back(t[k]);
        for (unsigned j = 0; j < k; ++j) rot.push_back(t[j]);
        out.add_term(rot, (k % 2 == 0) ? coeff : -coeff);
    }
    return out;
}

Chain cyclic_norm_N(const Chain& c) {
    Chain acc = c;
    Chain cur = c;
    for (unsigned i = 1; i <= c.degree(); ++i) {
        cur = cyclic_t(cur);
        acc = acc + cur;
    }
    return acc;
}

Chain degeneracy_s(const Chain& c) {
    Chain out(c.degree() + 1);
    for (const auto& [t, coeff] : c.terms()) {
        Chain::Tensor ext;
        ext.reserve(t.size() + 1);
        ext.push_back(Word::unit());
        for (const auto& w : t) ext.push_back(w);
        out.add_term(ext, coeff);
    }
    return out;
}

Chain connes_B(const Chain& c) {
    Chain sn = degeneracy_s(cyclic_norm_N(c));
    return sn - cyclic_t(sn);
}

bool is_cyclically_trivial(const Chain& c) {
    return cyclic_norm_N(c).is_zero();
}

namespace {

// one unsigned rotation of a tensor
Chain::Tensor rotate_tensor(const Chain::Tensor& t) {
    Chain::Tensor r;
    r.reserve(t.size());
    r.push_back(t.back());
    for (std::size_t j = 0; j + 1 < t.size(); ++j) r.push_back(t[j]);
    return r;
}

// Gaussian elimination over exact Gaussian rationals; returns false when
// the system has no solution.
bool solve_exact(std::vector<std::vector<GaussQ>> m, std::vector<GaussQ> rhs,
                 std::vector<GaussQ>& sol) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col(rows, cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        std::swap(rhs[piv], rhs[rank]);
        const GaussQ inv = GaussQ(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        rhs[rank] = rhs[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const GaussQ f = m[r][col];
            for (std::size_t j = col; j < cols; ++j)
                m[r][j] = m[r][j] - f * m[rank][j];
            rhs[r] = rhs[r] - f * rhs[rank];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!rhs[r].is_zero()) return false;
    sol.assign(cols, GaussQ(0));
    for (std::size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = rhs[r];
    return true;
}

} // namespace

bool solve_one_minus_t(const Chain& c, Chain& z) {
    const unsigned k = c.degree();
    z = Chain(k);
    const GaussQ sign = (k % 2 == 0) ? GaussQ(1) : GaussQ(-1);

    // group the involved tensors into rotation orbits
    std::map<Chain::Tensor, GaussQ> remaining(c.terms().begin(), c.terms().end());
    while (!remaining.empty()) {
        Chain::Tensor rep = remaining.begin()->first;
        std::vector<Chain::Tensor> orbit{rep};
        Chain::Tensor cur = rotate_tensor(rep);
        while (!(cur == rep)) {
            orbit.push_back(cur);
            cur = rotate_tensor(cur);
        }
        const std::size_t p = orbit.size();
        // rhs over the orbit basis
        std::vector<GaussQ> rhs(p, GaussQ(0));
        for (std::size_t j = 0; j < p; ++j) {
            auto it = remaining.find(orbit[j]);
            if (it != remaining.end()) {
                rhs[j] = it->second;
                remaining.erase(it);
            }
        }
        // (1 - t) on the orbit: t e_j = sign * e_{(j+1) mod p}
        std::vector<std::vector<GaussQ>> m(p, std::vector<GaussQ>(p, GaussQ(0)));
        for (std::size_t j = 0; j < p; ++j) {
            m[j][j] += GaussQ(1);
            m[(j + 1) % p][j] += -sign;
        }
        std::vector<GaussQ> sol;
        if (!solve_exact(std::move(m), std::move(rhs), sol)) return false;
        for (std::size_t j = 0; j < p; ++j)
            if (!sol[j].is_zero()) z.add_term(orbit[j], sol[j]);
    }
    return true;
}

namespace {
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

Chain random_chain(unsigned degree, std::size_t n_terms, std::size_t max_len,
                   std::uint64_t seed) {
    std::uint64_t s = seed ^ 0xd1b54a32d192ed03ULL;
    Chain out(degree);
    for (std::size_t n = 0; n < n_terms; ++n) {
        Chain::Tensor t;
        for (unsigned leg = 0; leg <= degree; ++leg) {
            std::size_t len = splitmix64(s) % (max_len + 1);
            std::string letters;
            for (std::size_t i = 0; i < len; ++i)
                letters.push_back((splitmix64(s) & 1) ? 'y' : 'x');
            t.push_back(Word(letters));
        }
        std::int64_t coeff = (std::int64_t)(splitmix64(s) % 6) - 3;
        if (coeff >= 0) ++coeff; // skip zero
        out.add_term(t, GaussQ(coeff));
    }
    return out;
}

TotChain::TotChain(std::vector<Chain> components) : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("totalized chain needs at least one component");
    const unsigned top = components_.front().degree();
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].degree() != top - 2 * i)
            throw std::invalid_argument("totalized components must step down by 2");
    }
    if (top - 2 * (components_.size() - 1) > 1)
        throw std::invalid_argument("totalized components must reach degree 0 or 1");
}

const Chain& TotChain::component(unsigned degree) const {
    const unsigned top = top_degree();
    if (degree > top || (top - degree) % 2 != 0)
        throw std::out_of_range("no component in that degree");
    return components_[(top - degree) / 2];
}

bool TotChain::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

TotChain periodicity_S(const TotChain& c) {
    if (c.top_degree() < 2)
        throw std::invalid_argument("periodicity operator needs top degree >= 2");
    std::vector<Chain> rest(c.components().begin() + 1, c.components().end());
    return TotChain(std::move(rest));
}

TotChain tot_boundary(const TotChain& c) {
    const unsigned top = c.top_degree();
    if (top == 0) {
        // the column below degree 0 is zero
        return TotChain({Chain(0)});
    }
    auto input = [&](int degree) -> Chain {
        if (degree < 0 || degree > (int)top || ((int)top - degree) % 2 != 0)
            return Chain(degree < 0 ? 0 : (unsigned)degree);
        return c.component((unsigned)degree);
    };
    std::vector<Chain> out;
    for (int d = (int)top - 1; d >= 0; d -= 2) {
        Chain comp = hochschild_b(input(d + 1));
        if (d >= 1) comp = comp + connes_B(input(d - 1));
        out.push_back(std::move(comp));
        if (d <= 1) break;
    }
    return TotChain(std::move(out));
}

} // namespace homindex
