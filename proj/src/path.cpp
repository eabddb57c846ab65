#include "homindex/path.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "homindex/chain.hpp"

namespace homindex {

MatPoly::MatPoly(std::vector<CMat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs a coefficient");
    for (const auto& c : coeffs_)
        if (c.dim() != coeffs_.front().dim())
            throw std::invalid_argument("coefficient dimensions differ");
    while (coeffs_.size() > 1 && coeffs_.back().max_abs() == 0.0) coeffs_.pop_back();
}

CMat MatPoly::eval(double t) const {
    CMat acc(dim());
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        acc = (cdouble(t, 0.0) * acc) + coeffs_[k];
    return acc;
}

MatPoly MatPoly::derivative() const {
    if (coeffs_.size() <= 1) return MatPoly::zero(dim());
    std::vector<CMat> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out.push_back(cdouble(double(k), 0.0) * coeffs_[k]);
    return MatPoly(std::move(out));
}

MatPoly MatPoly::adjoint() const {
    std::vector<CMat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.adjoint());
    return MatPoly(std::move(out));
}

CMat MatPoly::integrate01() const {
    CMat acc(dim());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        acc += cdouble(1.0 / double(k + 1), 0.0) * coeffs_[k];
    return acc;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
    std::vector<CMat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), CMat(a.dim()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (k < a.coeffs_.size()) out[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) out[k] += b.coeffs_[k];
    }
    return MatPoly(std::move(out));
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) {
    return a + (cdouble(-1.0, 0.0) * b);
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    std::vector<CMat> out(a.coeffs_.size() + b.coeffs_.size() - 1, CMat(a.dim()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return MatPoly(std::move(out));
}

MatPoly operator*(const cdouble& s, const MatPoly& a) {
    std::vector<CMat> out;
    out.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) out.push_back(s * c);
    return MatPoly(std::move(out));
}

double MatPoly::max_coeff_distance(const MatPoly& other) const {
    MatPoly diff = *this - other;
    double m = 0.0;
    for (const auto& c : diff.coeffs_) m = std::max(m, c.max_abs());
    return m;
}

OperatorPath OperatorPath::polynomial(MatPoly p) {
    OperatorPath path;
    path.kind = Kind::polynomial;
    path.poly = std::move(p);
    return path;
}

OperatorPath OperatorPath::sampled(std::vector<double> grid, std::vector<CMat> samples) {
    if (grid.size() != samples.size())
        throw std::invalid_argument("grid and samples must have equal length");
    if (grid.size() < 5)
        throw std::invalid_argument("sampled path needs at least 5 points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw std::invalid_argument("sampled grid must strictly increase");
    if (std::abs(grid.front()) > 1e-12 || std::abs(grid.back() - 1.0) > 1e-12)
        throw std::invalid_argument("sampled grid must cover [0,1]");
    OperatorPath path;
    path.kind = Kind::sampled;
    path.grid = std::move(grid);
    path.samples = std::move(samples);
    return path;
}

std::size_t OperatorPath::dim() const {
    return kind == Kind::polynomial ? poly.dim() : samples.front().dim();
}

CMat OperatorPath::eval(double t) const {
    if (kind == Kind::polynomial) return poly.eval(t);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::abs(grid[i] - t) < 1e-12) return samples[i];
    throw std::invalid_argument("sampled path evaluated off its grid");
}

namespace {

template <typename ChainT>
ChainT generic_b(const ChainT& c) {
    const unsigned k = c.degree;
    ChainT out;
    out.degree = (k == 0) ? 0 : k - 1;
    if (k == 0) return out;
    for (const auto& term : c.terms) {
        for (unsigned i = 0; i + 1 <= k; ++i) {
            typename ChainT::Term face;
            face.coeff = (i % 2 == 0) ? term.coeff : -term.coeff;
            for (unsigned j = 0; j < i; ++j) face.legs.push_back(term.legs[j]);
            face.legs.push_back(term.legs[i] * term.legs[i + 1]);
            for (unsigned j = i + 2; j <= k; ++j) face.legs.push_back(term.legs[j]);
            out.terms.push_back(std::move(face));
        }
        typename ChainT::Term wrap;
        wrap.coeff = (k % 2 == 0) ? term.coeff : -term.coeff;
        wrap.legs.push_back(term.legs[k] * term.legs[0]);
        for (unsigned j = 1; j < k; ++j) wrap.legs.push_back(term.legs[j]);
        out.terms.push_back(std::move(wrap));
    }
    return out;
}

} // namespace

PathChain path_b(const PathChain& c) { return generic_b(c); }
MatChain mat_b(const MatChain& c) { return generic_b(c); }

PathChain path_t(const PathChain& c) {
    const unsigned k = c.degree;
    PathChain out;
    out.degree = k;
    for (const auto& term : c.terms) {
        PathChain::Term rot;
        rot.coeff = (k % 2 == 0) ? term.coeff : -term.coeff;
        rot.legs.push_back(term.legs[k]);
        for (unsigned j = 0; j < k; ++j) rot.legs.push_back(term.legs[j]);
        out.terms.push_back(std::move(rot));
    }
    return out;
}

PathChain path_B(const PathChain& c) {
    const std::size_t d = c.terms.empty() ? 0 : c.terms.front().legs.front().dim();
    PathChain norm;
    norm.degree = c.degree;
    PathChain cur = c;
    for (unsigned i = 0; i <= c.degree; ++i) {
        for (const auto& t : cur.terms) norm.terms.push_back(t);
        cur = path_t(cur);
    }
    PathChain sn;
    sn.degree = c.degree + 1;
    for (const auto& term : norm.terms) {
        PathChain::Term ext;
        ext.coeff = term.coeff;
        ext.legs.push_back(MatPoly::identity(d));
        for (const auto& l : term.legs) ext.legs.push_back(l);
        sn.terms.push_back(std::move(ext));
    }
    PathChain tsn = path_t(sn);
    PathChain out = sn;
    for (auto term : tsn.terms) {
        term.coeff = -term.coeff;
        out.terms.push_back(std::move(term));
    }
    return out;
}

PathChain jay_integrand(const PathChain& c) {
    if (c.degree == 0)
        throw std::invalid_argument("the transgression map needs degree >= 1");
    PathChain out;
    out.degree = c.degree - 1;
    for (const auto& term : c.terms) {
        PathChain::Term mapped;
        mapped.coeff = term.coeff;
        mapped.legs.push_back(term.legs[0] * term.legs[1].derivative());
        for (std::size_t j = 2; j < term.legs.size(); ++j)
            mapped.legs.push_back(term.legs[j]);
        out.terms.push_back(std::move(mapped));
    }
    return out;
}

MatChain integrate_path_chain(const PathChain& integrand) {
    MatChain out;
    out.degree = integrand.degree;
    for (const auto& term : integrand.terms) {
        // multilinear expansion over the coefficient degrees, then the
        // exact moment of t^total over [0,1]
        const std::size_t arity = term.legs.size();
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
            MatChain::Term piece;
            std::size_t total = 0;
            piece.legs.reserve(arity);
            for (std::size_t i = 0; i < arity; ++i) {
                piece.legs.push_back(term.legs[i].coeffs()[idx[i]]);
                total += idx[i];
            }
            piece.coeff = term.coeff * cdouble(1.0 / double(total + 1), 0.0);
            out.terms.push_back(std::move(piece));
            std::size_t pos = arity;
            bool done = false;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < term.legs[pos].coeffs().size()) break;
                idx[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    return out;
}

MatChain jay(const PathChain& c) {
    return integrate_path_chain(jay_integrand(c));
}

std::vector<double> simpson_weights_uniform(std::size_t count, double h) {
    if (count < 3 || count % 2 == 0)
        throw std::invalid_argument("composite quadrature needs an odd point count");
    std::vector<double> w(count, h / 3.0);
    for (std::size_t i = 1; i + 1 < count; ++i)
        w[i] *= (i % 2 == 1) ? 4.0 : 2.0;
    return w;
}

std::vector<CMat> grid_derivative_uniform(const std::vector<CMat>& f, double h) {
    const std::size_t n = f.size();
    std::vector<CMat> out;
    out.reserve(n);
    const cdouble half(0.5 / h, 0.0), inv(1.0 / h, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            out.push_back(inv * ((cdouble(-1.5, 0) * f[0]) + (cdouble(2.0, 0) * f[1]) +
                                 (cdouble(-0.5, 0) * f[2])));
        } else if (i + 1 == n) {
            out.push_back(inv * ((cdouble(1.5, 0) * f[n - 1]) + (cdouble(-2.0, 0) * f[n - 2]) +
                                 (cdouble(0.5, 0) * f[n - 3])));
        } else {
            out.push_back(half * (f[i + 1] - f[i - 1]));
        }
    }
    return out;
}

namespace {

MatChain jay_sampled_once(const SampledChain& c) {
    if (c.degree == 0)
        throw std::invalid_argument("the transgression map needs degree >= 1");
    const std::size_t count = c.grid.size();
    if (count < 5)
        throw std::invalid_argument("sampled transgression needs at least 5 points");
    const double h = c.grid[1] - c.grid[0];
    for (std::size_t i = 1; i < count; ++i)
        if (std::abs((c.grid[i] - c.grid[i - 1]) - h) > 1e-10)
            throw std::invalid_argument("sampled operations need a uniform grid");
    const auto weights = simpson_weights_uniform(count, h);

    MatChain out;
    out.degree = c.degree - 1;
    for (const auto& term : c.terms) {
        std::vector<CMat> dleg1 = grid_derivative_uniform(term.leg_samples[1], h);
        for (std::size_t i = 0; i < count; ++i) {
            MatChain::Term piece;
            piece.coeff = term.coeff * cdouble(weights[i], 0.0);
            piece.legs.push_back(term.leg_samples[0][i] * dleg1[i]);
            for (std::size_t leg = 2; leg <= c.degree; ++leg)
                piece.legs.push_back(term.leg_samples[leg][i]);
            out.terms.push_back(std::move(piece));
        }
    }
    return out;
}

} // namespace

JaySampledResult jay_sampled(const SampledChain& c) {
    JaySampledResult res{jay_sampled_once(c), 0.0};
    if (c.grid.size() >= 9 && (c.grid.size() - 1) % 4 == 0) {
        SampledChain half;
        half.degree = c.degree;
        for (std::size_t i = 0; i < c.grid.size(); i += 2) half.grid.push_back(c.grid[i]);
        for (const auto& term : c.terms) {
            SampledChain::Term t;
            t.coeff = term.coeff;
            t.leg_samples.resize(term.leg_samples.size());
            for (std::size_t leg = 0; leg < term.leg_samples.size(); ++leg)
                for (std::size_t i = 0; i < c.grid.size(); i += 2)
                    t.leg_samples[leg].push_back(term.leg_samples[leg][i]);
            half.terms.push_back(std::move(t));
        }
        MatChain coarse = jay_sampled_once(half);
        // compare the two quadratures through the flattening when it is small
        // enough, otherwise through the collapsed matrix sums
        MatChain diff = res.chain;
        for (auto term : coarse.terms) {
            term.coeff = -term.coeff;
            diff.terms.push_back(std::move(term));
        }
        std::size_t flat_dim = 1;
        bool small = true;
        const std::size_t d = diff.terms.front().legs.front().dim();
        for (unsigned i = 0; i <= diff.degree; ++i) {
            flat_dim *= d;
            if (flat_dim > 4096) { small = false; break; }
        }
        if (small) {
            res.error_estimate = flatten(diff).max_abs();
        } else {
            CMat acc(d);
            for (const auto& term : diff.terms) {
                CMat prod = CMat::identity(d);
                for (const auto& leg : term.legs) prod = prod * leg;
                acc += term.coeff * prod;
            }
            res.error_estimate = acc.max_abs();
        }
    } else {
        res.error_estimate = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

CMat mat_chain_value(const MatChain& c) {
    if (c.degree != 0)
        throw std::invalid_argument("only a degree-0 chain collapses to a matrix");
    if (c.terms.empty()) return CMat(0);
    CMat acc(c.terms.front().legs.front().dim());
    for (const auto& term : c.terms) acc += term.coeff * term.legs[0];
    return acc;
}

CMat flatten(const MatChain& c) {
    if (c.terms.empty()) return CMat(0);
    const std::size_t d = c.terms.front().legs.front().dim();
    std::size_t flat_dim = 1;
    for (unsigned i = 0; i <= c.degree; ++i) {
        flat_dim *= d;
        if (flat_dim > 4096)
            throw std::invalid_argument("flattening would exceed the size guard");
    }
    CMat acc(flat_dim);
    for (const auto& term : c.terms) {
        CMat piece = term.legs[0];
        for (std::size_t i = 1; i < term.legs.size(); ++i)
            piece = kron(piece, term.legs[i]);
        acc += term.coeff * piece;
    }
    return acc;
}

double path_chain_flat_norm(const PathChain& c) {
    if (c.terms.empty()) return 0.0;
    std::size_t max_total = 0;
    for (const auto& term : c.terms) {
        std::size_t total = 0;
        for (const auto& leg : term.legs) total += leg.degree();
        max_total = std::max(max_total, total);
    }
    double worst = 0.0;
    for (std::size_t target = 0; target <= max_total; ++target) {
        MatChain slice;
        slice.degree = c.degree;
        for (const auto& term : c.terms) {
            const std::size_t arity = term.legs.size();
            std::vector<std::size_t> idx(arity, 0);
            while (true) {
                std::size_t total = 0;
                for (std::size_t i = 0; i < arity; ++i) total += idx[i];
                if (total == target) {
                    MatChain::Term piece;
                    piece.coeff = term.coeff;
                    for (std::size_t i = 0; i < arity; ++i)
                        piece.legs.push_back(term.legs[i].coeffs()[idx[i]]);
                    slice.terms.push_back(std::move(piece));
                }
                std::size_t pos = arity;
                bool done = false;
                while (pos > 0) {
                    --pos;
                    if (++idx[pos] < term.legs[pos].coeffs().size()) break;
                    idx[pos] = 0;
                    if (pos == 0) done = true;
                }
                if (done) break;
            }
        }
        if (!slice.terms.empty()) worst = std::max(worst, flatten(slice).max_abs());
    }
    return worst;
}

MatPoly eval_poly_path(const FreePoly& p, const MatPoly& tx, const MatPoly& ty) {
    const std::size_t d = tx.dim();
    MatPoly acc = MatPoly::zero(d);
    for (const auto& [word, coeff] : p.terms()) {
        MatPoly prod = MatPoly::identity(d);
        for (char l : word.letters()) prod = prod * (l == 'x' ? tx : ty);
        acc = acc + (coeff.to_complex() * prod);
    }
    return acc;
}

PathChain chain_to_path(const Chain& c, const MatPoly& tx, const MatPoly& ty) {
    PathChain out;
    out.degree = c.degree();
    const std::size_t d = tx.dim();
    for (const auto& [tensor, coeff] : c.terms()) {
        PathChain::Term term;
        term.coeff = coeff.to_complex();
        for (const auto& word : tensor) {
            MatPoly leg = MatPoly::identity(d);
            for (char l : word.letters()) leg = leg * (l == 'x' ? tx : ty);
            term.legs.push_back(std::move(leg));
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

} // namespace homindex
