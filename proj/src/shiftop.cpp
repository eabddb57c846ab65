#include "homindex/shiftop.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace homindex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double pow_int(double x, unsigned n) {
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

inline double defect(const ShiftOp& op, std::uint64_t k, unsigned n) {
    const double w = op.weight(k);
    const double s = 1.0 - w * w;
    if (s < -1e-12) throw std::domain_error("weight rule exceeds modulus one");
    return pow_int(std::max(s, 0.0), n);
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

} // namespace

ShiftIndexResult homological_index_shift(const ShiftOp& op, unsigned n, double tol) {
    if (n == 0) throw std::invalid_argument("degree must be >= 1");
    if (tol <= 0.0) throw std::invalid_argument("tol must be positive");
    if (!(op.remainder_bound(n, 1u << 20) < kInf))
        throw std::domain_error("index series not summable in degree " + std::to_string(n));

    KahanSum acc;
    double prev = 1.0; // a_{-1} = (1 - w_{-1}^2)^n with w_{-1} = 0
    const std::uint64_t k_max = 2'000'000'000ULL;
    for (std::uint64_t k = 0; k < k_max; ++k) {
        const double cur = defect(op, k, n);
        acc.add(cur - prev);
        prev = cur;
        const double rem = op.remainder_bound(n, k);
        if (rem < tol) {
            ShiftIndexResult res;
            res.value = acc.sum;
            res.bound = rem + 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(acc.sum));
            res.terms = k + 1;
            return res;
        }
    }
    throw std::domain_error("remainder bound did not reach the tolerance");
}

CommutatorSchattenResult commutator_schatten_check(const ShiftOp& op, unsigned n,
                                                   std::uint64_t cutoff) {
    if (n == 0) throw std::invalid_argument("degree must be >= 1");
    CommutatorSchattenResult res;
    res.cutoff = cutoff;
    KahanSum acc;
    double prev_sq = 0.0; // w_{-1}^2
    for (std::uint64_t k = 0; k < cutoff; ++k) {
        const double w = op.weight(k);
        const double d = w * w - prev_sq;
        prev_sq = w * w;
        acc.add(pow_int(std::abs(d), n));
    }
    res.value = std::pow(acc.sum, 1.0 / double(n));
    res.tail = op.commutator_tail ? op.commutator_tail(n, cutoff) : kInf;
    return res;
}

double shift_diagonal(const ShiftOp& op, const FreePoly& p, std::uint64_t k) {
    double acc = 0.0;
    for (const auto& [word, coeff] : p.terms()) {
        // walk the letters right to left on the basis vector e_k
        double amp = 1.0;
        std::uint64_t m = k;
        bool dead = false;
        const std::string& ls = word.letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            if (*it == 'x') {
                amp *= op.weight(m);
                ++m;
            } else {
                if (m == 0) { dead = true; break; }
                amp *= op.weight(m - 1);
                --m;
            }
        }
        if (dead || m != k) continue;
        acc += coeff.to_complex().real() * amp;
    }
    return acc;
}

ShiftPairingReport pairing_check_shift(const ShiftOp& op, unsigned n, double tol) {
    ShiftPairingReport rep;
    rep.index = homological_index_shift(op, n, tol);
    const FreePoly cycle0 = elem_w().pow(n) - elem_v().pow(n);
    KahanSum acc;
    for (std::uint64_t k = 0; k < rep.index.terms; ++k)
        acc.add(shift_diagonal(op, cycle0, k));
    rep.pairing_value = acc.sum;
    rep.pairing_bound = rep.index.bound;
    rep.residual = std::abs(rep.pairing_value - rep.index.value);
    return rep;
}

namespace {

ShiftOp inverse_poly_rule() {
    ShiftOp op;
    op.name = "inverse-poly";
    op.weight = [](std::uint64_t k) { return std::sqrt(1.0 - 1.0 / double(k + 2)); };
    // a_k = (k+2)^-n decreases to 0, so the remainder telescopes to a_K
    op.remainder_bound = [](unsigned n, std::uint64_t K) {
        return pow_int(1.0 / double(K + 2), n);
    };
    // |d_k| = 1/((k+1)(k+2)) <= (k+1)^-2; integral tail of (k+1)^-2n
    op.commutator_tail = [](unsigned n, std::uint64_t K) {
        if (K == 0) K = 1;
        return pow_int(1.0 / double(K), 2 * n - 1) / double(2 * n - 1);
    };
    return op;
}

ShiftOp one_rule() {
    ShiftOp op;
    op.name = "one";
    op.weight = [](std::uint64_t) { return 1.0; };
    op.remainder_bound = [](unsigned, std::uint64_t) { return 0.0; };
    op.commutator_tail = [](unsigned, std::uint64_t K) { return K >= 1 ? 0.0 : 1.0; };
    return op;
}

ShiftOp zero_rule() {
    ShiftOp op;
    op.name = "zero";
    op.weight = [](std::uint64_t) { return 0.0; };
    // a_k = 1 for every k, so the difference series is identically zero
    op.remainder_bound = [](unsigned, std::uint64_t) { return 0.0; };
    op.commutator_tail = [](unsigned, std::uint64_t) { return 0.0; };
    return op;
}

ShiftOp geometric_rule() {
    ShiftOp op;
    op.name = "geometric";
    op.weight = [](std::uint64_t k) { return std::sqrt(1.0 - std::pow(0.5, double(k + 1))); };
    op.remainder_bound = [](unsigned n, std::uint64_t K) {
        return pow_int(std::pow(0.5, double(K + 1)), n);
    };
    op.commutator_tail = [](unsigned n, std::uint64_t K) {
        // |d_k| <= 2^-(k+1); geometric tail of the n-th powers
        const double r = std::pow(0.5, double(n));
        return pow_int(std::pow(0.5, double(K + 1)), n) * r / (1.0 - r);
    };
    return op;
}

// 1 - w_k^2 = (2 + (-1)^k) / (2 (k + 2)): the difference series oscillates at
// harmonic size, so degree 1 is not summable while higher degrees are.
ShiftOp alternating_slow_rule() {
    ShiftOp op;
    op.name = "alternating-slow";
    op.weight = [](std::uint64_t k) {
        const double s = (2.0 + ((k % 2 == 0) ? 1.0 : -1.0)) / (2.0 * double(k + 2));
        return std::sqrt(1.0 - s);
    };
    op.remainder_bound = [](unsigned n, std::uint64_t K) {
        if (n < 2) return kInf;
        if (K == 0) K = 1;
        // |a_k - a_{k-1}| <= a_k + a_{k-1} <= 2 (3/(2(k+1)))^n
        const double c = pow_int(1.5, n) * 2.0;
        return c * pow_int(1.0 / double(K), n - 1) / double(n - 1);
    };
    op.commutator_tail = [](unsigned n, std::uint64_t K) {
        if (n < 2) return kInf;
        if (K == 0) K = 1;
        const double c = pow_int(3.0, n);
        return c * pow_int(1.0 / double(K), n - 1) / double(n - 1);
    };
    return op;
}

} // namespace

ShiftOp make_shift_rule(const std::string& name) {
    if (name == "inverse-poly") return inverse_poly_rule();
    if (name == "one") return one_rule();
    if (name == "zero") return zero_rule();
    if (name == "geometric") return geometric_rule();
    if (name == "alternating-slow") return alternating_slow_rule();
    throw std::invalid_argument("unknown shift rule: " + name);
}

std::vector<std::string> shift_rule_names() {
    return {"inverse-poly", "one", "zero", "geometric", "alternating-slow"};
}

std::function<ShiftOp(double)> make_shift_family(const std::string& name) {
    if (name == "inverse-poly-smooth") {
        // 1 - w_k(t)^2 = (1+t) / ((2+t)(k+2)); every slice telescopes to -1
        return [](double t) {
            ShiftOp op;
            op.name = "inverse-poly-smooth";
            const double c = (1.0 + t) / (2.0 + t);
            op.weight = [c](std::uint64_t k) {
                return std::sqrt(1.0 - c / double(k + 2));
            };
            op.remainder_bound = [c](unsigned n, std::uint64_t K) {
                return pow_int(c / double(K + 2), n);
            };
            op.commutator_tail = [](unsigned n, std::uint64_t K) {
                if (K == 0) K = 1;
                return pow_int(1.0 / double(K), 2 * n - 1) / double(2 * n - 1);
            };
            return op;
        };
    }
    if (name == "frozen") {
        return [](double) { return inverse_poly_rule(); };
    }
    if (name == "alternating-slow-family") {
        // rides from the summable rule into the oscillating one; slices with
        // t > 1/2 are inadmissible in degree 1
        return [](double t) {
            if (t > 0.5) return alternating_slow_rule();
            return inverse_poly_rule();
        };
    }
    throw std::invalid_argument("unknown shift family: " + name);
}

std::vector<std::string> shift_family_names() {
    return {"inverse-poly-smooth", "frozen", "alternating-slow-family"};
}

} // namespace homindex
