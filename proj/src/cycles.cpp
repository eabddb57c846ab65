#include "homindex/cycles.hpp"

#include <stdexcept>

namespace homindex {

Chain RelWitness::expand() const {
    Chain acc(degree);
    for (const auto& t : tensors)
        acc = acc + Chain::from_polys(t.legs, t.coeff);
    return acc;
}

bool RelWitness::validate() const {
    for (const auto& t : tensors) {
        if (t.legs.size() != degree + 1) return false;
        if (t.witness_leg >= t.legs.size()) return false;
        if (!t.reconstructs()) return false;
    }
    return true;
}

RelWitness witnessed_b(const RelWitness& c) {
    if (c.degree == 0) return RelWitness{0, {}};
    const unsigned k = c.degree;
    RelWitness out{k - 1, {}};
    for (const auto& t : c.tensors) {
        for (unsigned i = 0; i + 1 <= k; ++i) {
            WitnessedTensor f;
            f.coeff = (i % 2 == 0) ? t.coeff : -t.coeff;
            for (unsigned j = 0; j < i; ++j) f.legs.push_back(t.legs[j]);
            f.legs.push_back(t.legs[i] * t.legs[i + 1]);
            for (unsigned j = i + 2; j <= k; ++j) f.legs.push_back(t.legs[j]);
            if (t.witness_leg == i) {
                f.witness_leg = i;
                f.left = t.left;
                f.gen = t.gen;
                f.right = t.right * t.legs[i + 1];
            } else if (t.witness_leg == i + 1) {
                f.witness_leg = i;
                f.left = t.legs[i] * t.left;
                f.gen = t.gen;
                f.right = t.right;
            } else {
                f.witness_leg = (t.witness_leg > i + 1) ? t.witness_leg - 1 : t.witness_leg;
                f.left = t.left;
                f.gen = t.gen;
                f.right = t.right;
            }
            out.tensors.push_back(std::move(f));
        }
        WitnessedTensor wrap;
        wrap.coeff = (k % 2 == 0) ? t.coeff : -t.coeff;
        wrap.legs.push_back(t.legs[k] * t.legs[0]);
        for (unsigned j = 1; j < k; ++j) wrap.legs.push_back(t.legs[j]);
        if (t.witness_leg == k) {
            wrap.witness_leg = 0;
            wrap.left = t.left;
            wrap.gen = t.gen;
            wrap.right = t.right * t.legs[0];
        } else if (t.witness_leg == 0) {
            wrap.witness_leg = 0;
            wrap.left = t.legs[k] * t.left;
            wrap.gen = t.gen;
            wrap.right = t.right;
        } else {
            wrap.witness_leg = t.witness_leg;
            wrap.left = t.left;
            wrap.gen = t.gen;
            wrap.right = t.right;
        }
        out.tensors.push_back(std::move(wrap));
    }
    return out;
}

RelWitness witnessed_t(const RelWitness& c) {
    const unsigned k = c.degree;
    RelWitness out{k, {}};
    for (const auto& t : c.tensors) {
        WitnessedTensor r;
        r.coeff = (k % 2 == 0) ? t.coeff : -t.coeff;
        r.legs.push_back(t.legs[k]);
        for (unsigned j = 0; j < k; ++j) r.legs.push_back(t.legs[j]);
        r.witness_leg = (t.witness_leg == k) ? 0 : t.witness_leg + 1;
        r.left = t.left;
        r.gen = t.gen;
        r.right = t.right;
        out.tensors.push_back(std::move(r));
    }
    return out;
}

RelWitness witnessed_s(const RelWitness& c) {
    RelWitness out{c.degree + 1, {}};
    for (const auto& t : c.tensors) {
        WitnessedTensor r;
        r.coeff = t.coeff;
        r.legs.push_back(FreePoly::one());
        for (const auto& l : t.legs) r.legs.push_back(l);
        r.witness_leg = t.witness_leg + 1;
        r.left = t.left;
        r.gen = t.gen;
        r.right = t.right;
        out.tensors.push_back(std::move(r));
    }
    return out;
}

RelWitness witnessed_B(const RelWitness& c) {
    // N = 1 + t + ... + t^degree
    RelWitness acc{c.degree, {}};
    RelWitness cur = c;
    acc.tensors = c.tensors;
    for (unsigned i = 1; i <= c.degree; ++i) {
        cur = witnessed_t(cur);
        for (const auto& t : cur.tensors) acc.tensors.push_back(t);
    }
    RelWitness sn = witnessed_s(acc);
    RelWitness tsn = witnessed_t(sn);
    RelWitness out{sn.degree, sn.tensors};
    for (auto t : tsn.tensors) {
        t.coeff = -t.coeff;
        out.tensors.push_back(std::move(t));
    }
    return out;
}

namespace {

WitnessedTensor make_tensor(GaussQ coeff, std::vector<FreePoly> legs,
                            std::size_t witness_leg, FreePoly gen) {
    WitnessedTensor t;
    t.coeff = std::move(coeff);
    t.legs = std::move(legs);
    t.witness_leg = witness_leg;
    t.left = FreePoly::one();
    t.gen = std::move(gen);
    t.right = FreePoly::one();
    return t;
}

RelWitness gamma2_witness(unsigned n, bool flipped_third_sign) {
    const FreePoly vn = elem_v().pow(n);
    const FreePoly wn = elem_w().pow(n);
    const FreePoly om = omega(n);
    const FreePoly y = FreePoly::y();
    const FreePoly one = FreePoly::one();
    const FreePoly diff = wn - vn;

    RelWitness g2{2, {}};
    g2.tensors.push_back(make_tensor(GaussQ(-1), {wn, y, om}, 0, wn));
    g2.tensors.push_back(make_tensor(GaussQ(1), {vn, om, y}, 0, vn));
    g2.tensors.push_back(make_tensor(GaussQ(flipped_third_sign ? 1 : -1), {om, wn, y}, 1, wn));
    g2.tensors.push_back(make_tensor(GaussQ(1), {om, y, vn}, 2, vn));
    g2.tensors.push_back(make_tensor(GaussQ(-2), {diff, one, one}, 0, diff));
    return g2;
}

} // namespace

GammaCycle gamma_cycle(unsigned n) {
    if (n == 0) throw std::invalid_argument("gamma requires n >= 1");
    GammaCycle g{Chain(2), Chain(0), {}, {}};
    g.witness2 = gamma2_witness(n, false);
    g.gamma2 = g.witness2.expand();

    const FreePoly diff = elem_w().pow(n) - elem_v().pow(n);
    RelWitness g0{0, {}};
    g0.tensors.push_back(make_tensor(GaussQ(1), {diff}, 0, diff));
    g.witness0 = g0;
    g.gamma0 = g0.expand();
    return g;
}

Chain gamma2_flipped_sign(unsigned n) {
    if (n == 0) throw std::invalid_argument("gamma requires n >= 1");
    return gamma2_witness(n, true).expand();
}

CycleCheck cycle_check(const Chain& g2, const Chain& g0) {
    if (g2.degree() != 2 || g0.degree() != 0)
        throw std::invalid_argument("cycle_check expects degrees 2 and 0");
    Chain residual = hochschild_b(g2) + connes_B(g0);
    return CycleCheck{residual.is_zero(), residual};
}

} // namespace homindex
