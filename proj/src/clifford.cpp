#include "homindex/clifford.hpp"

#include <stdexcept>

namespace homindex {

double CliffordRep::relation_defect() const {
    double worst = 0.0;
    const std::size_t d = rep_dim();
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t k = j; k < gens.size(); ++k) {
            CMat anti = gens[j] * gens[k] + gens[k] * gens[j];
            if (j == k) anti -= cdouble(2.0, 0.0) * CMat::identity(d);
            worst = std::max(worst, anti.max_abs());
        }
    for (const auto& g : gens) {
        CMat herm = g - g.adjoint();
        worst = std::max(worst, herm.max_abs());
    }
    return worst;
}

CliffordRep clifford_build(unsigned n) {
    if (n == 0) throw std::invalid_argument("clifford_build requires n >= 1");
    if (n > 4) throw std::invalid_argument("clifford_build guarded at n <= 4");

    CliffordRep rep;
    rep.half_dim = 1;
    CMat one(1);
    one(0, 0) = 1.0;
    rep.gens = {one};

    CMat sx(2), sy(2), sz(2);
    sx(0, 1) = 1.0; sx(1, 0) = 1.0;
    sy(0, 1) = {0.0, -1.0}; sy(1, 0) = {0.0, 1.0};
    sz(0, 0) = 1.0; sz(1, 1) = -1.0;

    while (rep.half_dim < n) {
        const std::size_t d = rep.rep_dim();
        std::vector<CMat> next;
        next.reserve(rep.gens.size() + 2);
        for (const auto& g : rep.gens) next.push_back(kron(sx, g));
        next.push_back(kron(sy, CMat::identity(d)));
        next.push_back(kron(sz, CMat::identity(d)));
        rep.gens = std::move(next);
        ++rep.half_dim;
    }
    return rep;
}

} // namespace homindex
