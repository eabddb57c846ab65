#include "homindex/evaluate.hpp"

namespace homindex {

CMat evaluate(const FreePoly& p, const Evaluation& ev) {
    const std::size_t d = ev.image_x.dim();
    CMat acc(d);
    for (const auto& [word, coeff] : p.terms()) {
        CMat prod = CMat::identity(d);
        for (char l : word.letters())
            prod = prod * (l == 'x' ? ev.image_x : ev.image_y);
        acc += coeff.to_complex() * prod;
    }
    return acc;
}

} // namespace homindex
