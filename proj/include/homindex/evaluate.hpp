#ifndef HOMINDEX_EVALUATE_HPP
#define HOMINDEX_EVALUATE_HPP

#include "homindex/freepoly.hpp"
#include "homindex/matrix.hpp"

namespace homindex {

/// Images of the generators under a unital algebra homomorphism into
/// square matrices of equal dimension.
struct Evaluation {
    CMat image_x;
    CMat image_y;

    Evaluation(CMat ix, CMat iy) : image_x(std::move(ix)), image_y(std::move(iy)) {
        if (image_x.dim() != image_y.dim())
            throw std::invalid_argument("generator images must share a dimension");
    }
};

/// pi(T): x -> T, y -> T*.
inline Evaluation evaluation_from_operator(const CMat& t) {
    return Evaluation(t, t.adjoint());
}

CMat evaluate(const FreePoly& p, const Evaluation& ev);

} // namespace homindex

#endif
