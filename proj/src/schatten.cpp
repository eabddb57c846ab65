#include "homindex/schatten.hpp"

#include <cmath>
#include <stdexcept>

namespace homindex {

SchattenReport schatten_norm(const CMat& a, double p) {
    if (p < 1.0) throw std::invalid_argument("schatten exponent must be >= 1");
    SchattenReport r;
    r.p = p;
    r.singular_values = sv_dispatch(a);
    if (r.singular_values.empty()) return r;
    // scale out the largest value to avoid overflow in sigma^p
    const double top = r.singular_values.front();
    if (top == 0.0) return r;
    double acc = 0.0;
    for (double s : r.singular_values) acc += std::pow(s / top, p);
    r.value = top * std::pow(acc, 1.0 / p);
    return r;
}

double trace_norm(const CMat& a) {
    double acc = 0.0;
    for (double s : sv_dispatch(a)) acc += s;
    return acc;
}

double operator_norm(const CMat& a) {
    auto sv = sv_dispatch(a);
    return sv.empty() ? 0.0 : sv.front();
}

} // namespace homindex
