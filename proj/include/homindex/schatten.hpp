#ifndef HOMINDEX_SCHATTEN_HPP
#define HOMINDEX_SCHATTEN_HPP

#include <vector>

#include "homindex/eig.hpp"
#include "homindex/matrix.hpp"

namespace homindex {

struct SchattenReport {
    double p = 1.0;
    double value = 0.0;
    std::vector<double> singular_values; // descending
};

/// (sum sigma_i^p)^(1/p) from the singular values. Requires p >= 1.
SchattenReport schatten_norm(const CMat& a, double p);

/// Trace norm = Schatten-1.
double trace_norm(const CMat& a);

/// Largest singular value.
double operator_norm(const CMat& a);

} // namespace homindex

#endif
