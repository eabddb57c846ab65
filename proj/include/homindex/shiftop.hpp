#ifndef HOMINDEX_SHIFTOP_HPP
#define HOMINDEX_SHIFTOP_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "homindex/freepoly.hpp"

namespace homindex {

/// Weighted unilateral shift T e_k = w_k e_{k+1}, described by a closed-form
/// weight rule plus certified series metadata. With a_k = (1 - w_k^2)^n and
/// a_{-1} = 1, the index series is sum_k (a_k - a_{k-1}); remainder_bound(n, K)
/// must dominate sum_{k>K} |a_k - a_{k-1}| and vanish as K grows whenever the
/// series is summable in degree n (+infinity marks an inadmissible degree).
struct ShiftOp {
    std::string name;
    std::function<double(std::uint64_t)> weight;
    std::function<double(unsigned, std::uint64_t)> remainder_bound;
    /// bound on sum_{k>=K} |d_k|^n for the commutator diagonal d_k = w_k^2 - w_{k-1}^2
    std::function<double(unsigned, std::uint64_t)> commutator_tail;
};

struct ShiftIndexResult {
    double value = 0.0;
    double bound = 0.0;        // certified remainder + summation slop
    std::uint64_t terms = 0;   // k summed: 0..terms-1
};

/// Tr((1-T*T)^n - (1-TT*)^n) summed along the diagonal until
/// remainder_bound(n, K) < tol. Throws when no admissible cutoff exists.
ShiftIndexResult homological_index_shift(const ShiftOp& op, unsigned n, double tol);

struct CommutatorSchattenResult {
    std::uint64_t cutoff = 0;
    double value = 0.0; // Schatten-n norm of the K x K truncation of T*T - TT*
    double tail = 0.0;  // certified bound on the dropped contribution
};

/// The truncated commutator is diagonal for a weighted shift, so the norm is
/// evaluated from the diagonal closed form.
CommutatorSchattenResult commutator_schatten_check(const ShiftOp& op, unsigned n,
                                                   std::uint64_t cutoff);

/// Diagonal entry <e_k, pi(p) e_k> for the shift representation x -> T, y -> T*.
double shift_diagonal(const ShiftOp& op, const FreePoly& p, std::uint64_t k);

struct ShiftPairingReport {
    ShiftIndexResult index;
    double pairing_value = 0.0;
    double pairing_bound = 0.0;
    double residual = 0.0;
};

/// Trace of the evaluated cycle w^n - v^n, summed through the word walk on
/// the shift basis, against the index series route.
ShiftPairingReport pairing_check_shift(const ShiftOp& op, unsigned n, double tol);

/// Named rules: "inverse-poly", "one", "zero", "geometric", "alternating-slow".
ShiftOp make_shift_rule(const std::string& name);
std::vector<std::string> shift_rule_names();

/// Named t-families of rules: "inverse-poly-smooth", "frozen",
/// "alternating-slow-family".
std::function<ShiftOp(double)> make_shift_family(const std::string& name);
std::vector<std::string> shift_family_names();

} // namespace homindex

#endif
