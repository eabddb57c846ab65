#ifndef HOMINDEX_CHAIN_HPP
#define HOMINDEX_CHAIN_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "homindex/freepoly.hpp"

namespace homindex {

/// Formal linear combination of elementary tensors over the free algebra.
/// Canonical form: every tensor leg is a single word (the multilinear
/// expansion), coefficients exact, zero terms dropped. All tensors in one
/// chain share the arity degree+1.
class Chain {
public:
    using Tensor = std::vector<Word>;
    using TermMap = std::map<Tensor, GaussQ>;

    explicit Chain(unsigned degree) : degree_(degree) {}

    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Tensor& t, const GaussQ& c);

    /// Multilinear expansion of a tensor with polynomial legs.
    static Chain from_polys(const std::vector<FreePoly>& legs, const GaussQ& scale = GaussQ(1));

    friend Chain operator+(const Chain& a, const Chain& b);
    friend Chain operator-(const Chain& a, const Chain& b);
    Chain operator-() const;
    friend Chain operator*(const GaussQ& s, const Chain& c);
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Canonical JSON: [{"coeff": "...", "legs": ["1*x*y", ...]}, ...]
    std::string to_json() const;

private:
    unsigned degree_;
    TermMap terms_;
};

/// Hochschild boundary; degree 0 maps to the zero chain in degree 0.
Chain hochschild_b(const Chain& c);

/// Signed cyclic rotation t.
Chain cyclic_t(const Chain& c);

/// N = 1 + t + ... + t^degree.
Chain cyclic_norm_N(const Chain& c);

/// Extra degeneracy s: prepend the unit leg.
Chain degeneracy_s(const Chain& c);

/// B = (1 - t) s N.
Chain connes_B(const Chain& c);

/// True iff N(c) = 0, i.e. c lies in Im(1 - t) over a characteristic-0 field.
bool is_cyclically_trivial(const Chain& c);

/// Attempts to solve (1 - t) z = c exactly; returns true and fills z on success.
bool solve_one_minus_t(const Chain& c, Chain& z);

/// Seeded generator of random chains with monomial legs (lengths <= max_len),
/// small integer coefficients. Deterministic across platforms.
Chain random_chain(unsigned degree, std::size_t n_terms, std::size_t max_len,
                   std::uint64_t seed);

/// Element of the totalized even/odd column: components in degrees
/// top, top-2, ..., down to parity.
class TotChain {
public:
    explicit TotChain(std::vector<Chain> components);

    unsigned top_degree() const { return components_.front().degree(); }
    const std::vector<Chain>& components() const { return components_; }
    const Chain& component(unsigned degree) const;
    bool is_zero() const;

    friend bool operator==(const TotChain& a, const TotChain& b) {
        return a.components_ == b.components_;
    }

private:
    std::vector<Chain> components_;
};

/// Periodicity operator: drops the top component. Requires top_degree >= 2.
TotChain periodicity_S(const TotChain& c);

/// Totalized boundary: output component in degree d is
/// b(input_{d+1}) + B(input_{d-1}); the would-be component above the new top
/// falls outside the column and is dropped.
TotChain tot_boundary(const TotChain& c);

} // namespace homindex

#endif
