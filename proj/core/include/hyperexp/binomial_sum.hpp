#pragma once

#include <string>
#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/rational.hpp"

namespace hyperexp {

/// sum_{j>=1} binom(2j,j)^{-k} z^j / j^c * prod S_{a_i}(j-1) * prod S_{b_i}(2j-1)
/// with k = +1 (inverse binomial) or k = -1 (binomial).
struct BinomialSumSpec {
    int k = +1;
    std::vector<int> a_list;  // harmonic indices at argument j-1
    std::vector<int> b_list;  // harmonic indices at argument 2j-1
    int c = 0;                // power of j in the denominator
    double z = 0.0;

    void validate() const;
    std::string to_string() const;
};

struct BinomialSumResult {
    double value = 0.0;
    long terms = 0;
    double tail_bound = 0.0;
    bool boundary = false;  ///< tail certified by power-law decay, not geometrically
};

/// Direct summation with a geometric tail certificate inside the convergence
/// disk (|z| < 4 for k=+1, |z| < 1/4 for k=-1). On the boundary the terms must
/// decay like a power below -1; the result is then flagged `boundary`.
BinomialSumResult binomial_sum_detailed(const BinomialSumSpec& spec, double tol);
double binomial_sum(const BinomialSumSpec& spec, double tol);

/// One catalog entry mapping a binomial sum to parameter derivatives of
/// hypergeometric series: value = const_term + sum over terms of
/// coeff * z^zpow * w_{deriv_order}(spec at arg_scale * z).
struct CatalogRep {
    struct Term {
        Rational coeff;
        int zpow = 0;
        HyperSpec spec;       // slope entries act as derivative seeds
        int deriv_order = 0;  // which eps coefficient to take
        Rational arg_scale;   // series argument is arg_scale * z
    };
    Rational const_term{0};
    std::vector<Term> terms;
    std::string description;
    double value = 0.0;     // representation side
    double direct = 0.0;    // Eq.-(1)-style direct sum
    double residual = 0.0;  // |value - direct|
};

/// Looks the spec up in the built-in catalog (k = +-1 with no harmonic sums
/// and c in {0,1,2}; k = +1 with a_list = (1) and c in {0,1}), evaluates both
/// sides and reports the residual. Throws Error(domain) for specs outside the
/// catalog.
CatalogRep catalog_hyper_rep(const BinomialSumSpec& spec, double tol = 1e-12);

}  // namespace hyperexp
