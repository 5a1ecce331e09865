#pragma once

#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/eps_poly.hpp"

namespace hyperexp {

/// Exact truncated expansion of the rising factorial
/// (fixed + slope*eps)_j = prod_{l=0}^{j-1} (fixed + l + slope*eps).
EpsPoly pochhammer_eps(const EpsParam& base, long j, int order);

struct OracleOptions {
    double tail_tol = 1e-12;
    long max_terms = 1000000;
    int stable_ratio_terms = 5;  // consecutive decaying ratios before the geometric bound applies
};

/// Expansion coefficients w_0..w_N of the defining series at a real z, |z|<1.
/// Every term's eps-polynomial is computed in exact rational arithmetic; only
/// the accumulation over j is floating point. Summation stops once a geometric
/// bound certifies the remaining tail below tail_tol for every order at once.
std::vector<double> hyper_eps_coeffs(const HyperSpec& spec, double z, int N,
                                     const OracleOptions& opt = {});

/// Coefficients of theta^k applied to the series (term j picks up j^k). k = 0
/// reproduces hyper_eps_coeffs; any k >= 0 is accepted.
std::vector<double> theta_hyper_eps_coeffs(const HyperSpec& spec, int k, double z, int N,
                                           const OracleOptions& opt = {});

/// S_a(n) = sum_{j=1}^{n} 1/j^a, exact; the empty sum is 0.
Rational harmonic_sum(int a, long n);

/// Exact eps-polynomial of series term j (the Pochhammer ratio over j!),
/// exposed for coefficient-level property checks.
EpsPoly oracle_term(const HyperSpec& spec, long j, int N);

}  // namespace hyperexp
