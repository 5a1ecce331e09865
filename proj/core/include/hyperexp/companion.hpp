#pragma once

#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/rational_function.hpp"

namespace hyperexp {

/// theta-module structure of a pF_{p-1} at a fixed numeric eps: the basis is
/// (F, theta F, ..., theta^{p-1} F). Rows k < p encode the shift
/// theta * theta^{k-1} = theta^k; the last row reduces theta^p through the
/// hypergeometric ODE, with denominator (1-z).
class CompanionMatrix {
  public:
    CompanionMatrix(const HyperSpec& spec, const Rational& eps);

    int p() const { return p_; }
    const Rational& eps() const { return eps_; }

    /// Coefficient of theta^j in the reduction of theta^p.
    const RationalFunction& theta_top(int j) const;
    /// Matrix entry: row k is the basis expansion of theta applied to
    /// theta^{k-1} F (k = 1..p).
    RationalFunction entry(int row, int col) const;

    /// theta acting on a coefficient vector v (the function sum_k v_k theta^k F):
    /// out_j = z v_j' + v_{j-1} + v_{p-1} * theta_top(j).
    std::vector<RationalFunction> apply_theta(const std::vector<RationalFunction>& v) const;
    /// (theta + u) on a coefficient vector.
    std::vector<RationalFunction> apply_theta_plus(const std::vector<RationalFunction>& v,
                                                   const Rational& u) const;

  private:
    int p_;
    Rational eps_;
    std::vector<RationalFunction> top_;  // theta^p F = sum_j top_[j] theta^j F
};

CompanionMatrix companion(const HyperSpec& spec, const Rational& at_eps);

}  // namespace hyperexp
