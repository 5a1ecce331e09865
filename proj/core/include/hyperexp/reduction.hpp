#pragma once

#include <string>
#include <vector>

#include "hyperexp/companion.hpp"
#include "hyperexp/eps_param.hpp"
#include "hyperexp/rational_function.hpp"

namespace hyperexp {

/// Representation of a hypergeometric function over the theta-module of a
/// base spec at a fixed numeric eps:
///   normalizer * target = sum_{k=1..p} coeffs[k-1] * theta^{k-1} base.
/// Canonical form: all p+1 entries polynomial with no common factor and a
/// monic normalizer, which makes equality of representations literal.
struct ThetaRep {
    HyperSpec base;
    HyperSpec target;  ///< base with integer-shifted fixed parts
    Rational eps{0};
    std::vector<RationalFunction> coeffs;  // R_1 .. R_p
    RationalFunction normalizer{Rational(1)};  // R_{p+1}

    static ThetaRep identity(const HyperSpec& base, const Rational& eps);

    int p() const { return static_cast<int>(coeffs.size()); }
    /// The rational-function coefficient vector x_k = R_{k+1}/R_{p+1}.
    std::vector<RationalFunction> x() const;

    /// Restore the canonical polynomial form.
    void normalize();

    friend bool operator==(const ThetaRep& a, const ThetaRep& b) {
        return a.base == b.base && a.target == b.target && a.eps == b.eps &&
               a.coeffs == b.coeffs && a.normalizer == b.normalizer;
    }

    std::string to_string() const;
};

enum class ParamSide { upper, lower };

/// Shifts one parameter of the represented function by +-1. Raising an upper
/// U applies (theta+U)/U; lowering a lower L applies (theta+L-1)/(L-1); the
/// two inverse directions solve a linear system over the theta-module by
/// undetermined coefficients. Throws Error(domain) when the contiguous
/// operator is singular at this eps (U = 0 or L = 1 patterns).
ThetaRep step(const ThetaRep& rep, ParamSide side, int index, int direction);

/// Composition of steps in canonical order (all raises, then all lowers,
/// uppers before lowers, left to right). target and base must share slopes
/// and differ by integers in the fixed parts.
ThetaRep reduce(const HyperSpec& target, const HyperSpec& base, const Rational& eps);

/// Max absolute order-by-order mismatch of the two sides of the
/// representation identity at the given z, with parameters evaluated at eps
/// (the coefficients are per-eps, so both specs are evaluated before the
/// oracle expansion; orders above 0 then vanish identically on both sides and
/// order 0 carries the numeric content).
double verify_rep(const ThetaRep& rep, const HyperSpec& target, double z, const Rational& eps,
                  int N);

/// True when every pole of the coefficient vector lies in {0, 1} (the
/// singular points of the hypergeometric operator).
bool poles_within_singular_locus(const ThetaRep& rep);

}  // namespace hyperexp
