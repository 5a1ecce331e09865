#pragma once

#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/hyperlog.hpp"
#include "hyperexp/parammap.hpp"
#include "hyperexp/polynomial.hpp"

namespace hyperexp {

/// Exact decomposition f = poly + sum coeff/(x-pole)^mult; requires the
/// denominator to factor into rational linear factors (Error(domain) when the
/// pole alphabet leaves the rationals).
struct PartialFractions {
    Polynomial poly;
    struct PoleTerm {
        Rational pole;
        int mult;
        Rational coeff;
    };
    std::vector<PoleTerm> poles;
};
PartialFractions partial_fractions(const RationalFunction& f);

/// integral_0^t one_form(s) * expr(s) ds as a new expression over the same
/// variable: simple poles prepend letters, everything else integrates by
/// parts into rational prefactors. Throws Error(domain) when a divergence at
/// the basepoint would force a nonzero integration constant.
HyperlogExpr integrate_expr(const HyperlogExpr& expr, const RationalFunction& one_form);

/// Symbolic eps-expansion of the base function over the map's variable:
/// entry m holds w_m as rational-prefactor combinations of words (entry 0 is
/// the constant 1, entries below the first nonvanishing order are empty).
/// Supported: completed maps matching (A, B) of the spec with q <= 2 and a
/// rational (real) letter alphabet; the total weight N*p is capped at 12.
std::vector<HyperlogExpr> symbolic_expand(const BaseSpec& spec, int N, const ParamMap& map);

}  // namespace hyperexp
