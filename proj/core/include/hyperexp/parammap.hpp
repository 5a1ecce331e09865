#pragma once

#include <string>
#include <vector>

#include "hyperexp/rational.hpp"
#include "hyperexp/rational_function.hpp"

namespace hyperexp {

enum class MapCase { i, ii, iii, unsupported };

std::string to_string(MapCase c);

/// Substitution data for one (A, B) pair: the variable change xi(z) that turns
/// all four one-forms dz/((1-z)h), dz/z, dz/(z h) and h dz/z into rational
/// forms Q, R, P1, P2 of xi, together with z(xi) and h(z(xi)) as exact
/// rational functions. R^2 = P1 P2 and h = R/P1 hold identically.
struct ParamMap {
    MapCase case_tag = MapCase::unsupported;
    long q = 1;  ///< root order of the substitution
    long u = 0;  ///< numerator of the fractional exponent (paper overloads p/r; renamed)
    Rational A{0}, B{1};

    RationalFunction z_of_xi;  ///< exact z(xi)
    RationalFunction h_of_xi;  ///< exact h(z(xi))
    RationalFunction Q, R, P1, P2;

    bool completed = false;

    /// Numeric xi(z) on (0,1), real positive branch.
    double xi_of_z(double z) const;
    /// Closed-form description like "(1-z)^(1/2)".
    std::string xi_description() const;
};

/// Pattern-match (A, B) onto the supported cases:
///   (i)   A = 0, B != 1:        xi = (z/(1-z))^{1/q},  1-B = u/q
///   (ii)  B = 1, A != 0:        xi = (1-z)^{1/q},      A = u/q
///   (iii) B - A integer:        xi = z^{1/q},          q = den(B), u = num(1-B)
/// checked in that order; the degenerate pair A=0, B=1 falls through to (iii)
/// with xi = z. Anything else is returned as `unsupported` (never a guess).
/// Only case/q/u/A/B are filled; one_forms completes the map.
ParamMap classify(const Rational& A, const Rational& B);

/// Substitutes z(xi) into the four one-forms and reduces them to rational
/// functions of xi (exact cancellation of the fractional powers is guaranteed
/// by the case structure). Throws Error(domain) on an unsupported skeleton.
ParamMap one_forms(ParamMap skeleton);

struct MapReport {
    bool r2_identity = false;   ///< R^2 == P1*P2 as rational functions
    double max_h_dev = 0.0;     ///< max |h_factor - R/P1| over the samples
    double max_form_dev = 0.0;  ///< max relative deviation of the dz/z = R dxi finite-difference check
    bool ok = false;
    std::string detail;  ///< names the failed identity when !ok
};

/// Runs the three consistency checks of a completed map at the given z
/// samples (exact R^2 = P1 P2; |h - R/P1| < 1e-10; finite-difference one-form
/// check to 1e-6 relative).
MapReport verify_map(const ParamMap& map, const std::vector<double>& samples);

}  // namespace hyperexp
