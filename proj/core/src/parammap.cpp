#include "hyperexp/parammap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperexp/epsode.hpp"
#include "hyperexp/error.hpp"

namespace hyperexp {

std::string to_string(MapCase c) {
    switch (c) {
        case MapCase::i: return "i";
        case MapCase::ii: return "ii";
        case MapCase::iii: return "iii";
        default: return "unsupported";
    }
}

double ParamMap::xi_of_z(double z) const {
    if (!(z > 0.0 && z < 1.0)) throw_domain("xi map evaluated outside (0,1)");
    double inv_q = 1.0 / static_cast<double>(q);
    switch (case_tag) {
        case MapCase::i: return std::pow(z / (1.0 - z), inv_q);
        case MapCase::ii: return std::pow(1.0 - z, inv_q);
        case MapCase::iii: return std::pow(z, inv_q);
        default: throw_domain("unsupported parameter map");
    }
}

std::string ParamMap::xi_description() const {
    std::string e = (q == 1) ? "" : "^(1/" + std::to_string(q) + ")";
    switch (case_tag) {
        case MapCase::i: return "(z/(1-z))" + (e.empty() ? std::string() : e);
        case MapCase::ii: return "(1-z)" + e;
        case MapCase::iii: return (q == 1) ? "z" : "z" + e;
        default: return "unsupported";
    }
}

ParamMap classify(const Rational& A, const Rational& B) {
    ParamMap m;
    m.A = A;
    m.B = B;
    if (A == 0 && B != 1) {
        Rational e = Rational(1) - B;  // = u/q in lowest terms
        m.case_tag = MapCase::i;
        m.u = to_long(Rational(e.get_num()));
        m.q = denominator_long(e);
        return m;
    }
    if (B == 1 && A != 0) {
        m.case_tag = MapCase::ii;
        m.u = to_long(Rational(A.get_num()));
        m.q = denominator_long(A);
        return m;
    }
    if (is_integer(B - A)) {
        Rational e = Rational(1) - B;
        m.case_tag = MapCase::iii;
        m.q = denominator_long(B);
        m.u = to_long(Rational(e.get_num()));
        return m;
    }
    m.case_tag = MapCase::unsupported;
    return m;
}

ParamMap one_forms(ParamMap m) {
    if (m.case_tag == MapCase::unsupported)
        throw_domain("one_forms: unsupported (A,B) = (" + to_string(m.A) + "," + to_string(m.B) + ")");
    if (m.completed) return m;

    const RationalFunction xi = RationalFunction::variable();
    const RationalFunction xiq = xi.pow(static_cast<int>(m.q));
    const RationalFunction one(Rational(1));

    switch (m.case_tag) {
        case MapCase::i:
            // xi^q = z/(1-z): real on (0,1); h = (z/(1-z))^{u/q} = xi^u
            m.z_of_xi = xiq / (one + xiq);
            m.h_of_xi = xi.pow(static_cast<int>(m.u));
            break;
        case MapCase::ii:
            // xi^q = 1-z; h = (1-z)^{-A} = xi^{-u}
            m.z_of_xi = one - xiq;
            m.h_of_xi = xi.pow(static_cast<int>(-m.u));
            break;
        case MapCase::iii: {
            // xi^q = z with q = den(B), so z^{1-B} = xi^{q(1-B)} = xi^u and
            // (1-z)^{B-A-1} carries the integer exponent k-1
            m.z_of_xi = xiq;
            long ki = to_long(m.B - m.A);
            m.h_of_xi = xi.pow(static_cast<int>(m.u)) * (one - xiq).pow(static_cast<int>(ki - 1));
            break;
        }
        default: throw_domain("unsupported parameter map");
    }

    // h must be rational by construction; the substituted one-forms follow
    const RationalFunction zp = m.z_of_xi.derivative();
    const RationalFunction z = m.z_of_xi;
    m.Q = zp / ((one - z) * m.h_of_xi);
    m.R = zp / z;
    m.P1 = zp / (z * m.h_of_xi);
    m.P2 = zp * m.h_of_xi / z;
    m.completed = true;
    return m;
}

MapReport verify_map(const ParamMap& map, const std::vector<double>& samples) {
    MapReport rep;
    if (!map.completed) throw_domain("verify_map needs a completed map");

    rep.r2_identity = (map.R * map.R == map.P1 * map.P2);
    if (!rep.r2_identity) {
        rep.detail = "R^2 != P1*P2";
        return rep;
    }
    for (double z : samples) {
        double xi = map.xi_of_z(z);
        double h = h_factor(map.A, map.B, z);
        double dev = std::abs(h - map.R.eval(xi) / map.P1.eval(xi));
        rep.max_h_dev = std::max(rep.max_h_dev, dev);

        // dz/z = R dxi: central difference of z(xi)
        double d = 1e-6 * std::max(1.0, std::abs(xi));
        double num = (map.z_of_xi.eval(xi + d) - map.z_of_xi.eval(xi - d)) / (2.0 * d);
        double lhs = num / map.z_of_xi.eval(xi);
        double rhs = map.R.eval(xi);
        rep.max_form_dev = std::max(rep.max_form_dev, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    if (rep.max_h_dev >= 1e-10) {
        rep.detail = "h != R/P1 numerically";
        return rep;
    }
    if (rep.max_form_dev >= 1e-6) {
        rep.detail = "dz/z != R dxi under finite differences";
        return rep;
    }
    rep.ok = true;
    return rep;
}

}  // namespace hyperexp
