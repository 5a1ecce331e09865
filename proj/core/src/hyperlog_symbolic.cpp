#include "hyperexp/hyperlog_symbolic.hpp"

#include <algorithm>
#include <map>

#include "hyperexp/elem_sym.hpp"
#include "hyperexp/epsode.hpp"
#include "hyperexp/error.hpp"

namespace hyperexp {

namespace {

std::vector<long> divisors_of(long n) {
    n = std::abs(n);
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    return d;
}

// All roots with multiplicity when p splits into rational linear factors.
std::map<Rational, int> rational_roots_full(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::map<Rational, int> roots;
    Polynomial q = p;

    // roots at 0 first
    while (!q.is_zero() && q.coeff(0) == 0) {
        std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Polynomial(std::move(shifted));
        ++roots[Rational(0)];
    }
    if (q.degree() < 1) return roots;

    // scale to integer coefficients
    mpz_class den_lcm(1);
    for (const auto& c : q.coeffs()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = den_lcm / g * c.get_den();
    }
    std::vector<mpz_class> ic;
    for (const auto& c : q.coeffs()) ic.push_back(mpz_class(c * Rational(den_lcm)));

    if (!ic.front().fits_slong_p() || !ic.back().fits_slong_p() ||
        std::abs(ic.front().get_si()) > 1000000 || std::abs(ic.back().get_si()) > 1000000)
        throw_domain("pole alphabet outside the supported rational range");

    std::vector<Rational> candidates;
    for (long a : divisors_of(ic.front().get_si()))
        for (long b : divisors_of(ic.back().get_si())) {
            candidates.push_back(make_rational(a, b));
            candidates.push_back(make_rational(-a, b));
        }

    for (const auto& r : candidates) {
        while (q.degree() >= 1 && q.eval(r) == 0) {
            q = poly_exact_div(q, Polynomial({-r, Rational(1)}));
            ++roots[r];
        }
        if (q.degree() < 1) break;
    }
    if (q.degree() >= 1)
        throw_domain("denominator does not split over the rationals: " + p.to_string("t") +
                     " (letters would leave the real rational alphabet)");
    return roots;
}

Polynomial poly_antiderivative(const Polynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<std::size_t>(i + 1)] = p.coeff(i) / Rational(i + 1);
    return Polynomial(std::move(c));
}

}  // namespace

PartialFractions partial_fractions(const RationalFunction& f) {
    PartialFractions out;
    auto [quot, rem] = f.num().divmod(f.den());
    out.poly = quot;
    if (rem.is_zero()) return out;

    const auto roots = rational_roots_full(f.den());
    Polynomial D = f.den();
    for (const auto& [a, r] : roots) {
        // remove the (x-a)^r block: g = rem/Dother is regular at a and
        // c_m = g^{(r-m)}(a)/(r-m)!
        Polynomial lin({-a, Rational(1)});
        Polynomial Dother = D;
        for (int i = 0; i < r; ++i) Dother = poly_exact_div(Dother, lin);
        RationalFunction g(rem, Dother);
        Rational fact(1);
        for (int m = r; m >= 1; --m) {
            auto val = g.eval(a);
            if (!val) throw_internal("partial fraction residue hit a pole");
            Rational c = *val / fact;
            if (c != 0) out.poles.push_back({a, m, c});
            if (m > 1) {
                g = g.derivative();
                fact *= Rational(r - m + 1);
            }
        }
    }

    // exactness assertion
    RationalFunction rebuilt{out.poly};
    for (const auto& pt : out.poles)
        rebuilt += RationalFunction(pt.coeff) /
                   RationalFunction(Polynomial({-pt.pole, Rational(1)})).pow(pt.mult);
    if (!(rebuilt == f)) throw_internal("partial fraction decomposition failed to reconstruct");
    return out;
}

namespace {

// linear Taylor coefficient of I(s; word) at s = 0: nonzero (= -1/a_1) only
// for words of the shape (0,...,0,a_1)
Rational word_linear_coeff(const HyperlogWord& w) {
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i] != 0) return Rational(0);
    return Rational(-1) / w.letters.back();
}

void push_term(HyperlogExpr& out, RationalFunction pre, HyperlogWord word) {
    if (pre.is_zero()) return;
    out.terms.push_back({std::move(pre), std::move(word)});
}

// integral_0^t g(s) I(s; word) ds appended onto out
void integrate_term(const RationalFunction& g, const HyperlogWord& word, HyperlogExpr& out) {
    const PartialFractions pf = partial_fractions(g);
    const RationalFunction x = RationalFunction::variable();

    if (word.empty()) {
        for (const auto& pt : pf.poles) {
            if (pt.pole == 0)
                throw_domain("nonzero integration constant required: rational integrand "
                             "diverges at the basepoint");
            if (pt.mult == 1) {
                push_term(out, RationalFunction(pt.coeff), HyperlogWord({pt.pole}));
            } else {
                RationalFunction F = RationalFunction(-pt.coeff / Rational(pt.mult - 1)) /
                                     RationalFunction(Polynomial({-pt.pole, Rational(1)})).pow(pt.mult - 1);
                auto at0 = F.eval(Rational(0));
                push_term(out, F - RationalFunction(*at0), HyperlogWord{});
            }
        }
        if (!pf.poly.is_zero()) push_term(out, RationalFunction(poly_antiderivative(pf.poly)), HyperlogWord{});
        return;
    }

    const Rational a_out = word.letters.front();
    HyperlogWord tail(std::vector<Rational>(word.letters.begin() + 1, word.letters.end()));
    const RationalFunction lin_out(Polynomial({-a_out, Rational(1)}));

    RationalFunction f_reg;  // finite-at-0 antiderivative of the by-parts block
    for (const auto& pt : pf.poles) {
        if (pt.mult == 1) {
            // integral c/(s-a) I(s; word) ds = c I(t; a, word); a = 0 allowed,
            // the inner word vanishes at the basepoint
            std::vector<Rational> prep;
            prep.reserve(word.letters.size() + 1);
            prep.push_back(pt.pole);
            prep.insert(prep.end(), word.letters.begin(), word.letters.end());
            push_term(out, RationalFunction(pt.coeff), HyperlogWord(std::move(prep)));
        } else if (pt.pole != 0) {
            f_reg += RationalFunction(-pt.coeff / Rational(pt.mult - 1)) /
                     RationalFunction(Polynomial({-pt.pole, Rational(1)})).pow(pt.mult - 1);
        } else if (pt.mult == 2) {
            // integral c/s^2 I ds = -c I(t;word)/t + c lin(word) + integral c/(s(s-a_out)) I(s;tail) ds
            push_term(out, RationalFunction(Polynomial(-pt.coeff), Polynomial::variable()), word);
            Rational lin = word_linear_coeff(word);
            if (lin != 0) push_term(out, RationalFunction(pt.coeff * lin), HyperlogWord{});
            integrate_term(RationalFunction(Polynomial(pt.coeff)) / (x * lin_out), tail, out);
        } else {
            throw_domain("nonzero integration constant required: pole of order >= 3 at the basepoint");
        }
    }
    if (!pf.poly.is_zero()) f_reg += RationalFunction(poly_antiderivative(pf.poly));
    if (!f_reg.is_zero()) {
        // by parts: integral f' I = f I - integral f I(tail)/(s - a_out)
        push_term(out, f_reg, word);
        integrate_term(-f_reg / lin_out, tail, out);
    }
}

}  // namespace

HyperlogExpr integrate_expr(const HyperlogExpr& expr, const RationalFunction& one_form) {
    HyperlogExpr out;
    out.variable = expr.variable;
    for (const auto& term : expr.terms) integrate_term(term.prefactor * one_form, term.word, out);
    out.normalize();
    return out;
}

std::vector<HyperlogExpr> symbolic_expand(const BaseSpec& spec, int N, const ParamMap& map_in) {
    spec.validate();
    if (N < 0) throw_domain("expansion order must be nonnegative");
    if (N * spec.p > 12) throw_domain("weight cap exceeded: N*p must stay <= 12");

    ParamMap map = map_in.completed ? map_in : one_forms(map_in);
    if (map.case_tag == MapCase::unsupported) throw_domain("unsupported parameter map");
    if (map.q > 2) throw_domain("unsupported q > 2 for the symbolic route");
    if (map.A != spec.A || map.B != spec.B) throw_domain("parameter map does not match the spec");

    // shift the variable so the basepoint z = 0 sits at t = 0; then every
    // integral runs from 0 and no integration constants arise
    const bool shifted = (map.case_tag == MapCase::ii);
    const std::string var = shifted ? "1-xi" : "xi";
    auto to_t = [&](const RationalFunction& F) {
        return shifted ? F.compose_affine(Rational(-1), Rational(1)) : F;
    };
    const Rational sgn = shifted ? Rational(-1) : Rational(1);
    const RationalFunction z_t = to_t(map.z_of_xi);
    const RationalFunction h_t = to_t(map.h_of_xi);
    const RationalFunction Q_t = to_t(map.Q) * RationalFunction(sgn);
    const RationalFunction R_t = to_t(map.R) * RationalFunction(sgn);
    if (auto z0 = z_t.eval(Rational(0)); !z0 || *z0 != 0)
        throw_internal("variable shift failed to move the basepoint to 0");
    const RationalFunction inv_z = RationalFunction(Rational(1)) / z_t;

    const SpecCoeffs sc = spec_coeffs(spec);
    const int p = spec.p;

    std::vector<std::vector<HyperlogExpr>> S(static_cast<std::size_t>(N) + 1,
                                             std::vector<HyperlogExpr>(static_cast<std::size_t>(p)));
    for (auto& row : S)
        for (auto& e : row) e.variable = var;
    S[0][0].terms.push_back({RationalFunction(Rational(1)), HyperlogWord{}});

    for (int m = 1; m <= N; ++m) {
        HyperlogExpr rhs;
        rhs.variable = var;
        for (int n = 1; n <= std::min(m, p); ++n) {
            const int j = m - n;
            for (int k = 0; k <= p - 1; ++k) {
                const Rational& cu = sc.up[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
                if (cu != 0 && !S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].empty()) {
                    HyperlogExpr part = S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                    part *= RationalFunction(cu);
                    rhs += part;
                }
                if (k >= 1) {
                    const Rational& cl = sc.lo[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)];
                    if (cl != 0 && !S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].empty()) {
                        HyperlogExpr part = S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                        part *= inv_z * RationalFunction(-cl);
                        rhs += part;
                    }
                }
            }
        }
        HyperlogExpr u = integrate_expr(rhs, Q_t);
        u *= h_t;
        S[static_cast<std::size_t>(m)][static_cast<std::size_t>(p - 1)] = u;
        for (int k = p - 2; k >= 0; --k)
            S[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                integrate_expr(S[static_cast<std::size_t>(m)][static_cast<std::size_t>(k + 1)], R_t);
    }

    std::vector<HyperlogExpr> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m) out.push_back(std::move(S[static_cast<std::size_t>(m)][0]));
    return out;
}

}  // namespace hyperexp
