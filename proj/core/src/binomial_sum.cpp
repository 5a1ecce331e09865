#include "hyperexp/binomial_sum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperexp/error.hpp"
#include "hyperexp/oracle.hpp"

namespace hyperexp {

void BinomialSumSpec::validate() const {
    if (k != 1 && k != -1) throw_domain("binomial weight k must be +1 or -1");
    if (c < 0) throw_domain("power c must be nonnegative");
    for (int a : a_list)
        if (a < 1) throw_domain("harmonic indices must be positive");
    for (int b : b_list)
        if (b < 1) throw_domain("harmonic indices must be positive");
}

std::string BinomialSumSpec::to_string() const {
    std::ostringstream os;
    os << "Sigma(k=" << (k > 0 ? "+1" : "-1") << "; a=(";
    for (std::size_t i = 0; i < a_list.size(); ++i) os << (i ? "," : "") << a_list[i];
    os << "); b=(";
    for (std::size_t i = 0; i < b_list.size(); ++i) os << (i ? "," : "") << b_list[i];
    os << "); c=" << c << "; z=" << z << ")";
    return os.str();
}

BinomialSumResult binomial_sum_detailed(const BinomialSumSpec& spec, double tol) {
    spec.validate();
    const double limit = (spec.k > 0) ? 4.0 : 0.25;
    const double az = std::abs(spec.z);
    if (az > limit) throw_domain("z outside the convergence domain of the sum");
    const bool boundary = (az == limit);
    const long double rho = static_cast<long double>(az) / limit;  // asymptotic term ratio

    // harmonic state: S_{a_i}(j-1) and S_{b_i}(2j-1), updated incrementally
    std::vector<Rational> sa(spec.a_list.size(), Rational(0));
    std::vector<Rational> sb(spec.b_list.size(), Rational(0));
    long sb_arg = 0;

    long double acc = 0.0L;
    long double u = 1.0L;  // z^j / binom(2j,j)^k, maintained by ratio
    long double prev_mag = -1.0L, ratio_max = 0.0L;
    int stable = 0;
    const long cap = 1000000;
    long double last_mag = 0.0L;
    long j = 0;

    for (j = 1; j <= cap; ++j) {
        // u_j = u_{j-1} * z * [j / (2(2j-1))]^k
        long double bin_ratio = static_cast<long double>(j) / (2.0L * (2 * j - 1));
        u *= static_cast<long double>(spec.z) * ((spec.k > 0) ? bin_ratio : 1.0L / bin_ratio);
        // bring S_b up to argument 2j-1
        while (sb_arg < 2 * j - 1) {
            ++sb_arg;
            for (std::size_t i = 0; i < sb.size(); ++i)
                sb[i] += pow_rational(make_rational(1, sb_arg), spec.b_list[i]);
        }
        long double term = u;
        for (int i = 0; i < spec.c; ++i) term /= static_cast<long double>(j);
        for (const auto& s : sa) term *= static_cast<long double>(s.get_d());
        for (const auto& s : sb) term *= static_cast<long double>(s.get_d());
        acc += term;

        long double mag = fabsl(term);
        last_mag = mag;
        if (mag == 0.0L && spec.z == 0.0) return {0.0, j, 0.0, false};

        if (!boundary && prev_mag > 0.0L && mag > 0.0L) {
            long double r = mag / prev_mag;
            ratio_max = (stable == 0) ? r : std::max(ratio_max, r);
            if (r < 1.0L) ++stable;
            else { stable = 0; ratio_max = 0.0L; }
            if (stable >= 5) {
                long double reff = std::max(ratio_max, rho);
                if (reff < 1.0L) {
                    long double tail = mag * reff / (1.0L - reff);
                    if (tail < static_cast<long double>(tol))
                        return {static_cast<double>(acc), j, static_cast<double>(tail), false};
                }
            }
        }
        if (boundary && prev_mag > 0.0L && mag > 0.0L && j > 64) {
            // power-law decay: terms ~ j^alpha; need alpha < -1
            long double alpha = logl(mag / prev_mag) / logl(static_cast<long double>(j) / (j - 1));
            if (alpha < -1.1L) {
                long double tail = mag * j / (-alpha - 1.0L);
                if (tail < static_cast<long double>(tol))
                    return {static_cast<double>(acc), j, static_cast<double>(tail), true};
            }
        }
        prev_mag = (mag > 0.0L) ? mag : prev_mag;

        // harmonic arguments for the NEXT term: S_a(j), i.e. argument (j+1)-1
        for (std::size_t i = 0; i < sa.size(); ++i)
            sa[i] += pow_rational(make_rational(1, j), spec.a_list[i]);
    }
    if (boundary && (prev_mag <= 0.0L || last_mag >= prev_mag))
        throw_domain("boundary sum does not decay: " + spec.to_string());
    throw_tolerance("binomial sum tail bound not achieved within the term cap");
}

double binomial_sum(const BinomialSumSpec& spec, double tol) {
    return binomial_sum_detailed(spec, tol).value;
}

namespace {

EpsParam ep(long nf, long df, long ns = 0, long ds = 1) {
    return EpsParam(make_rational(nf, df), make_rational(ns, ds));
}

HyperSpec hs(std::vector<EpsParam> up, std::vector<EpsParam> lo) {
    HyperSpec s;
    s.upper = std::move(up);
    s.lower = std::move(lo);
    return s;
}

}  // namespace

CatalogRep catalog_hyper_rep(const BinomialSumSpec& spec, double tol) {
    spec.validate();
    if (!spec.b_list.empty())
        throw_domain("sum not in catalog: " + spec.to_string());

    CatalogRep rep;
    const Rational quarter = make_rational(1, 4);
    const Rational four = make_rational(4, 1);
    const Rational half = make_rational(1, 2);

    if (spec.k == +1 && spec.a_list.empty() && spec.c == 0) {
        rep.const_term = Rational(-1);
        rep.terms.push_back({Rational(1), 0, hs({ep(1, 1), ep(1, 1)}, {ep(1, 2)}), 0, quarter});
        rep.description = "2F1(1,1;1/2;z/4) - 1";
    } else if (spec.k == +1 && spec.a_list.empty() && spec.c == 1) {
        rep.terms.push_back({half, 1, hs({ep(1, 1), ep(1, 1)}, {ep(3, 2)}), 0, quarter});
        rep.description = "(z/2) 2F1(1,1;3/2;z/4)";
    } else if (spec.k == +1 && spec.a_list.empty() && spec.c == 2) {
        rep.terms.push_back({half, 1, hs({ep(1, 1), ep(1, 1), ep(1, 1)}, {ep(2, 1), ep(3, 2)}), 0, quarter});
        rep.description = "(z/2) 3F2(1,1,1;2,3/2;z/4)";
    } else if (spec.k == -1 && spec.a_list.empty() && spec.c == 0) {
        rep.const_term = Rational(-1);
        rep.terms.push_back({Rational(1), 0, hs({ep(1, 2)}, {}), 0, four});
        rep.description = "1F0(1/2;;4z) - 1";
    } else if (spec.k == -1 && spec.a_list.empty() && spec.c == 1) {
        rep.terms.push_back({Rational(2), 1, hs({ep(3, 2), ep(1, 1), ep(1, 1)}, {ep(2, 1), ep(2, 1)}), 0, four});
        rep.description = "2z 3F2(3/2,1,1;2,2;4z)";
    } else if (spec.k == -1 && spec.a_list.empty() && spec.c == 2) {
        rep.terms.push_back({Rational(2), 1,
                             hs({ep(3, 2), ep(1, 1), ep(1, 1), ep(1, 1)}, {ep(2, 1), ep(2, 1), ep(2, 1)}),
                             0, four});
        rep.description = "2z 4F3(3/2,1,1,1;2,2,2;4z)";
    } else if (spec.k == +1 && spec.a_list == std::vector<int>{1} && spec.c == 0) {
        // S_1(j-1) from the eps derivative of a shifted upper parameter
        rep.terms.push_back({half, 1, hs({ep(2, 1), ep(1, 1, 1, 1)}, {ep(3, 2)}), 1, quarter});
        rep.description = "(z/2) d/deps 2F1(2,1+eps;3/2;z/4) |_{eps=0}";
    } else if (spec.k == +1 && spec.a_list == std::vector<int>{1} && spec.c == 1) {
        rep.terms.push_back({half, 1, hs({ep(1, 1, 1, 1), ep(1, 1)}, {ep(3, 2)}), 1, quarter});
        rep.description = "(z/2) d/deps 2F1(1+eps,1;3/2;z/4) |_{eps=0}";
    } else {
        throw_domain("sum not in catalog: " + spec.to_string());
    }

    OracleOptions opt;
    opt.tail_tol = tol * 0.1;
    double val = to_double(rep.const_term);
    for (const auto& t : rep.terms) {
        double y = to_double(t.arg_scale) * spec.z;
        auto w = hyper_eps_coeffs(t.spec, y, t.deriv_order, opt);
        val += to_double(t.coeff) * std::pow(spec.z, t.zpow) * w[static_cast<std::size_t>(t.deriv_order)];
    }
    rep.value = val;
    rep.direct = binomial_sum(spec, tol);
    rep.residual = std::abs(rep.value - rep.direct);
    return rep;
}

}  // namespace hyperexp
