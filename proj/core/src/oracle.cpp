#include "hyperexp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hyperexp/error.hpp"

namespace hyperexp {

EpsPoly pochhammer_eps(const EpsParam& base, long j, int order) {
    if (j < 0) throw_domain("pochhammer index must be nonnegative");
    EpsPoly acc(order, Rational(1));
    for (long l = 0; l < j; ++l) acc *= EpsPoly::linear(order, base.fixed + l, base.slope);
    return acc;
}

EpsPoly oracle_term(const HyperSpec& spec, long j, int N) {
    EpsPoly num(N, Rational(1));
    for (const auto& u : spec.upper) num *= pochhammer_eps(u, j, N);
    EpsPoly den(N, Rational(1));
    for (const auto& l : spec.lower) den *= pochhammer_eps(l, j, N);
    den *= pochhammer_eps(EpsParam(Rational(1), Rational(0)), j, N);  // j!
    return num * eps_inverse(den);
}

namespace {

// Shared summation core: term j contributes weight(j) * coeff_m * z^j to order m.
std::vector<double> sum_series(const HyperSpec& spec, int theta_power, double z, int N,
                               const OracleOptions& opt) {
    spec.validate();
    if (N < 0) throw_domain("expansion order must be nonnegative");
    if (!(std::abs(z) < 1.0))
        throw_domain("series oracle requires |z| < 1");

    std::vector<long double> acc(static_cast<std::size_t>(N) + 1, 0.0L);

    // incremental exact state
    EpsPoly num(N, Rational(1));
    EpsPoly den(N, Rational(1));

    long double zpow = 1.0L;
    int stable = 0;
    int zero_run = 0;
    long double prev_mag = -1.0L;
    long double ratio_max = 0.0L;

    for (long j = 0;; ++j) {
        if (j > 0) {
            for (const auto& u : spec.upper) num *= EpsPoly::linear(N, u.fixed + (j - 1), u.slope);
            for (const auto& l : spec.lower) den *= EpsPoly::linear(N, l.fixed + (j - 1), l.slope);
            den *= EpsPoly::linear(N, Rational(j), Rational(0));  // factorial factor
            zpow *= z;
        }
        EpsPoly term = num * eps_inverse(den);

        long double mag = 0.0L;
        long double wj = (theta_power == 0) ? 1.0L : powl(static_cast<long double>(j),
                                                          static_cast<long double>(theta_power));
        if (j == 0 && theta_power > 0) wj = 0.0L;
        for (int m = 0; m <= N; ++m) {
            long double v = wj * static_cast<long double>(term.coeff(m).get_d()) * zpow;
            acc[static_cast<std::size_t>(m)] += v;
            mag += fabsl(v);
        }

        // geometric tail certificate over all orders at once
        if (j > 0) {
            if (mag == 0.0L) {
                ++zero_run;
                if (zero_run >= 8 && j > 2 * N + 8) break;  // terminating series
            } else {
                zero_run = 0;
                if (prev_mag > 0.0L) {
                    long double r = mag / prev_mag;
                    ratio_max = (stable == 0) ? r : std::max(ratio_max, r);
                    if (r < 1.0L) ++stable;
                    else { stable = 0; ratio_max = 0.0L; }
                    if (stable >= opt.stable_ratio_terms && ratio_max < 1.0L) {
                        // Ratios approach |z| monotonically; max(recent, |z|)
                        // bounds every remaining ratio from either side.
                        long double reff = std::max(ratio_max, static_cast<long double>(std::abs(z)));
                        long double tail = mag * reff / (1.0L - reff);
                        if (tail < static_cast<long double>(opt.tail_tol)) break;
                    }
                }
            }
            if (mag > 0.0L) prev_mag = mag;
        }
        if (j >= opt.max_terms)
            throw_tolerance("series tail bound not achieved within the term cap; "
                            "|z| too close to 1 for the requested tolerance");
    }

    std::vector<double> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<double>(acc[i]);
    return out;
}

}  // namespace

std::vector<double> hyper_eps_coeffs(const HyperSpec& spec, double z, int N,
                                     const OracleOptions& opt) {
    return sum_series(spec, 0, z, N, opt);
}

std::vector<double> theta_hyper_eps_coeffs(const HyperSpec& spec, int k, double z, int N,
                                           const OracleOptions& opt) {
    if (k < 0) throw_domain("theta power must be nonnegative");
    return sum_series(spec, k, z, N, opt);
}

Rational harmonic_sum(int a, long n) {
    if (a < 1) throw_domain("harmonic index must be positive");
    if (n < 0) throw_domain("harmonic sum upper limit must be nonnegative");
    Rational s(0);
    for (long j = 1; j <= n; ++j) s += pow_rational(make_rational(1, j), a);
    return s;
}

}  // namespace hyperexp
