#pragma once

#include <random>
#include <string>
#include <vector>

#include "hyperexp/eps_param.hpp"
#include "hyperexp/rational.hpp"

namespace hyperexp::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Rng = std::mt19937_64;

// random generators shared with the test suites
Rational random_rational(Rng& rng, long max_num = 9, long max_den = 6, bool allow_zero = true);
std::vector<Rational> random_rationals(Rng& rng, std::size_t n);
/// Random engine base spec with p in {2,3}, B in (0,2], small slopes; when
/// require_source is set the order-m0 source is nonzero.
BaseSpec random_base_spec(Rng& rng, bool require_source);

CheckResult check_merge_identities(Rng& rng, int trials);
CheckResult check_rational_function_algebra(Rng& rng, int trials);
CheckResult check_eps_inverse(Rng& rng, int trials);
CheckResult check_oracle_exactness(Rng& rng);
CheckResult check_oracle_scaling(Rng& rng);
CheckResult check_harmonic_recurrence();
CheckResult check_companion_residual(Rng& rng);
CheckResult check_reduction_roundtrip(Rng& rng);
CheckResult check_reduction_random(Rng& rng, int shifts);
CheckResult check_h_identity(Rng& rng);
CheckResult check_first_order(Rng& rng, int specs);
CheckResult check_three_way();
CheckResult check_parammap_battery();
CheckResult check_shuffle_identity(Rng& rng);
CheckResult check_word_derivative();
CheckResult check_catalog(Rng& rng);
CheckResult check_json_roundtrip();

/// The full battery; items independent of each other run concurrently up to
/// `jobs` at a time, results in a fixed order.
std::vector<CheckResult> run_battery(unsigned seed, int jobs);

}  // namespace hyperexp::verify
