#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esym/interval.hpp"

namespace esym {

// The large-n half of the theorem rests on three real inequalities:
//   f(x) = x - (3e log x + 3e + 8)(e log x + e + 4) > 0,
//   g(x) = x^0.3 - e log x - e - 4 > 0                (both for x >= 300000),
//   h(t) = 4 * 0.7^(3/2) t^3 - 8 * 0.7^(1/2) t - 2e t^2 - 2e - 4 >= 0
// with t = sqrt(log n). Each is evaluated here with outward rounding; a sign
// is accepted only when the whole enclosure lies on one side of zero.

Interval analytic_f(const Interval& x);
/// f'(x) = 1 - 6e^2 log x / x - (6e^2 + 20e) / x
Interval analytic_f_prime(const Interval& x);
Interval analytic_g(const Interval& x);
/// x g'(x) = 0.3 x^0.3 - e
Interval analytic_x_g_prime(const Interval& x);
/// h(t) >= 0 is the cubic inequality in t = sqrt(log n).
Interval inequality_slack(const Interval& t);
Interval inequality_slack_derivative(const Interval& t);

struct SignSample {
    std::string label;
    double at = 0;  // x or t
    double lower = 0;
    double upper = 0;
    Sign sign = Sign::Indeterminate;
};

struct AnalyticReport {
    mpfr_prec_t precision = 64;

    SignSample f_at_300000;
    SignSample g_at_300000;
    /// f' and x g' on a log-spaced grid over [3e5, 1e12], plus f and g there.
    std::vector<SignSample> derivative_grid;

    /// h at the published threshold, slightly above it, and at t = 3.4.
    SignSample slack_at_threshold;
    SignSample slack_above_threshold;
    SignSample slack_at_3_4;
    /// h and h' sampled on t in [3.47603, 10].
    std::vector<SignSample> slack_grid;

    /// Enclosure of the root of h between 3.4 and 3.5.
    double root_lower = 0;
    double root_upper = 0;
    /// Smallest integer n with sqrt(log n) >= root_upper.
    std::uint64_t n_threshold_derived = 0;
    std::uint64_t n_threshold_published = 176802;
    /// sqrt(log 176802) clears the root, and 176802 <= 300000.
    bool implication_holds = false;

    bool slack_threshold_check = false;
    bool all_passed = false;
};

/// Runs every check at `precision`, doubling up to `max_precision` while any
/// sign is indeterminate. Throws std::runtime_error if signs remain
/// indeterminate at max_precision.
AnalyticReport analytic_region_check(mpfr_prec_t precision = 64, mpfr_prec_t max_precision = 4096);

}  // namespace esym
