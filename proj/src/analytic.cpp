#include "esym/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace esym {

namespace {

Interval num(long v, mpfr_prec_t prec) { return Interval::integer(v, prec); }

SignSample sample(std::string label, double at, const Interval& value) {
    return SignSample{std::move(label), at, value.lower(), value.upper(), value.sign()};
}

bool positive(const SignSample& s) { return s.sign == Sign::Positive; }
bool decided(const SignSample& s) { return s.sign != Sign::Indeterminate; }

std::uint64_t ceil_to_u64(const mpfr_t& x) {
    mpfr_t c;
    mpfr_init2(c, mpfr_get_prec(x));
    mpfr_ceil(c, x);
    const auto out = static_cast<std::uint64_t>(mpfr_get_ui(c, MPFR_RNDU));
    mpfr_clear(c);
    return out;
}

}  // namespace

Interval analytic_f(const Interval& x) {
    const auto p = x.precision();
    const Interval e = Interval::euler_e(p);
    const Interval lx = log(x);
    return x - (num(3, p) * e * lx + num(3, p) * e + num(8, p)) * (e * lx + e + num(4, p));
}

Interval analytic_f_prime(const Interval& x) {
    const auto p = x.precision();
    const Interval e = Interval::euler_e(p);
    const Interval e2 = e * e;
    return num(1, p) - num(6, p) * e2 * log(x) / x - (num(6, p) * e2 + num(20, p) * e) / x;
}

Interval analytic_g(const Interval& x) {
    const auto p = x.precision();
    const Interval e = Interval::euler_e(p);
    return pow(x, Interval::decimal("0.3", p)) - e * log(x) - e - num(4, p);
}

Interval analytic_x_g_prime(const Interval& x) {
    const auto p = x.precision();
    const Interval point3 = Interval::decimal("0.3", p);
    return point3 * pow(x, point3) - Interval::euler_e(p);
}

Interval inequality_slack(const Interval& t) {
    const auto p = t.precision();
    const Interval e = Interval::euler_e(p);
    const Interval seven = Interval::decimal("0.7", p);
    const Interval root7 = sqrt(seven);
    const Interval lhs = num(8, p) * root7 * t + num(2, p) * e * t * t + num(2, p) * e + num(4, p);
    const Interval rhs = num(4, p) * seven * root7 * pow(t, 3);
    return rhs - lhs;
}

Interval inequality_slack_derivative(const Interval& t) {
    const auto p = t.precision();
    const Interval e = Interval::euler_e(p);
    const Interval seven = Interval::decimal("0.7", p);
    const Interval root7 = sqrt(seven);
    return num(12, p) * seven * root7 * t * t - num(4, p) * e * t - num(8, p) * root7;
}

namespace {

AnalyticReport run_checks(mpfr_prec_t prec) {
    AnalyticReport r;
    r.precision = prec;

    const Interval x0 = num(300000, prec);
    r.f_at_300000 = sample("f(x)", 300000, analytic_f(x0));
    r.g_at_300000 = sample("g(x)", 300000, analytic_g(x0));

    constexpr int kGrid = 64;
    const double lo = 3e5;
    const double hi = 1e12;
    for (int i = 0; i < kGrid; ++i) {
        const double xd = std::round(lo * std::pow(hi / lo, static_cast<double>(i) / (kGrid - 1)));
        const Interval x = Interval::integer(BigInt(xd), prec);
        r.derivative_grid.push_back(sample("f'(x)", xd, analytic_f_prime(x)));
        r.derivative_grid.push_back(sample("x g'(x)", xd, analytic_x_g_prime(x)));
        r.derivative_grid.push_back(sample("f(x)", xd, analytic_f(x)));
        r.derivative_grid.push_back(sample("g(x)", xd, analytic_g(x)));
    }

    const Rat published = Rat::parse("347603/100000");
    const Rat above = published + Rat::parse("1/1000000000");
    r.slack_at_threshold =
        sample("h(t)", 3.47603, inequality_slack(Interval::rational(published, prec)));
    r.slack_above_threshold =
        sample("h(t)", 3.476030001, inequality_slack(Interval::rational(above, prec)));
    r.slack_at_3_4 = sample("h(t)", 3.4, inequality_slack(Interval::rational(Rat(34L, 10L), prec)));

    constexpr int kSlackGrid = 50;
    const Rat t_end(10);
    for (int i = 0; i < kSlackGrid; ++i) {
        const Rat t = published + (t_end - published) * Rat(static_cast<long>(i), kSlackGrid - 1);
        const Interval ti = Interval::rational(t, prec);
        const double td = Interval::rational(t, 53).lower();
        r.slack_grid.push_back(sample("h(t)", td, inequality_slack(ti)));
        r.slack_grid.push_back(sample("h'(t)", td, inequality_slack_derivative(ti)));
    }

    // Bisection for the root of h on [3.4, 3.5].
    Rat a(34L, 10L);
    Rat b(35L, 10L);
    for (int i = 0; i < 200; ++i) {
        const Rat mid = (a + b) / Rat(2);
        const Sign s = inequality_slack(Interval::rational(mid, prec)).sign();
        if (s == Sign::Positive) b = mid;
        else if (s == Sign::Negative) a = mid;
        else break;
    }
    r.root_lower = Interval::rational(a, 53).lower();
    r.root_upper = Interval::rational(b, 53).upper();
    const Interval bi = Interval::rational(b, prec);
    r.n_threshold_derived = ceil_to_u64(exp(bi * bi).hi());

    const Interval t_pub = sqrt(log(num(static_cast<long>(r.n_threshold_published), prec)));
    r.implication_holds = certainly_less(bi, t_pub) && r.n_threshold_published <= 300000 &&
                          r.n_threshold_derived <= r.n_threshold_published;

    bool grid_ok = true;
    for (const auto& s : r.slack_grid) grid_ok = grid_ok && positive(s);
    r.slack_threshold_check = positive(r.slack_at_threshold) && positive(r.slack_above_threshold) &&
                             r.slack_at_3_4.sign == Sign::Negative && grid_ok;

    bool derivatives_ok = true;
    for (const auto& s : r.derivative_grid) derivatives_ok = derivatives_ok && positive(s);
    r.all_passed = positive(r.f_at_300000) && positive(r.g_at_300000) && derivatives_ok &&
                   r.slack_threshold_check && r.implication_holds;
    return r;
}

bool all_decided(const AnalyticReport& r) {
    bool ok = decided(r.f_at_300000) && decided(r.g_at_300000) && decided(r.slack_at_threshold) &&
              decided(r.slack_above_threshold) && decided(r.slack_at_3_4);
    for (const auto& s : r.derivative_grid) ok = ok && decided(s);
    for (const auto& s : r.slack_grid) ok = ok && decided(s);
    return ok;
}

}  // namespace

AnalyticReport analytic_region_check(mpfr_prec_t precision, mpfr_prec_t max_precision) {
    if (precision < 53) throw std::domain_error("precision must be at least 53 bits");
    for (auto prec = precision; prec <= max_precision; prec *= 2) {
        AnalyticReport r = run_checks(prec);
        if (all_decided(r)) return r;
    }
    throw std::runtime_error("analytic signs still indeterminate at " +
                             std::to_string(max_precision) + " bits; widen the precision");
}

}  // namespace esym
