#include "esym/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace esym {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
        case Sign::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Interval::Interval(mpfr_prec_t precision) : prec_(precision) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::point(double value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_d(r.lo_, value, MPFR_RNDD);
    mpfr_set_d(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::integer(long value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    return r;
}

Interval Interval::integer(const BigInt& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::rational(const Rat& value, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_, value.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::decimal(const std::string& literal, mpfr_prec_t precision) {
    Interval r(precision);
    if (mpfr_set_str(r.lo_, literal.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, literal.c_str(), 10, MPFR_RNDU) != 0) {
        throw std::invalid_argument("bad decimal literal: " + literal);
    }
    return r;
}

Interval Interval::euler_e(mpfr_prec_t precision) {
    Interval one = integer(1, precision);
    return exp(one);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

Sign Interval::sign() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) return Sign::Indeterminate;
    if (mpfr_sgn(lo_) > 0) return Sign::Positive;
    if (mpfr_sgn(hi_) < 0) return Sign::Negative;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::Zero;
    return Sign::Indeterminate;
}

bool Interval::contains(double value) const {
    return mpfr_cmp_d(lo_, value) <= 0 && mpfr_cmp_d(hi_, value) >= 0;
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.sign() != Sign::Positive && b.sign() != Sign::Negative) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    Interval inv(b.prec_);
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("interval log of non-positive value");
    Interval r(a.prec_);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.prec_);
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("interval sqrt of negative value");
    Interval r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval pow(const Interval& a, const Interval& b) { return exp(b * log(a)); }

Interval pow(const Interval& a, unsigned long n) {
    if (mpfr_sgn(a.lo_) >= 0) {
        Interval r(a.prec_);
        mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
        return r;
    }
    Interval r = Interval::integer(1, a.prec_);
    for (unsigned long i = 0; i < n; ++i) r = r * a;
    return r;
}

Interval hull(const Interval& a, const Interval& b) {
    Interval r(joint(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

std::string Interval::str(int digits) const {
    auto fmt = [digits](const mpfr_t& x, mpfr_rnd_t rnd) {
        char* buf = nullptr;
        const std::string spec = "%." + std::to_string(digits) + (rnd == MPFR_RNDD ? "RDg" : "RUg");
        mpfr_asprintf(&buf, spec.c_str(), x);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    };
    return "[" + fmt(lo_, MPFR_RNDD) + ", " + fmt(hi_, MPFR_RNDU) + "]";
}

bool certainly_less(const Interval& a, const Interval& b) {
    return mpfr_less_p(a.hi(), b.lo()) != 0;
}

}  // namespace esym
