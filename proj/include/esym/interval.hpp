#pragma once

#include <string>

#include <mpfr.h>

#include "esym/rational.hpp"

namespace esym {

enum class Sign { Negative, Zero, Positive, Indeterminate };

std::string to_string(Sign s);

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint toward -inf and the upper toward +inf, so the true
/// value of an expression always lies inside its interval.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o) noexcept;
    ~Interval();

    static Interval point(double value, mpfr_prec_t precision);
    static Interval integer(long value, mpfr_prec_t precision);
    static Interval integer(const BigInt& value, mpfr_prec_t precision);
    static Interval rational(const Rat& value, mpfr_prec_t precision);
    /// Encloses a decimal literal such as "0.3" that has no exact binary form.
    static Interval decimal(const std::string& literal, mpfr_prec_t precision);
    static Interval euler_e(mpfr_prec_t precision);

    mpfr_prec_t precision() const { return prec_; }

    /// Endpoints rounded outward to double.
    double lower() const;
    double upper() const;
    double width() const { return upper() - lower(); }

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    Sign sign() const;
    bool certainly_positive() const { return sign() == Sign::Positive; }
    bool certainly_negative() const { return sign() == Sign::Negative; }
    bool contains(double value) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws std::domain_error when b straddles zero.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    friend Interval log(const Interval& a);
    friend Interval exp(const Interval& a);
    friend Interval sqrt(const Interval& a);
    /// a^b for a > 0, as exp(b log a).
    friend Interval pow(const Interval& a, const Interval& b);
    friend Interval pow(const Interval& a, unsigned long n);

    /// Interval hull.
    friend Interval hull(const Interval& a, const Interval& b);

    std::string str(int digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

/// a < b holds for every point of the two intervals.
bool certainly_less(const Interval& a, const Interval& b);

}  // namespace esym
