#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace esym {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den);
    explicit Rat(mpq_class q);

    /// Parses "a" or "a/b".
    static Rat parse(const std::string& text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rat reciprocal() const;

    /// Always "num/den", including integers ("1/1").
    std::string to_string() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

Rat rat_add(const Rat& a, const Rat& b);
Rat rat_mul(const Rat& a, const Rat& b);
bool is_integer(const Rat& q);

/// Integer power with non-negative exponent.
Rat pow(const Rat& base, unsigned long exponent);

/// p-adic valuation of a rational. `is_finite` is false only for zero.
struct PadicVal {
    std::uint64_t prime = 2;
    std::int64_t valuation = 0;
    bool is_finite = true;

    friend bool operator==(const PadicVal&, const PadicVal&) = default;
};

/// Deterministic trial-division primality, adequate for the 64-bit primes
/// this library works with.
bool is_prime_u64(std::uint64_t p);

/// Throws std::invalid_argument when p is not prime.
PadicVal v_p(const Rat& q, std::uint64_t p);

/// Exponent of p in a nonzero integer.
std::int64_t v_p(const BigInt& z, std::uint64_t p);

BigInt factorial(unsigned long k);

std::string to_decimal(const BigInt& z);
BigInt parse_bigint(const std::string& text);

}  // namespace esym
