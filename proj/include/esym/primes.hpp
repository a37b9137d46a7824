#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "esym/interval.hpp"
#include "esym/rational.hpp"

namespace esym {

/// Sieve of Eratosthenes over [0, limit] with the ordered prime list.
/// Prime indices are 1-based: nth_prime(1) == 2.
class Sieve {
public:
    /// Throws std::domain_error for limit < 2.
    explicit Sieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    std::size_t count() const { return primes_.size(); }

    /// Throws std::out_of_range when x > limit.
    bool is_prime(std::uint64_t x) const;

    /// p_i; throws std::out_of_range for i == 0 or i beyond the sieve.
    std::uint64_t nth_prime(std::size_t i) const;

    /// pi(x) for integer x <= limit.
    std::uint64_t prime_count(std::uint64_t x) const;

    /// pi(floor(x)) for a rational x.
    std::uint64_t prime_count(const Rat& x) const;

    /// Smallest sieve prime dividing z (|z| > 1), searching primes <= bound.
    std::optional<std::uint64_t> smallest_prime_factor(const BigInt& z,
                                                       std::uint64_t bound) const;

private:
    std::uint64_t limit_;
    std::vector<bool> composite_;
    std::vector<std::uint64_t> primes_;
};

Sieve sieve_upto(std::uint64_t limit);

inline std::uint64_t nth_prime(const Sieve& s, std::size_t i) { return s.nth_prime(i); }
inline std::uint64_t prime_count(const Sieve& s, std::uint64_t x) { return s.prime_count(x); }

/// Enclosures of x / (log x - 1 -/+ (log x)^(-1/2)). Upper needs x >= 6,
/// lower needs x >= 59; violations throw std::domain_error.
Interval panaitopol_upper_enclosure(const Interval& x);
Interval panaitopol_lower_enclosure(const Interval& x);

/// Upper bound rounded up / lower bound rounded down.
double pi_upper_panaitopol(double x, mpfr_prec_t precision = 64);
double pi_lower_panaitopol(double x, mpfr_prec_t precision = 64);

enum class Bracket { Holds, Fails, Undecided };

/// Decides lower(x) < count < upper(x) with directed rounding, doubling the
/// precision (up to max_precision) while either side is undecided.
Bracket panaitopol_bracket(std::uint64_t x, std::uint64_t count, mpfr_prec_t precision = 64,
                           mpfr_prec_t max_precision = 1024);

/// Largest prime p with lo < p <= hi, p > exclude_min and p not dividing
/// avoid_divisor_of. Throws std::out_of_range when floor(hi) > limit.
std::optional<std::uint64_t> prime_in_interval(const Sieve& s, const Rat& lo, const Rat& hi,
                                               std::uint64_t exclude_min,
                                               std::uint64_t avoid_divisor_of);

struct GapCheckResult {
    std::uint64_t k = 0;
    std::size_t i_lo = 0;
    std::size_t i_hi = 0;
    bool all_pass = true;
    /// Indices i with k * p_{i+1} >= (k + 4) * p_i.
    std::vector<std::size_t> failures;
};

/// Checks k * p_{i+1} < (k + 4) * p_i for i in [i_lo, i_hi].
GapCheckResult gap_check(const Sieve& s, std::uint64_t k, std::size_t i_lo, std::size_t i_hi);

}  // namespace esym
