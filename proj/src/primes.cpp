#include "esym/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace esym {

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
    composite_.assign(limit + 1, false);
    composite_[0] = composite_[1] = true;
    for (std::uint64_t i = 2; i <= limit / i; ++i) {
        if (composite_[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite_[i]) primes_.push_back(i);
    }
}

bool Sieve::is_prime(std::uint64_t x) const {
    if (x > limit_) {
        throw std::out_of_range(std::to_string(x) + " beyond sieve limit " + std::to_string(limit_));
    }
    return !composite_[x];
}

std::uint64_t Sieve::nth_prime(std::size_t i) const {
    if (i == 0 || i > primes_.size()) {
        throw std::out_of_range("prime index " + std::to_string(i) + " outside sieve (holds " +
                                std::to_string(primes_.size()) + " primes)");
    }
    return primes_[i - 1];
}

std::uint64_t Sieve::prime_count(std::uint64_t x) const {
    if (x > limit_) {
        throw std::out_of_range("pi(" + std::to_string(x) + ") beyond sieve limit " +
                                std::to_string(limit_));
    }
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                      primes_.begin());
}

std::uint64_t Sieve::prime_count(const Rat& x) const {
    if (x.sign() < 0) return 0;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    if (!fl.fits_ulong_p() || fl.get_ui() > limit_) {
        throw std::out_of_range("pi(" + x.to_string() + ") beyond sieve limit");
    }
    return prime_count(static_cast<std::uint64_t>(fl.get_ui()));
}

std::optional<std::uint64_t> Sieve::smallest_prime_factor(const BigInt& z,
                                                          std::uint64_t bound) const {
    for (const auto p : primes_) {
        if (p > bound) break;
        if (mpz_divisible_ui_p(z.get_mpz_t(), p)) return p;
    }
    return std::nullopt;
}

Sieve sieve_upto(std::uint64_t limit) { return Sieve(limit); }

namespace {

// x / (log x - 1 + sign * (log x)^(-1/2))
Interval panaitopol(const Interval& x, int sign) {
    const auto prec = x.precision();
    const Interval lx = log(x);
    const Interval correction = Interval::integer(1, prec) / sqrt(lx);
    const Interval one = Interval::integer(1, prec);
    const Interval denom = sign < 0 ? lx - one - correction : lx - one + correction;
    return x / denom;
}

}  // namespace

Interval panaitopol_upper_enclosure(const Interval& x) {
    if (x.lower() < 6.0) throw std::domain_error("Panaitopol upper bound needs x >= 6");
    return panaitopol(x, -1);
}

Interval panaitopol_lower_enclosure(const Interval& x) {
    if (x.lower() < 59.0) throw std::domain_error("Panaitopol lower bound needs x >= 59");
    return panaitopol(x, +1);
}

double pi_upper_panaitopol(double x, mpfr_prec_t precision) {
    return panaitopol_upper_enclosure(Interval::point(x, precision)).upper();
}

double pi_lower_panaitopol(double x, mpfr_prec_t precision) {
    return panaitopol_lower_enclosure(Interval::point(x, precision)).lower();
}

Bracket panaitopol_bracket(std::uint64_t x, std::uint64_t count, mpfr_prec_t precision,
                           mpfr_prec_t max_precision) {
    for (auto prec = precision; prec <= max_precision; prec *= 2) {
        const Interval xi = Interval::integer(BigInt(static_cast<unsigned long>(x)), prec);
        const Interval c = Interval::integer(BigInt(static_cast<unsigned long>(count)), prec);
        const Interval lo = panaitopol_lower_enclosure(xi);
        const Interval hi = panaitopol_upper_enclosure(xi);
        const bool below = certainly_less(lo, c);
        const bool above = certainly_less(c, hi);
        if (below && above) return Bracket::Holds;
        // count <= lower or upper <= count, decided for every point
        const bool below_fails = mpfr_lessequal_p(c.hi(), lo.lo()) != 0;
        const bool above_fails = mpfr_lessequal_p(hi.hi(), c.lo()) != 0;
        if (below_fails || above_fails) return Bracket::Fails;
    }
    return Bracket::Undecided;
}

std::optional<std::uint64_t> prime_in_interval(const Sieve& s, const Rat& lo, const Rat& hi,
                                               std::uint64_t exclude_min,
                                               std::uint64_t avoid_divisor_of) {
    if (!(lo < hi)) throw std::domain_error("prime_in_interval needs lo < hi");
    if (hi.sign() <= 0) return std::nullopt;
    const std::uint64_t top = s.prime_count(hi);  // throws when beyond the sieve
    const auto& primes = s.primes();
    for (std::uint64_t idx = top; idx > 0; --idx) {
        const std::uint64_t p = primes[idx - 1];
        if (!(Rat(static_cast<long>(p)) > lo)) break;
        if (p <= exclude_min) break;
        if (avoid_divisor_of % p == 0) continue;
        return p;
    }
    return std::nullopt;
}

GapCheckResult gap_check(const Sieve& s, std::uint64_t k, std::size_t i_lo, std::size_t i_hi) {
    if (i_lo == 0 || i_lo > i_hi) throw std::domain_error("gap_check needs 1 <= i_lo <= i_hi");
    if (i_hi + 1 > s.count()) {
        throw std::out_of_range("gap_check needs p_" + std::to_string(i_hi + 1) +
                                " but the sieve holds " + std::to_string(s.count()) + " primes");
    }
    GapCheckResult r{k, i_lo, i_hi, true, {}};
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
        const auto lhs = static_cast<unsigned __int128>(k) * s.nth_prime(i + 1);
        const auto rhs = static_cast<unsigned __int128>(k + 4) * s.nth_prime(i);
        if (!(lhs < rhs)) r.failures.push_back(i);
    }
    r.all_pass = r.failures.empty();
    return r;
}

}  // namespace esym
