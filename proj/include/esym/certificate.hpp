#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "esym/primes.hpp"
#include "esym/rational.hpp"
#include "esym/symfun.hpp"

namespace esym {

enum class CertKind { Harmonic, Smallness, Prime, Direct };

std::string_view kind_name(CertKind kind);
std::optional<CertKind> parse_kind(std::string_view name);

/// k = 1: the largest power of two r <= n is the only index with maximal
/// 2-adic valuation, so v_2(H_n) = -log2(r).
struct HarmonicWitness {
    std::uint64_t power_of_two = 0;
    std::int64_t valuation = 0;
};

/// H_n <= harmonic_bound and harmonic_bound^k < k!, hence
/// 0 < S(k,n) <= H_n^k / k! < 1.
struct SmallnessWitness {
    Rat harmonic_bound;
};

/// A prime p with n/(k+4) < p <= n/k, p > k+4, p not dividing 3k+8.
/// The multiples of p up to n are p, 2p, ..., (k+t)p, so
///   S(k,n) = S(k,k+t) / p^k + b / (p^(k-1) c),  p not dividing c,
/// and v_p(S(k,k+t)) = 0 gives v_p(S(k,n)) = -k.
struct PrimeWitness {
    std::uint64_t p = 0;
    unsigned t = 0;
    Rat boundary;  // S(k, k+t)
    std::int64_t valuation = 0;
    bool p_above_k_plus_4 = false;
    bool p_coprime_to_3k_plus_8 = false;
    bool p_in_interval = false;
    bool p_squared_above_n = false;
};

/// S(k,n) computed outright; `prime` divides the reduced denominator.
/// The denominator itself is kept only within the digit budget.
struct DirectWitness {
    std::optional<BigInt> denominator;
    std::size_t denominator_digits = 0;
    std::uint64_t prime = 0;
    std::int64_t valuation = 0;
};

using Witness = std::variant<HarmonicWitness, SmallnessWitness, PrimeWitness, DirectWitness>;

/// Proof object asserting S(k,n) is not an integer.
struct Certificate {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    Witness payload;

    CertKind kind() const { return static_cast<CertKind>(payload.index()); }
};

/// An (k,n) where S(k,n) turned out to be an integer.
struct Counterexample {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    Rat value;
};

using DirectOutcome = std::variant<Certificate, Counterexample>;

inline constexpr std::size_t kDefaultDigitBudget = 200;

/// Throws std::domain_error for n < 2.
Certificate certify_harmonic(std::uint64_t n);

/// Refuses (nullopt) when H_n^k < k! cannot be shown.
std::optional<Certificate> certify_smallness(std::uint64_t k, std::uint64_t n);
std::optional<Certificate> certify_smallness(std::uint64_t k, std::uint64_t n,
                                             const Rat& harmonic_n);

/// nullopt when no qualifying prime exists. Throws std::logic_error if the
/// boundary value turns out divisible by p.
std::optional<Certificate> certify_prime(std::uint64_t k, std::uint64_t n, const Sieve& sieve);

DirectOutcome certify_direct(std::uint64_t k, std::uint64_t n, const Sieve& sieve,
                             std::size_t digit_budget = kDefaultDigitBudget);
/// Same, with S(k,n) supplied by the caller.
DirectOutcome certify_direct(std::uint64_t k, std::uint64_t n, const Rat& value,
                             const Sieve& sieve, std::size_t digit_budget = kDefaultDigitBudget);

/// The dispatch used by the theorem driver for one pair: Harmonic,
/// Smallness, Prime, then Direct.
DirectOutcome certify(std::uint64_t k, std::uint64_t n, const Sieve& sieve,
                      std::size_t digit_budget = kDefaultDigitBudget);

/// Whether Smallness is worth attempting: the rounded-down value of
/// e(log n + 1) is <= k.
bool smallness_threshold_reached(std::uint64_t k, std::uint64_t n, mpfr_prec_t precision = 64);

struct ValidatorOptions {
    /// Harmonic certificates are also checked against exact v_2(H_n) up to here.
    std::uint64_t harmonic_exact_limit = 10'000;
};

/// Re-checks certificates from their payload alone, using only exact
/// arithmetic, the symmetric-function engine and the sieve. Caches H_n and
/// one recurrence table so batches ordered by n are cheap.
class Validator {
public:
    explicit Validator(const Sieve& sieve, ValidatorOptions options = {});

    bool operator()(const Certificate& c);

    /// Indices of certificates that fail. Direct certificates are processed
    /// in increasing n so the recurrence runs once.
    std::vector<std::size_t> failures(std::span<const Certificate> certs);

private:
    bool check(const Certificate& c, const HarmonicWitness& w);
    bool check(const Certificate& c, const SmallnessWitness& w);
    bool check(const Certificate& c, const PrimeWitness& w);
    bool check(const Certificate& c, const DirectWitness& w);

    const Rat& harmonic_of(std::uint64_t n);
    const Rat& esym_of(std::uint64_t k, std::uint64_t n);

    const Sieve& sieve_;
    ValidatorOptions options_;
    std::map<std::uint64_t, Rat> harmonic_cache_;
    std::optional<SymTable> table_;
};

bool validate(const Certificate& c, const Sieve& sieve);

}  // namespace esym
