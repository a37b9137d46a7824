#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esym/rational.hpp"

namespace esym {

/// One row S(0..k_max, n) of the elementary symmetric functions of
/// 1, 1/2, ..., 1/n. Advancing to row n+1 uses
///   S(k, n+1) = S(k, n) + S(k-1, n) / (n+1).
class SymTable {
public:
    /// Row n = 0 (only S(0,0) = 1), keeping entries up to k_max.
    explicit SymTable(std::size_t k_max);

    std::uint64_t n() const { return n_; }
    std::size_t k_max() const { return k_max_; }

    /// Entries S(0, n) .. S(min(n, k_max), n).
    std::span<const Rat> values() const { return values_; }

    /// S(k, n); throws std::domain_error for k > n or k > k_max.
    const Rat& at(std::size_t k) const;

    void advance();
    void advance_to(std::uint64_t target_n);

private:
    std::size_t k_max_;
    std::uint64_t n_ = 0;
    std::vector<Rat> values_;
};

/// Nonzero values whose elementary symmetric functions are taken.
struct ReciprocalFamily {
    std::vector<Rat> terms;
    std::string description;

    ReciprocalFamily(std::vector<Rat> terms, std::string description);

    /// 1/a, 1/(a+m), ..., 1/(a+nm). Throws std::domain_error on a zero term.
    static ReciprocalFamily arithmetic(std::int64_t a, std::int64_t m, std::uint64_t n);
    /// 1, 1/2, ..., 1/n.
    static ReciprocalFamily harmonic(std::uint64_t n);
};

/// Exact S(k, n) by the row recurrence. Requires 1 <= k <= n.
Rat esym(std::uint64_t k, std::uint64_t n);

inline constexpr std::uint64_t kDefaultBruteforceCap = 20;

/// Sum over all k-subsets; refuses (std::length_error) when n > cap.
Rat esym_bruteforce(std::uint64_t k, std::uint64_t n, std::uint64_t cap = kDefaultBruteforceCap);

/// S(k, n) from the power sums of 1, 1/2, ..., 1/n via Newton's identities.
Rat esym_newton(std::uint64_t k, std::uint64_t n);

/// k-th elementary symmetric function of an arbitrary family.
Rat esym_general(std::uint64_t k, const ReciprocalFamily& family);

/// H_n = 1 + 1/2 + ... + 1/n by binary splitting.
Rat harmonic(std::uint64_t n);

/// Closed forms for sums over {1, ..., k+d}.
BigInt closed_sum_linear(std::uint64_t k);     // sum i,        i <= k+1
BigInt closed_sum_quadratic(std::uint64_t k);  // sum ij,   i<j <= k+2
BigInt closed_sum_cubic(std::uint64_t k);      // sum ijs, i<j<s <= k+3

/// S(k, k+t) for t in 0..3 from the closed forms.
Rat boundary_value(std::uint64_t k, unsigned t);

/// Rational upper bound U >= H_n with a power-of-two denominator,
/// U = (floor(H_n * 2^bits) + 1) / 2^bits.
Rat harmonic_upper_bound(const Rat& harmonic_n, unsigned bits = 32);

/// Exactly decides H_n^k < k! (which forces 0 < S(k,n) < 1).
/// Exact for n <= exact_limit; beyond that (log n + 1)^k < k! is checked
/// with directed rounding, which can only under-report.
bool smallness_bound_holds(std::uint64_t k, std::uint64_t n,
                           std::uint64_t exact_limit = 1'000'000);

/// Same decision given H_n already computed.
bool smallness_bound_holds(std::uint64_t k, const Rat& harmonic_n);

/// U^k < k! as an exact integer comparison.
bool power_below_factorial(const Rat& base, std::uint64_t k);

}  // namespace esym
