#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "esym/certificate.hpp"

namespace esym {

struct TheoremOptions {
    unsigned workers = 1;
    bool validate = true;
    std::size_t digit_budget = kDefaultDigitBudget;
};

/// Certificates for every 1 <= k <= n over an n-range.
struct TheoremReport {
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::string k_policy;
    /// Sorted by (n, k).
    std::vector<Certificate> certificates;
    std::array<std::size_t, 4> method_counts{};  // indexed by CertKind
    std::vector<Counterexample> counterexamples;
    /// (k, n) pairs whose certificate failed re-validation.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> invalid;
    bool validated = false;
    bool all_nonintegral = false;
    unsigned workers = 1;
    std::chrono::duration<double> elapsed{};

    std::size_t count(CertKind kind) const { return method_counts[static_cast<std::size_t>(kind)]; }
    std::size_t pair_count() const;
    const Certificate* find(std::uint64_t k, std::uint64_t n) const;
};

/// Certifies every pair with n_lo <= n <= n_hi. Requires 1 <= n_lo <= n_hi
/// <= sieve.limit(); the n-range is split into contiguous shards, one
/// recurrence table per worker.
TheoremReport verify_theorem(std::uint64_t n_lo, std::uint64_t n_hi, const Sieve& sieve,
                             const TheoremOptions& options = {});

}  // namespace esym
