#pragma once

#include <cstdint>
#include <vector>

#include "esym/rational.hpp"

namespace esym {

struct ApHit {
    std::uint64_t k = 0;
    std::uint64_t n = 0;  // terms are i = 0..n
    BigInt value;

    friend bool operator==(const ApHit&, const ApHit&) = default;
};

/// Every (k, n) with k <= k_max, n <= n_max where the k-th elementary
/// symmetric function of 1/a, 1/(a+m), ..., 1/(a+nm) is an integer.
/// Throws std::domain_error when some a + im is zero.
std::vector<ApHit> explore_ap(std::int64_t a, std::int64_t m, std::uint64_t n_max,
                              std::uint64_t k_max);

}  // namespace esym
