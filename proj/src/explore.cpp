#include "esym/explore.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace esym {

std::vector<ApHit> explore_ap(std::int64_t a, std::int64_t m, std::uint64_t n_max,
                              std::uint64_t k_max) {
    for (std::uint64_t i = 0; i <= n_max; ++i) {
        if (BigInt(static_cast<long>(a)) + BigInt(static_cast<long>(m)) * static_cast<unsigned long>(i) == 0) {
            throw std::domain_error("arithmetic progression term a+im is zero at i=" +
                                    std::to_string(i));
        }
    }
    std::vector<ApHit> hits;
    std::vector<Rat> row{Rat(1)};  // e_0..e_min(n+1,k_max)
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const BigInt denom = BigInt(static_cast<long>(a)) + BigInt(static_cast<long>(m)) * static_cast<unsigned long>(n);
        const Rat term(BigInt(1), denom);
        if (row.size() <= k_max) row.emplace_back(0);
        for (std::size_t j = row.size() - 1; j >= 1; --j) row[j] += term * row[j - 1];
        for (std::size_t j = 1; j < row.size(); ++j) {
            if (row[j].is_integer()) hits.push_back(ApHit{j, n, row[j].num()});
        }
    }
    return hits;
}

}  // namespace esym
