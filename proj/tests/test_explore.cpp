#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "esym/explore.hpp"
#include "esym/symfun.hpp"

using namespace esym;

namespace {

// Subset enumeration over the explicit family.
std::vector<ApHit> enumerate_hits(std::int64_t a, std::int64_t m, std::uint64_t n_max,
                                  std::uint64_t k_max) {
    std::vector<ApHit> out;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const auto fam = ReciprocalFamily::arithmetic(a, m, n);
        for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(k_max, n + 1); ++k) {
            const Rat v = esym_general(k, fam);
            if (v.is_integer()) out.push_back(ApHit{k, n, v.num()});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("harmonic progression") {
    const auto hits = explore_ap(1, 1, 6, 6);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == ApHit{1, 0, BigInt(1)});
    CHECK(hits[1] == ApHit{2, 2, BigInt(1)});
}

TEST_CASE("constant progression gives binomial coefficients") {
    const auto hits = explore_ap(1, 0, 4, 5);
    CHECK(hits.size() == 15);
    for (const auto& h : hits) {
        BigInt c;
        mpz_bin_uiui(c.get_mpz_t(), h.n + 1, h.k);
        CHECK(h.value == c);
    }
}

TEST_CASE("odd and other progressions match enumeration") {
    CHECK(explore_ap(3, 2, 8, 9).empty());
    CHECK(explore_ap(2, 1, 8, 9).empty());
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t m = 0; m <= 3; ++m) {
            CHECK(explore_ap(a, m, 9, 10) == enumerate_hits(a, m, 9, 10));
        }
    }
    CHECK(explore_ap(-7, 2, 2, 3) == enumerate_hits(-7, 2, 2, 3));
}

TEST_CASE("k_max truncates") {
    const auto hits = explore_ap(1, 0, 4, 2);
    for (const auto& h : hits) CHECK(h.k <= 2);
}

TEST_CASE("a zero term is rejected") {
    CHECK_THROWS_AS(explore_ap(2, -1, 5, 3), std::domain_error);
    CHECK_THROWS_AS(explore_ap(0, 1, 1, 1), std::domain_error);
    CHECK_NOTHROW(explore_ap(2, -1, 1, 2));
}
