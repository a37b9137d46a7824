#include <doctest.h>

#include <stdexcept>

#include "esym/serialize.hpp"
#include "esym/theorem.hpp"

using namespace esym;

namespace {

const Sieve& sieve() {
    static const Sieve s(10'000);
    return s;
}

}  // namespace

TEST_CASE("single n") {
    const auto r = verify_theorem(4, 4, sieve());
    CHECK(r.all_nonintegral);
    CHECK(r.certificates.size() == 4);
    CHECK(r.pair_count() == 4);
    REQUIRE(r.find(4, 4) != nullptr);
    const auto kind = r.find(4, 4)->kind();
    CHECK((kind == CertKind::Smallness || kind == CertKind::Direct));
    CHECK(r.find(1, 4)->kind() == CertKind::Harmonic);
    CHECK(r.find(5, 4) == nullptr);
}

TEST_CASE("4 <= n <= 30 uses every method and finds no integers") {
    const auto r = verify_theorem(4, 30, sieve());
    CHECK(r.all_nonintegral);
    CHECK(r.validated);
    CHECK(r.invalid.empty());
    CHECK(r.counterexamples.empty());
    CHECK(r.certificates.size() == r.pair_count());
    CHECK(r.count(CertKind::Harmonic) == 27);
    CHECK(r.count(CertKind::Smallness) > 0);
    CHECK(r.count(CertKind::Prime) > 0);
    CHECK(r.count(CertKind::Direct) > 0);
    for (std::uint64_t n = 4; n <= 30; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) CHECK(r.find(k, n) != nullptr);
    }
    CHECK(r.find(2, 26)->kind() == CertKind::Prime);
}

TEST_CASE("sharded runs match the sequential run") {
    TheoremOptions one;
    one.workers = 1;
    TheoremOptions three;
    three.workers = 3;
    auto a = to_json(verify_theorem(4, 120, sieve(), one));
    auto b = to_json(verify_theorem(4, 120, sieve(), three));
    a.erase("metadata");
    b.erase("metadata");
    CHECK(a.dump() == b.dump());
    CHECK(a.at("all_nonintegral").get<bool>());
}

TEST_CASE("every prime certificate up to n = 300 has v_p(S(k,n)) = -k") {
    const auto r = verify_theorem(4, 300, sieve());
    REQUIRE(r.all_nonintegral);
    std::uint64_t k_max = 0;
    for (const auto& c : r.certificates) {
        if (c.kind() == CertKind::Prime) k_max = std::max(k_max, c.k);
    }
    SymTable table(k_max);
    std::size_t checked = 0;
    for (const auto& c : r.certificates) {
        if (c.kind() != CertKind::Prime) continue;
        table.advance_to(c.n);
        const auto& w = std::get<PrimeWitness>(c.payload);
        CHECK(v_p(table.at(c.k), w.p).valuation == -static_cast<std::int64_t>(c.k));
        ++checked;
    }
    CHECK(checked == r.count(CertKind::Prime));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(verify_theorem(3, 10, sieve()), std::domain_error);
    CHECK_THROWS_AS(verify_theorem(10, 9, sieve()), std::domain_error);
    CHECK_THROWS_AS(verify_theorem(4, 20'000, sieve()), std::out_of_range);
}
