#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "esym/interval.hpp"
#include "esym/symfun.hpp"

using namespace esym;

namespace {

// Direct enumeration for the closed-form sums over {1, ..., top}.
BigInt enumerate_sum(unsigned arity, unsigned long top) {
    BigInt total = 0;
    if (arity == 1) {
        for (unsigned long i = 1; i <= top; ++i) total += i;
    } else if (arity == 2) {
        for (unsigned long i = 1; i <= top; ++i)
            for (unsigned long j = i + 1; j <= top; ++j) total += BigInt(i) * j;
    } else {
        for (unsigned long i = 1; i <= top; ++i)
            for (unsigned long j = i + 1; j <= top; ++j)
                for (unsigned long s = j + 1; s <= top; ++s) total += BigInt(i) * j * s;
    }
    return total;
}

}  // namespace

TEST_CASE("esym reproduces the small table") {
    CHECK(esym::esym(1, 1) == Rat(1));
    CHECK(esym::esym(1, 2) == Rat(3, 2));
    CHECK(esym::esym(2, 2) == Rat(1, 2));
    CHECK(esym::esym(1, 3) == Rat(11, 6));
    CHECK(esym::esym(2, 3) == Rat(1));
    CHECK(esym::esym(3, 3) == Rat(1, 6));
    CHECK(esym::esym(2, 4) == Rat(35, 24));
    CHECK(esym::esym(3, 4) == Rat(5, 12));
}

TEST_CASE("esym domain errors") {
    CHECK_THROWS_AS(esym::esym(0, 3), std::domain_error);
    CHECK_THROWS_AS(esym::esym(4, 3), std::domain_error);
    CHECK_THROWS_AS(esym_newton(5, 4), std::domain_error);
    CHECK_THROWS_AS(esym_bruteforce(0, 4), std::domain_error);
}

TEST_CASE("brute-force oracle") {
    CHECK(esym_bruteforce(2, 3) == Rat(1));
    CHECK(esym_bruteforce(5, 5) == Rat(1, 120));
    CHECK(esym_bruteforce(2, 4) == Rat(35, 24));
    CHECK_THROWS_AS(esym_bruteforce(2, 21), std::length_error);
    CHECK(esym_bruteforce(2, 21, 21) == esym::esym(2, 21));
}

TEST_CASE("Newton's identities") {
    CHECK(esym_newton(1, 2) == Rat(3, 2));
    CHECK(esym_newton(2, 4) == Rat(35, 24));
    for (std::uint64_t n = 1; n <= 40; ++n) CHECK(esym_newton(1, n) == harmonic(n));
    CHECK(esym_newton(7, 60) == esym::esym(7, 60));
}

TEST_CASE("three algorithms agree for n <= 12") {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            const Rat dp = esym::esym(k, n);
            CHECK(dp == esym_bruteforce(k, n));
            CHECK(dp == esym_newton(k, n));
        }
    }
}

TEST_CASE("esym_general") {
    const ReciprocalFamily fam({Rat(1, 2), Rat(1, 3), Rat(1, 6)}, "halves");
    CHECK(esym_general(2, fam) == Rat(11, 36));
    CHECK(esym_general(3, fam) == Rat(1, 36));
    CHECK(esym_general(1, ReciprocalFamily({Rat(-5, 7)}, "one")) == Rat(-5, 7));
    CHECK_THROWS_AS(esym_general(4, fam), std::domain_error);
    CHECK_THROWS_AS(ReciprocalFamily({Rat(1), Rat(0)}, "bad"), std::domain_error);
    CHECK_THROWS_AS(ReciprocalFamily::arithmetic(2, -1, 3), std::domain_error);
    for (std::uint64_t n = 1; n <= 15; ++n) {
        const auto h = ReciprocalFamily::harmonic(n);
        for (std::uint64_t k = 1; k <= n; ++k) CHECK(esym_general(k, h) == esym::esym(k, n));
    }
    // The AP with a = m = 1 is the harmonic family.
    CHECK(esym_general(2, ReciprocalFamily::arithmetic(1, 1, 2)) == Rat(1));
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == Rat(1));
    CHECK(harmonic(3) == Rat(11, 6));
    CHECK(harmonic(4) == Rat(25, 12));
    CHECK(harmonic(6) == Rat(49, 20));
    CHECK_THROWS_AS(harmonic(0), std::domain_error);
    Rat running;
    for (long n = 1; n <= 500; ++n) {
        running += Rat(1, n);
        if (n % 37 == 0 || n == 500) CHECK(harmonic(static_cast<std::uint64_t>(n)) == running);
    }
}

TEST_CASE("row edges: S(1,n) = H_n and S(n,n) = 1/n!") {
    SymTable table(300);
    for (std::uint64_t n = 1; n <= 300; ++n) {
        table.advance();
        REQUIRE(table.n() == n);
        CHECK(table.values().size() == n + 1);
        CHECK(table.at(0) == Rat(1));
        CHECK(table.at(n) == Rat(BigInt(1), factorial(n)));
        if (n % 25 == 0) CHECK(table.at(1) == harmonic(n));
        for (const auto& v : table.values()) CHECK(v.sign() > 0);
    }
    CHECK_THROWS_AS(table.at(301), std::domain_error);
    CHECK_THROWS_AS(table.advance_to(10), std::domain_error);
}

TEST_CASE("truncated table keeps only k <= k_max") {
    SymTable table(3);
    table.advance_to(10);
    CHECK(table.values().size() == 4);
    CHECK(table.at(3) == esym_bruteforce(3, 10));
    CHECK_THROWS_AS(table.at(4), std::domain_error);
}

TEST_CASE("closed sums match enumeration for 0 <= k <= 100") {
    CHECK(closed_sum_linear(1) == 3);
    CHECK(closed_sum_quadratic(1) == 11);
    CHECK(closed_sum_cubic(1) == 50);
    for (unsigned long k = 0; k <= 100; ++k) {
        CHECK(closed_sum_linear(k) == enumerate_sum(1, k + 1));
        CHECK(closed_sum_quadratic(k) == enumerate_sum(2, k + 2));
        CHECK(closed_sum_cubic(k) == enumerate_sum(3, k + 3));
    }
}

TEST_CASE("boundary values") {
    CHECK(boundary_value(3, 0) == Rat(1, 6));
    CHECK(boundary_value(2, 1) == Rat(1));
    CHECK(boundary_value(2, 2) == Rat(35, 24));
    CHECK_THROWS_AS(boundary_value(2, 4), std::domain_error);
    CHECK_THROWS_AS(boundary_value(0, 1), std::domain_error);
    for (std::uint64_t k = 1; k <= 30; ++k) {
        for (unsigned t = 0; t <= 3; ++t) CHECK(boundary_value(k, t) == esym::esym(k, k + t));
    }
}

TEST_CASE("smallness bound") {
    CHECK_FALSE(smallness_bound_holds(1, 2));
    CHECK(smallness_bound_holds(4, 4));
    CHECK_FALSE(smallness_bound_holds(2, 3));
    // Exhaustive against the unoptimised comparison.
    for (std::uint64_t n = 1; n <= 40; ++n) {
        const Rat h = harmonic(n);
        for (std::uint64_t k = 1; k <= n; ++k) {
            CHECK(smallness_bound_holds(k, h) == (pow(h, k) < Rat(factorial(k), BigInt(1))));
        }
    }
    // Beyond the exact limit the rounded (log n + 1)^k test takes over.
    CHECK(smallness_bound_holds(40, 2'000'000, 1'000'000));
    CHECK_FALSE(smallness_bound_holds(2, 2'000'000, 1'000'000));
}

TEST_CASE("smallness bound at n = 300000, k = 38") {
    CHECK(smallness_bound_holds(38, 300000));
}

TEST_CASE("harmonic upper bound is a bound") {
    for (std::uint64_t n : {1, 2, 10, 100, 1751}) {
        const Rat h = harmonic(n);
        const Rat u = harmonic_upper_bound(h);
        CHECK(h < u);
        CHECK(u - h <= Rat(BigInt(1), BigInt(1) << 32));
    }
}

TEST_CASE("H_n < log n + 1 with directed rounding") {
    constexpr mpfr_prec_t prec = 64;
    const Interval one = Interval::integer(1, prec);
    for (std::uint64_t n = 2; n <= 20000; n = n < 100 ? n + 1 : n * 11 / 10) {
        const Interval h = Interval::rational(harmonic(n), prec);
        const Interval bound = log(Interval::integer(static_cast<long>(n), prec)) + one;
        CHECK(certainly_less(h, bound));
    }
    // Large n: enclose H_n by summing outward-rounded reciprocals.
    for (std::uint64_t n : {100'000ULL, 1'000'000ULL}) {
        mpfr_t sum, term;
        mpfr_init2(sum, prec);
        mpfr_init2(term, prec);
        mpfr_set_ui(sum, 0, MPFR_RNDU);
        for (std::uint64_t i = 1; i <= n; ++i) {
            mpfr_set_ui(term, i, MPFR_RNDD);  // exact for i < 2^64
            mpfr_ui_div(term, 1, term, MPFR_RNDU);
            mpfr_add(sum, sum, term, MPFR_RNDU);
        }
        Interval bound = log(Interval::integer(static_cast<long>(n), prec)) + one;
        CHECK(mpfr_less_p(sum, bound.lo()));
        mpfr_clear(sum);
        mpfr_clear(term);
    }
}
