#include <doctest.h>

#include <stdexcept>

#include "esym/certificate.hpp"

using namespace esym;

namespace {

const Sieve& sieve() {
    static const Sieve s(100'000);
    return s;
}

template <class W>
const W& witness(const Certificate& c) {
    return std::get<W>(c.payload);
}

}  // namespace

TEST_CASE("harmonic certificates") {
    const auto c2 = certify_harmonic(2);
    CHECK(c2.kind() == CertKind::Harmonic);
    CHECK(witness<HarmonicWitness>(c2).power_of_two == 2);
    CHECK(witness<HarmonicWitness>(c2).valuation == -1);
    CHECK(v_p(harmonic(2), 2).valuation == -1);

    CHECK(witness<HarmonicWitness>(certify_harmonic(4)).valuation == -2);
    CHECK(v_p(harmonic(4), 2).valuation == -2);
    CHECK(witness<HarmonicWitness>(certify_harmonic(6)).power_of_two == 4);
    CHECK(witness<HarmonicWitness>(certify_harmonic(6)).valuation == -2);
    CHECK(v_p(Rat(49, 20), 2).valuation == -2);

    CHECK_THROWS_AS(certify_harmonic(1), std::domain_error);
    CHECK(validate(c2, sieve()));
}

TEST_CASE("harmonic witness matches v_2(H_n) up to 10^4") {
    Rat h(1);
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        h += Rat(1L, static_cast<long>(n));
        const auto c = certify_harmonic(n);
        CHECK(witness<HarmonicWitness>(c).valuation == v_p(h, 2).valuation);
    }
}

TEST_CASE("smallness certificates") {
    CHECK(certify_smallness(4, 4).has_value());
    CHECK_FALSE(certify_smallness(2, 3).has_value());
    CHECK_FALSE(certify_smallness(1, 2).has_value());
    const auto big = certify_smallness(38, 300000);
    REQUIRE(big.has_value());
    CHECK(big->kind() == CertKind::Smallness);
    CHECK(witness<SmallnessWitness>(*big).harmonic_bound > Rat(13));
}

TEST_CASE("smallness is conservative: S(k,n) < 1 whenever issued, n <= 500") {
    SymTable table(500);
    Rat h;
    std::size_t issued = 0;
    for (std::uint64_t n = 1; n <= 500; ++n) {
        table.advance();
        h += Rat(1L, static_cast<long>(n));
        for (std::uint64_t k = 1; k <= n; k += (n > 100 ? 3 : 1)) {
            if (certify_smallness(k, n, h)) {
                ++issued;
                CHECK(table.at(k) < Rat(1));
                CHECK(table.at(k).sign() > 0);
            }
        }
    }
    CHECK(issued > 10000);
}

TEST_CASE("prime certificates") {
    const auto c = certify_prime(2, 26, sieve());
    REQUIRE(c.has_value());
    const auto& w = witness<PrimeWitness>(*c);
    CHECK(w.p == 13);
    CHECK(w.t == 0);
    CHECK(w.boundary == Rat(1, 2));
    CHECK(w.valuation == -2);
    CHECK(v_p(w.boundary, 13).valuation == 0);
    CHECK(v_p(esym::esym(2, 26), 13).valuation == -2);
    CHECK_FALSE(is_integer(esym::esym(2, 26)));

    CHECK_FALSE(certify_prime(2, 20, sieve()).has_value());
    CHECK_THROWS_AS(certify_prime(1, 20, sieve()), std::domain_error);
    CHECK_THROWS_AS(certify_prime(5, 4, sieve()), std::domain_error);
}

TEST_CASE("prime certificates carry the exact p-adic valuation, n <= 400") {
    std::size_t checked = 0;
    for (std::uint64_t k = 2; k <= 12; ++k) {
        SymTable table(k);
        for (std::uint64_t n = k; n <= 400; ++n) {
            table.advance_to(n);
            const auto c = certify_prime(k, n, sieve());
            if (!c) continue;
            const auto& w = witness<PrimeWitness>(*c);
            CHECK(w.p * w.p > n);
            CHECK(w.p > k + 4);
            CHECK((3 * k + 8) % w.p != 0);
            CHECK(w.p * (k + w.t) <= n);
            CHECK(n < w.p * (k + w.t + 1));
            CHECK(v_p(table.at(k), w.p).valuation == -static_cast<std::int64_t>(k));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("direct certificates") {
    const auto cex = certify_direct(2, 3, sieve());
    REQUIRE(std::holds_alternative<Counterexample>(cex));
    CHECK(std::get<Counterexample>(cex).value == Rat(1));

    const auto c34 = certify_direct(3, 4, sieve());
    REQUIRE(std::holds_alternative<Certificate>(c34));
    CHECK(*witness<DirectWitness>(std::get<Certificate>(c34)).denominator > 1);

    const auto c24 = std::get<Certificate>(certify_direct(2, 4, sieve()));
    const auto& w = witness<DirectWitness>(c24);
    CHECK(*w.denominator == 24);
    CHECK(w.denominator_digits == 2);
    CHECK(w.prime == 2);
    CHECK(w.valuation == -3);

    const auto trimmed = std::get<Certificate>(certify_direct(20, 60, sieve(), 5));
    CHECK_FALSE(witness<DirectWitness>(trimmed).denominator.has_value());
    CHECK(witness<DirectWitness>(trimmed).denominator_digits > 5);
    CHECK(validate(trimmed, sieve()));
}

TEST_CASE("no counterexamples for 4 <= n <= 60") {
    for (std::uint64_t n = 4; n <= 60; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            CHECK(std::holds_alternative<Certificate>(certify_direct(k, n, sieve())));
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(std::holds_alternative<Counterexample>(certify(1, 1, sieve())));
    CHECK(std::holds_alternative<Counterexample>(certify(2, 3, sieve())));
    CHECK(std::get<Certificate>(certify(1, 100, sieve())).kind() == CertKind::Harmonic);
    CHECK(std::get<Certificate>(certify(2, 26, sieve())).kind() == CertKind::Prime);
    const auto c44 = std::get<Certificate>(certify(4, 4, sieve()));
    CHECK((c44.kind() == CertKind::Smallness || c44.kind() == CertKind::Direct));
    CHECK(std::get<Certificate>(certify(100, 120, sieve())).kind() == CertKind::Smallness);
    CHECK(std::get<Certificate>(certify(2, 20, sieve())).kind() == CertKind::Direct);
    CHECK_FALSE(smallness_threshold_reached(6, 4));
    CHECK(smallness_threshold_reached(7, 4));
}

TEST_CASE("validate accepts genuine and rejects tampered certificates") {
    const auto genuine = *certify_prime(2, 26, sieve());
    CHECK(validate(genuine, sieve()));

    // 11 also satisfies every condition for (2, 26): 22 <= 26 < 66, 11 > 6,
    // 11 does not divide 14, 121 > 26, and t stays 0.
    Certificate other = genuine;
    std::get<PrimeWitness>(other.payload).p = 11;
    CHECK(validate(other, sieve()));

    Certificate seven = genuine;
    std::get<PrimeWitness>(seven.payload).p = 7;  // 7 | 14
    CHECK_FALSE(validate(seven, sieve()));

    Certificate bad_t = genuine;
    std::get<PrimeWitness>(bad_t.payload).t = 1;
    CHECK_FALSE(validate(bad_t, sieve()));

    Certificate bad_v = genuine;
    std::get<PrimeWitness>(bad_v.payload).valuation = -1;
    CHECK_FALSE(validate(bad_v, sieve()));

    Certificate bad_boundary = genuine;
    std::get<PrimeWitness>(bad_boundary.payload).boundary = Rat(1, 3);
    CHECK_FALSE(validate(bad_boundary, sieve()));

    Certificate bad_flag = genuine;
    std::get<PrimeWitness>(bad_flag.payload).p_squared_above_n = false;
    CHECK_FALSE(validate(bad_flag, sieve()));

    Certificate composite = genuine;
    std::get<PrimeWitness>(composite.payload).p = 9;
    CHECK_FALSE(validate(composite, sieve()));

    Certificate harmonic_bad = certify_harmonic(6);
    std::get<HarmonicWitness>(harmonic_bad.payload).power_of_two = 2;
    CHECK_FALSE(validate(harmonic_bad, sieve()));
    CHECK(validate(certify_harmonic(2), sieve()));

    Certificate small = *certify_smallness(4, 4);
    CHECK(validate(small, sieve()));
    std::get<SmallnessWitness>(small.payload).harmonic_bound = Rat(2);  // H_4 = 25/12 > 2
    CHECK_FALSE(validate(small, sieve()));
    Certificate loose = *certify_smallness(4, 4);
    std::get<SmallnessWitness>(loose.payload).harmonic_bound = Rat(3);  // 81 > 24
    CHECK_FALSE(validate(loose, sieve()));

    Certificate direct = std::get<Certificate>(certify_direct(2, 4, sieve()));
    CHECK(validate(direct, sieve()));
    Certificate via3 = direct;
    std::get<DirectWitness>(via3.payload).prime = 3;
    std::get<DirectWitness>(via3.payload).valuation = -1;
    CHECK(validate(via3, sieve()));
    Certificate wrong_den = direct;
    std::get<DirectWitness>(wrong_den.payload).denominator = BigInt(12);
    CHECK_FALSE(validate(wrong_den, sieve()));
    Certificate wrong_prime = direct;
    std::get<DirectWitness>(wrong_prime.payload).prime = 5;
    CHECK_FALSE(validate(wrong_prime, sieve()));

    Certificate swapped = genuine;
    swapped.k = 3;
    CHECK_FALSE(validate(swapped, sieve()));
}

TEST_CASE("batch validation handles unordered direct certificates") {
    std::vector<Certificate> certs;
    for (std::uint64_t n : {40, 12, 30, 5}) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            certs.push_back(std::get<Certificate>(certify_direct(k, n, sieve())));
        }
    }
    certs.push_back(certify_harmonic(9));
    Certificate broken = certs[3];
    std::get<DirectWitness>(broken.payload).valuation += 1;
    certs.push_back(broken);

    Validator v(sieve());
    const auto bad = v.failures(certs);
    REQUIRE(bad.size() == 1);
    CHECK(bad.front() == certs.size() - 1);
    // A second batch on the same validator rewinds the table as needed.
    CHECK(v.failures(std::span(certs).first(10)).empty());
}
