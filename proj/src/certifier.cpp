#include <bit>
#include <stdexcept>
#include <string>

#include "esym/certificate.hpp"
#include "esym/interval.hpp"

namespace esym {

std::string_view kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::Harmonic: return "harmonic";
        case CertKind::Smallness: return "smallness";
        case CertKind::Prime: return "prime";
        case CertKind::Direct: return "direct";
    }
    return "unknown";
}

std::optional<CertKind> parse_kind(std::string_view name) {
    for (auto kind : {CertKind::Harmonic, CertKind::Smallness, CertKind::Prime, CertKind::Direct}) {
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

Certificate certify_harmonic(std::uint64_t n) {
    if (n < 2) throw std::domain_error("harmonic certificate needs n >= 2 (H_1 = 1)");
    const std::uint64_t r = std::bit_floor(n);
    return Certificate{1, n, HarmonicWitness{r, -static_cast<std::int64_t>(std::countr_zero(r))}};
}

std::optional<Certificate> certify_smallness(std::uint64_t k, std::uint64_t n,
                                             const Rat& harmonic_n) {
    if (k == 0 || k > n) throw std::domain_error("certify_smallness needs 1 <= k <= n");
    Rat bound = harmonic_upper_bound(harmonic_n);
    if (power_below_factorial(bound, k)) return Certificate{k, n, SmallnessWitness{std::move(bound)}};
    if (power_below_factorial(harmonic_n, k)) return Certificate{k, n, SmallnessWitness{harmonic_n}};
    return std::nullopt;
}

std::optional<Certificate> certify_smallness(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || k > n) throw std::domain_error("certify_smallness needs 1 <= k <= n");
    return certify_smallness(k, n, harmonic(n));
}

std::optional<Certificate> certify_prime(std::uint64_t k, std::uint64_t n, const Sieve& sieve) {
    if (k < 2 || n < k) throw std::domain_error("certify_prime needs 2 <= k <= n");
    const auto nl = static_cast<long>(n);
    const auto kl = static_cast<long>(k);
    const auto p = prime_in_interval(sieve, Rat(nl, kl + 4), Rat(nl, kl), k + 4, 3 * k + 8);
    if (!p) return std::nullopt;

    const std::uint64_t multiples = n / *p;  // k + t
    if (multiples < k || multiples > k + 3) {
        throw std::logic_error("prime " + std::to_string(*p) + " does not bracket n=" +
                               std::to_string(n) + " for k=" + std::to_string(k));
    }
    const auto t = static_cast<unsigned>(multiples - k);
    Rat boundary = boundary_value(k, t);
    if (v_p(boundary, *p).valuation != 0) {
        throw std::logic_error("v_p(S(k,k+t)) != 0 for p=" + std::to_string(*p) +
                               ", k=" + std::to_string(k) + ", t=" + std::to_string(t));
    }
    PrimeWitness w;
    w.p = *p;
    w.t = t;
    w.boundary = std::move(boundary);
    w.valuation = -static_cast<std::int64_t>(k);
    w.p_above_k_plus_4 = *p > k + 4;
    w.p_coprime_to_3k_plus_8 = (3 * k + 8) % *p != 0;
    w.p_in_interval = *p * k <= n && n < *p * (k + 4);
    w.p_squared_above_n = *p > n / *p;
    if (!(w.p_above_k_plus_4 && w.p_coprime_to_3k_plus_8 && w.p_in_interval && w.p_squared_above_n)) {
        throw std::logic_error("prime search returned a prime violating its own conditions");
    }
    return Certificate{k, n, std::move(w)};
}

DirectOutcome certify_direct(std::uint64_t k, std::uint64_t n, const Rat& value,
                             const Sieve& sieve, std::size_t digit_budget) {
    if (value.is_integer()) return Counterexample{k, n, value};
    const BigInt den = value.den();
    const auto prime = sieve.smallest_prime_factor(den, n);
    if (!prime) {
        throw std::out_of_range("no sieve prime <= " + std::to_string(n) +
                                " divides the denominator of S(" + std::to_string(k) + "," +
                                std::to_string(n) + ")");
    }
    DirectWitness w;
    w.denominator_digits = den.get_str().size();
    if (w.denominator_digits <= digit_budget) w.denominator = den;
    w.prime = *prime;
    w.valuation = v_p(value, *prime).valuation;
    return Certificate{k, n, std::move(w)};
}

DirectOutcome certify_direct(std::uint64_t k, std::uint64_t n, const Sieve& sieve,
                             std::size_t digit_budget) {
    return certify_direct(k, n, esym(k, n), sieve, digit_budget);
}

bool smallness_threshold_reached(std::uint64_t k, std::uint64_t n, mpfr_prec_t precision) {
    const Interval one = Interval::integer(1, precision);
    const Interval threshold =
        Interval::euler_e(precision) * (log(Interval::integer(static_cast<long>(n), precision)) + one);
    return mpfr_cmp_ui(threshold.lo(), static_cast<unsigned long>(k)) <= 0;
}

DirectOutcome certify(std::uint64_t k, std::uint64_t n, const Sieve& sieve,
                      std::size_t digit_budget) {
    if (k == 0 || k > n) throw std::domain_error("certify needs 1 <= k <= n");
    if (k == 1 && n >= 2) return certify_harmonic(n);
    if (smallness_threshold_reached(k, n)) {
        if (auto c = certify_smallness(k, n)) return *std::move(c);
    }
    if (k >= 2) {
        if (auto c = certify_prime(k, n, sieve)) return *std::move(c);
    }
    return certify_direct(k, n, sieve, digit_budget);
}

}  // namespace esym
