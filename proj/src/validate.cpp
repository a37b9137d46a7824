#include <algorithm>
#include <bit>
#include <numeric>

#include "esym/certificate.hpp"

namespace esym {

Validator::Validator(const Sieve& sieve, ValidatorOptions options)
    : sieve_(sieve), options_(options) {}

const Rat& Validator::harmonic_of(std::uint64_t n) {
    auto it = harmonic_cache_.find(n);
    if (it == harmonic_cache_.end()) it = harmonic_cache_.emplace(n, harmonic(n)).first;
    return it->second;
}

const Rat& Validator::esym_of(std::uint64_t k, std::uint64_t n) {
    if (!table_ || table_->k_max() < k || table_->n() > n) {
        table_.emplace(std::max<std::size_t>(k, table_ ? table_->k_max() : 0));
    }
    table_->advance_to(n);
    return table_->at(k);
}

bool Validator::check(const Certificate& c, const HarmonicWitness& w) {
    const std::uint64_t r = w.power_of_two;
    if (c.k != 1 || c.n < 2) return false;
    if (!std::has_single_bit(r) || r > c.n || c.n / 2 >= r) return false;
    if (w.valuation != -static_cast<std::int64_t>(std::countr_zero(r)) || w.valuation >= 0) {
        return false;
    }
    if (c.n <= options_.harmonic_exact_limit) {
        return v_p(harmonic_of(c.n), 2).valuation == w.valuation;
    }
    return true;
}

bool Validator::check(const Certificate& c, const SmallnessWitness& w) {
    if (c.k == 0 || c.k > c.n) return false;
    if (w.harmonic_bound < harmonic_of(c.n)) return false;
    return power_below_factorial(w.harmonic_bound, c.k);
}

bool Validator::check(const Certificate& c, const PrimeWitness& w) {
    const std::uint64_t k = c.k;
    const std::uint64_t n = c.n;
    const std::uint64_t p = w.p;
    if (k < 2 || n < k || p < 2) return false;
    if (!(p <= sieve_.limit() ? sieve_.is_prime(p) : is_prime_u64(p))) return false;

    const bool above = p > k + 4;
    const bool coprime = (3 * k + 8) % p != 0;
    using wide = unsigned __int128;
    const bool interval = wide{p} * k <= n && n < wide{p} * (k + 4);
    const bool square = p > n / p;
    if (!(above && coprime && interval && square)) return false;
    if (w.p_above_k_plus_4 != above || w.p_coprime_to_3k_plus_8 != coprime ||
        w.p_in_interval != interval || w.p_squared_above_n != square) {
        return false;
    }

    // p(k+t) <= n < p(k+t+1)
    if (w.t > 3 || wide{p} * (k + w.t) > n || n >= wide{p} * (k + w.t + 1)) return false;
    if (w.boundary != boundary_value(k, w.t)) return false;
    if (w.boundary != esym(k, k + w.t)) return false;
    const PadicVal vb = v_p(w.boundary, p);
    if (!vb.is_finite || vb.valuation != 0) return false;
    return w.valuation == -static_cast<std::int64_t>(k);
}

bool Validator::check(const Certificate& c, const DirectWitness& w) {
    if (c.k == 0 || c.k > c.n) return false;
    if (!(w.prime <= sieve_.limit() ? sieve_.is_prime(w.prime) : is_prime_u64(w.prime))) {
        return false;
    }
    const Rat& value = esym_of(c.k, c.n);
    if (value.is_integer()) return false;
    const BigInt den = value.den();
    if (den.get_str().size() != w.denominator_digits) return false;
    if (w.denominator && *w.denominator != den) return false;
    if (!mpz_divisible_ui_p(den.get_mpz_t(), w.prime)) return false;
    const PadicVal v = v_p(value, w.prime);
    return v.is_finite && v.valuation == w.valuation && v.valuation < 0;
}

bool Validator::operator()(const Certificate& c) {
    try {
        return std::visit([&](const auto& w) { return check(c, w); }, c.payload);
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::size_t> Validator::failures(std::span<const Certificate> certs) {
    std::vector<std::size_t> bad;
    std::vector<std::size_t> direct;
    std::uint64_t direct_k_max = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        if (certs[i].kind() == CertKind::Direct) {
            direct.push_back(i);
            direct_k_max = std::max(direct_k_max, certs[i].k);
            continue;
        }
        if (!(*this)(certs[i])) bad.push_back(i);
    }
    std::stable_sort(direct.begin(), direct.end(), [&](std::size_t a, std::size_t b) {
        return certs[a].n < certs[b].n;
    });
    if (!direct.empty()) {
        const std::uint64_t first_n = certs[direct.front()].n;
        if (!table_ || table_->k_max() < direct_k_max || table_->n() > first_n) {
            table_.emplace(direct_k_max);
        }
    }
    for (const auto i : direct) {
        if (!(*this)(certs[i])) bad.push_back(i);
    }
    std::sort(bad.begin(), bad.end());
    return bad;
}

bool validate(const Certificate& c, const Sieve& sieve) {
    Validator v(sieve);
    return v(c);
}

}  // namespace esym
