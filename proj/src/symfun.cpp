#include "esym/symfun.hpp"

#include <stdexcept>
#include <utility>

#include "esym/interval.hpp"

namespace esym {

namespace {

void require_k_range(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || k > n) {
        throw std::domain_error("need 1 <= k <= n, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
    }
}

}  // namespace

SymTable::SymTable(std::size_t k_max) : k_max_(k_max) {
    values_.reserve(k_max + 1);
    values_.emplace_back(1);
}

const Rat& SymTable::at(std::size_t k) const {
    if (k >= values_.size()) {
        throw std::domain_error("S(" + std::to_string(k) + ", " + std::to_string(n_) +
                                ") not held in table (k_max=" + std::to_string(k_max_) + ")");
    }
    return values_[k];
}

void SymTable::advance() {
    ++n_;
    const Rat inv(1L, static_cast<long>(n_));
    if (n_ <= k_max_) values_.emplace_back(0);
    // Descending k so values_[k-1] still holds row n-1.
    for (std::size_t k = values_.size() - 1; k >= 1; --k) {
        values_[k] += inv * values_[k - 1];
    }
}

void SymTable::advance_to(std::uint64_t target_n) {
    if (target_n < n_) throw std::domain_error("SymTable cannot move backwards");
    while (n_ < target_n) advance();
}

ReciprocalFamily::ReciprocalFamily(std::vector<Rat> t, std::string d)
    : terms(std::move(t)), description(std::move(d)) {
    for (const auto& q : terms) {
        if (q.is_zero()) throw std::domain_error("reciprocal family contains a zero term");
    }
}

ReciprocalFamily ReciprocalFamily::arithmetic(std::int64_t a, std::int64_t m, std::uint64_t n) {
    std::vector<Rat> terms;
    terms.reserve(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
        const BigInt denom = BigInt(static_cast<long>(a)) +
                             BigInt(static_cast<long>(m)) * BigInt(static_cast<unsigned long>(i));
        if (denom == 0) {
            throw std::domain_error("arithmetic progression hits zero at i=" + std::to_string(i));
        }
        terms.emplace_back(BigInt(1), denom);
    }
    return ReciprocalFamily(std::move(terms), "1/(" + std::to_string(a) + "+" + std::to_string(m) +
                                                  "i), i=0.." + std::to_string(n));
}

ReciprocalFamily ReciprocalFamily::harmonic(std::uint64_t n) {
    std::vector<Rat> terms;
    terms.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) terms.emplace_back(1L, static_cast<long>(i));
    return ReciprocalFamily(std::move(terms), "1/i, i=1.." + std::to_string(n));
}

Rat esym(std::uint64_t k, std::uint64_t n) {
    require_k_range(k, n);
    SymTable table(k);
    table.advance_to(n);
    return table.at(k);
}

namespace {

void subsets(std::uint64_t next, std::uint64_t n, std::uint64_t remaining, const Rat& product,
             Rat& total) {
    if (remaining == 0) {
        total += product;
        return;
    }
    for (std::uint64_t i = next; i + remaining - 1 <= n; ++i) {
        subsets(i + 1, n, remaining - 1, product * Rat(1L, static_cast<long>(i)), total);
    }
}

}  // namespace

Rat esym_bruteforce(std::uint64_t k, std::uint64_t n, std::uint64_t cap) {
    require_k_range(k, n);
    if (n > cap) {
        throw std::length_error("brute-force enumeration refused for n=" + std::to_string(n) +
                                " (cap " + std::to_string(cap) + ")");
    }
    Rat total;
    subsets(1, n, k, Rat(1), total);
    return total;
}

Rat esym_newton(std::uint64_t k, std::uint64_t n) {
    require_k_range(k, n);
    // power[j] = sum_i i^{-j}
    std::vector<Rat> power(k + 1);
    for (std::uint64_t i = 1; i <= n; ++i) {
        const Rat inv(1L, static_cast<long>(i));
        Rat term = inv;
        for (std::uint64_t j = 1; j <= k; ++j) {
            power[j] += term;
            term *= inv;
        }
    }
    // j e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
    std::vector<Rat> e(k + 1);
    e[0] = Rat(1);
    for (std::uint64_t j = 1; j <= k; ++j) {
        Rat acc;
        for (std::uint64_t i = 1; i <= j; ++i) {
            const Rat term = e[j - i] * power[i];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        e[j] = acc / Rat(static_cast<long>(j));
    }
    return e[k];
}

Rat esym_general(std::uint64_t k, const ReciprocalFamily& family) {
    const std::uint64_t len = family.terms.size();
    require_k_range(k, len);
    std::vector<Rat> row(k + 1);
    row[0] = Rat(1);
    std::size_t filled = 0;
    for (const auto& x : family.terms) {
        if (filled < k) ++filled;
        for (std::size_t j = filled; j >= 1; --j) row[j] += x * row[j - 1];
    }
    return row[k];
}

namespace {

// sum_{i=lo}^{hi-1} 1/i as num/den (not reduced).
void harmonic_split(std::uint64_t lo, std::uint64_t hi, BigInt& num, BigInt& den) {
    if (hi - lo == 1) {
        num = 1;
        den = static_cast<unsigned long>(lo);
        return;
    }
    const std::uint64_t mid = lo + (hi - lo) / 2;
    BigInt ln, ld, rn, rd;
    harmonic_split(lo, mid, ln, ld);
    harmonic_split(mid, hi, rn, rd);
    num = ln * rd + rn * ld;
    den = ld * rd;
}

}  // namespace

Rat harmonic(std::uint64_t n) {
    if (n == 0) throw std::domain_error("harmonic(0) is undefined here");
    BigInt num, den;
    harmonic_split(1, n + 1, num, den);
    return Rat(num, den);
}

BigInt closed_sum_linear(std::uint64_t k) {
    const BigInt kk(static_cast<unsigned long>(k));
    const BigInt prod = (kk + 1) * (kk + 2);
    if (prod % 2 != 0) throw std::logic_error("closed_sum_linear: not divisible");
    return prod / 2;
}

BigInt closed_sum_quadratic(std::uint64_t k) {
    const BigInt kk(static_cast<unsigned long>(k));
    const BigInt prod = (kk + 1) * (kk + 2) * (kk + 3) * (3 * kk + 8);
    if (prod % 24 != 0) throw std::logic_error("closed_sum_quadratic: not divisible");
    return prod / 24;
}

BigInt closed_sum_cubic(std::uint64_t k) {
    const BigInt kk(static_cast<unsigned long>(k));
    const BigInt prod = (kk + 1) * (kk + 2) * (kk + 3) * (kk + 3) * (kk + 4) * (kk + 4);
    if (prod % 48 != 0) throw std::logic_error("closed_sum_cubic: not divisible");
    return prod / 48;
}

Rat boundary_value(std::uint64_t k, unsigned t) {
    if (k == 0) throw std::domain_error("boundary_value needs k >= 1");
    const BigInt kk(static_cast<unsigned long>(k));
    const BigInt kf = factorial(static_cast<unsigned long>(k));
    switch (t) {
        case 0: return Rat(BigInt(1), kf);
        case 1: return Rat(kk + 2, 2 * kf);
        case 2: return Rat((kk + 3) * (3 * kk + 8), 24 * kf);
        case 3: return Rat((kk + 3) * (kk + 4) * (kk + 4), 48 * kf);
        default:
            throw std::domain_error("boundary_value needs t in 0..3, got " + std::to_string(t));
    }
}

Rat harmonic_upper_bound(const Rat& harmonic_n, unsigned bits) {
    BigInt scaled = harmonic_n.num() << bits;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), harmonic_n.raw().get_den_mpz_t());
    return Rat(scaled + 1, BigInt(1) << bits);
}

bool power_below_factorial(const Rat& base, std::uint64_t k) {
    // num^k < k! * den^k
    BigInt lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), base.raw().get_num_mpz_t(), k);
    mpz_pow_ui(rhs.get_mpz_t(), base.raw().get_den_mpz_t(), k);
    rhs *= factorial(static_cast<unsigned long>(k));
    return lhs < rhs;
}

bool smallness_bound_holds(std::uint64_t k, const Rat& harmonic_n) {
    if (k == 0) throw std::domain_error("smallness_bound_holds needs k >= 1");
    constexpr unsigned kBits = 32;
    const Rat upper = harmonic_upper_bound(harmonic_n, kBits);
    if (power_below_factorial(upper, k)) return true;
    const Rat lower = upper - Rat(BigInt(1), BigInt(1) << kBits);
    if (!power_below_factorial(lower, k)) return false;
    return power_below_factorial(harmonic_n, k);
}

bool smallness_bound_holds(std::uint64_t k, std::uint64_t n, std::uint64_t exact_limit) {
    require_k_range(k, n);
    if (n <= exact_limit) return smallness_bound_holds(k, harmonic(n));
    for (mpfr_prec_t prec = 64; prec <= 1024; prec *= 2) {
        const Interval one = Interval::integer(1, prec);
        const Interval bound = pow(log(Interval::integer(static_cast<long>(n), prec)) + one, k);
        const Interval kf = Interval::integer(factorial(static_cast<unsigned long>(k)), prec);
        if (certainly_less(bound, kf)) return true;
        if (certainly_less(kf, bound)) return false;
    }
    return false;
}

}  // namespace esym
