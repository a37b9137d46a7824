#include "esym/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace esym {

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat::Rat(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_bigint(text), BigInt(1));
    return Rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rat(q_.get_den(), q_.get_num());
}

std::string Rat::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.to_string(); }

Rat rat_add(const Rat& a, const Rat& b) { return a + b; }
Rat rat_mul(const Rat& a, const Rat& b) { return a * b; }
bool is_integer(const Rat& q) { return q.is_integer(); }

Rat pow(const Rat& base, unsigned long exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rat(num, den);
}

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d <= p / d; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

std::int64_t v_p(const BigInt& z, std::uint64_t p) {
    if (z == 0) throw std::domain_error("valuation of zero integer");
    if (!is_prime_u64(p)) throw std::invalid_argument("v_p: " + std::to_string(p) + " is not prime");
    BigInt rest;
    const BigInt prime(static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

PadicVal v_p(const Rat& q, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("v_p: " + std::to_string(p) + " is not prime");
    if (q.is_zero()) return PadicVal{p, 0, false};
    // Lowest terms: at most one of num/den carries p.
    const std::int64_t up = v_p(q.num(), p);
    const std::int64_t down = v_p(q.den(), p);
    return PadicVal{p, up - down, true};
}

BigInt factorial(unsigned long k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

std::string to_decimal(const BigInt& z) { return z.get_str(10); }

BigInt parse_bigint(const std::string& text) {
    BigInt z;
    if (text.empty() || z.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return z;
}

}  // namespace esym
