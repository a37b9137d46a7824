#include "esym/theorem.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "esym/interval.hpp"

namespace esym {

namespace {

struct ShardResult {
    std::vector<Certificate> certificates;
    std::vector<Counterexample> counterexamples;
};

// Smallest k with floor-rounded e(log n + 1) <= k.
std::uint64_t smallness_start(std::uint64_t n) {
    constexpr mpfr_prec_t prec = 64;
    const Interval one = Interval::integer(1, prec);
    const Interval threshold =
        Interval::euler_e(prec) * (log(Interval::integer(static_cast<long>(n), prec)) + one);
    mpfr_t c;
    mpfr_init2(c, prec);
    mpfr_ceil(c, threshold.lo());
    const auto k = static_cast<std::uint64_t>(mpfr_get_ui(c, MPFR_RNDU));
    mpfr_clear(c);
    return std::max<std::uint64_t>(k, 2);
}

ShardResult run_shard(std::uint64_t lo, std::uint64_t hi, const Sieve& sieve,
                      const TheoremOptions& options) {
    ShardResult out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pending;  // (n, k)
    Rat h = lo > 1 ? harmonic(lo - 1) : Rat(0);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        h += Rat(1L, static_cast<long>(n));
        out.certificates.push_back(certify_harmonic(n));
        const std::uint64_t k_small = smallness_start(n);
        for (std::uint64_t k = 2; k <= n; ++k) {
            if (k >= k_small) {
                if (auto c = certify_smallness(k, n, h)) {
                    out.certificates.push_back(*std::move(c));
                    continue;
                }
            }
            if (auto c = certify_prime(k, n, sieve)) {
                out.certificates.push_back(*std::move(c));
                continue;
            }
            pending.emplace_back(n, k);
        }
    }
    if (pending.empty()) return out;

    std::uint64_t k_max = 0;
    for (const auto& [n, k] : pending) k_max = std::max(k_max, k);
    SymTable table(k_max);
    for (const auto& [n, k] : pending) {
        table.advance_to(n);
        auto outcome = certify_direct(k, n, table.at(k), sieve, options.digit_budget);
        if (auto* c = std::get_if<Certificate>(&outcome)) {
            out.certificates.push_back(std::move(*c));
        } else {
            out.counterexamples.push_back(std::get<Counterexample>(std::move(outcome)));
        }
    }
    return out;
}

// Contiguous shards with roughly equal numbers of (k, n) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> shards(std::uint64_t lo, std::uint64_t hi,
                                                            unsigned workers) {
    const std::uint64_t span = hi - lo + 1;
    const auto count = static_cast<std::uint64_t>(std::max(1u, workers));
    if (count == 1 || span < count) return {{lo, hi}};
    long double total = 0;
    for (std::uint64_t n = lo; n <= hi; ++n) total += static_cast<long double>(n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    long double acc = 0;
    std::uint64_t start = lo;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        acc += static_cast<long double>(n);
        if (out.size() + 1 < count && acc >= total * (out.size() + 1) / count) {
            out.emplace_back(start, n);
            start = n + 1;
        }
    }
    if (start <= hi) out.emplace_back(start, hi);
    return out;
}

}  // namespace

std::size_t TheoremReport::pair_count() const {
    if (n_hi < n_lo) return 0;
    // sum_{n=lo}^{hi} n
    return static_cast<std::size_t>((n_lo + n_hi) * (n_hi - n_lo + 1) / 2);
}

const Certificate* TheoremReport::find(std::uint64_t k, std::uint64_t n) const {
    auto it = std::lower_bound(certificates.begin(), certificates.end(), std::pair{n, k},
                               [](const Certificate& c, const std::pair<std::uint64_t, std::uint64_t>& key) {
                                   return std::pair{c.n, c.k} < key;
                               });
    if (it == certificates.end() || it->n != n || it->k != k) return nullptr;
    return &*it;
}

TheoremReport verify_theorem(std::uint64_t n_lo, std::uint64_t n_hi, const Sieve& sieve,
                             const TheoremOptions& options) {
    if (n_lo < 4 || n_lo > n_hi) {
        throw std::domain_error("verify_theorem needs 4 <= n_lo <= n_hi");
    }
    if (n_hi > sieve.limit()) {
        throw std::out_of_range("verify_theorem up to n=" + std::to_string(n_hi) +
                                " needs a sieve limit of at least n (have " +
                                std::to_string(sieve.limit()) + ")");
    }
    const auto start = std::chrono::steady_clock::now();

    TheoremReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.k_policy =
        "all 1 <= k <= n; k = 1 harmonic; k >= e(log n + 1) smallness; otherwise prime, "
        "then direct";
    report.workers = std::max(1u, options.workers);

    const auto ranges = shards(n_lo, n_hi, report.workers);
    std::vector<ShardResult> results(ranges.size());
    if (ranges.size() == 1) {
        results[0] = run_shard(ranges[0].first, ranges[0].second, sieve, options);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            threads.emplace_back([&, i] {
                try {
                    results[i] = run_shard(ranges[i].first, ranges[i].second, sieve, options);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    for (auto& r : results) {
        std::move(r.certificates.begin(), r.certificates.end(),
                  std::back_inserter(report.certificates));
        std::move(r.counterexamples.begin(), r.counterexamples.end(),
                  std::back_inserter(report.counterexamples));
    }
    std::sort(report.certificates.begin(), report.certificates.end(),
              [](const Certificate& a, const Certificate& b) {
                  return std::pair{a.n, a.k} < std::pair{b.n, b.k};
              });
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  return std::pair{a.n, a.k} < std::pair{b.n, b.k};
              });
    for (const auto& c : report.certificates) {
        ++report.method_counts[static_cast<std::size_t>(c.kind())];
    }

    if (options.validate) {
        Validator validator(sieve);
        for (const auto i : validator.failures(report.certificates)) {
            report.invalid.emplace_back(report.certificates[i].k, report.certificates[i].n);
        }
        report.validated = true;
    }
    report.all_nonintegral = report.counterexamples.empty() && report.invalid.empty() &&
                             report.certificates.size() == report.pair_count();
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace esym
