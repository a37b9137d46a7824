#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace esym::cli {

enum class Command { Compute, Certify, VerifyTheorem, GapCheck, AnalyticCheck, ExploreAp, Bench, Validate };
enum class Format { Json, Csv, Human };

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;
inline constexpr const char* kSieveLimitEnv = "ESYM_SIEVE_LIMIT";

struct RunConfig {
    Command command = Command::Compute;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t n_lo = 0;
    std::uint64_t n_hi = 0;
    std::uint64_t i_lo = 0;
    std::uint64_t i_hi = 0;
    std::int64_t a = 1;
    std::int64_t m = 1;
    std::uint64_t n_max = 0;
    std::uint64_t k_max = 0;
    std::string input_path;
    std::uint64_t sieve_limit = kDefaultSieveLimit;
    /// Unset means the command's default: human for compute, JSON otherwise.
    std::optional<Format> output_format;
    std::optional<std::string> output_path;
    unsigned worker_count = 1;
    unsigned precision_bits = 64;
    bool allow_small = false;
};

/// Exit codes: 0 success, 1 a check failed or S(k,n) is an integer,
/// 2 bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace esym::cli
