#pragma once

#include <json.hpp>

#include "esym/analytic.hpp"
#include "esym/certificate.hpp"
#include "esym/explore.hpp"
#include "esym/primes.hpp"
#include "esym/theorem.hpp"

namespace esym {

// Big integers and rationals are written as decimal strings; machine-sized
// integers (k, n, p, t, valuations) as JSON numbers. Wall-clock data lives
// under a top-level "metadata" key and is the only non-deterministic part.

nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& c);
/// Throws std::invalid_argument on a malformed document.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const AnalyticReport& report);
nlohmann::json to_json(const GapCheckResult& result, const Sieve& sieve);
nlohmann::json to_json(const std::vector<ApHit>& hits);

}  // namespace esym
