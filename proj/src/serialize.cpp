#include "esym/serialize.hpp"

#include <stdexcept>

namespace esym {

using nlohmann::json;

json rat_to_json(const Rat& q) {
    return json{{"num", to_decimal(q.num())}, {"den", to_decimal(q.den())}};
}

Rat rat_from_json(const json& j) {
    return Rat(parse_bigint(j.at("num").get<std::string>()),
               parse_bigint(j.at("den").get<std::string>()));
}

namespace {

json payload(const HarmonicWitness& w) {
    return json{{"power_of_two", w.power_of_two}, {"v2", w.valuation}};
}

json payload(const SmallnessWitness& w) {
    return json{{"harmonic_bound", rat_to_json(w.harmonic_bound)}};
}

json payload(const PrimeWitness& w) {
    return json{{"p", w.p},
                {"t", w.t},
                {"boundary", rat_to_json(w.boundary)},
                {"valuation", w.valuation},
                {"checks",
                 {{"p_gt_k_plus_4", w.p_above_k_plus_4},
                  {"p_not_dividing_3k_plus_8", w.p_coprime_to_3k_plus_8},
                  {"n_over_k_plus_4_lt_p_le_n_over_k", w.p_in_interval},
                  {"p_squared_gt_n", w.p_squared_above_n}}}};
}

json payload(const DirectWitness& w) {
    return json{{"denominator", w.denominator ? json(to_decimal(*w.denominator)) : json(nullptr)},
                {"denominator_digits", w.denominator_digits},
                {"prime", w.prime},
                {"valuation", w.valuation}};
}

json sign_sample(const SignSample& s) {
    return json{{"label", s.label},
                {"at", s.at},
                {"lower", s.lower},
                {"upper", s.upper},
                {"sign", to_string(s.sign)}};
}

}  // namespace

json to_json(const Certificate& c) {
    return json{{"k", c.k},
                {"n", c.n},
                {"kind", std::string(kind_name(c.kind()))},
                {"payload", std::visit([](const auto& w) { return payload(w); }, c.payload)}};
}

Certificate certificate_from_json(const json& j) {
    try {
        Certificate c;
        c.k = j.at("k").get<std::uint64_t>();
        c.n = j.at("n").get<std::uint64_t>();
        const auto kind = parse_kind(j.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("unknown certificate kind");
        const json& p = j.at("payload");
        switch (*kind) {
            case CertKind::Harmonic:
                c.payload = HarmonicWitness{p.at("power_of_two").get<std::uint64_t>(),
                                            p.at("v2").get<std::int64_t>()};
                break;
            case CertKind::Smallness:
                c.payload = SmallnessWitness{rat_from_json(p.at("harmonic_bound"))};
                break;
            case CertKind::Prime: {
                PrimeWitness w;
                w.p = p.at("p").get<std::uint64_t>();
                w.t = p.at("t").get<unsigned>();
                w.boundary = rat_from_json(p.at("boundary"));
                w.valuation = p.at("valuation").get<std::int64_t>();
                const json& checks = p.at("checks");
                w.p_above_k_plus_4 = checks.at("p_gt_k_plus_4").get<bool>();
                w.p_coprime_to_3k_plus_8 = checks.at("p_not_dividing_3k_plus_8").get<bool>();
                w.p_in_interval = checks.at("n_over_k_plus_4_lt_p_le_n_over_k").get<bool>();
                w.p_squared_above_n = checks.at("p_squared_gt_n").get<bool>();
                c.payload = std::move(w);
                break;
            }
            case CertKind::Direct: {
                DirectWitness w;
                if (!p.at("denominator").is_null()) {
                    w.denominator = parse_bigint(p.at("denominator").get<std::string>());
                }
                w.denominator_digits = p.at("denominator_digits").get<std::size_t>();
                w.prime = p.at("prime").get<std::uint64_t>();
                w.valuation = p.at("valuation").get<std::int64_t>();
                c.payload = std::move(w);
                break;
            }
        }
        return c;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

json to_json(const Counterexample& c) {
    return json{{"k", c.k}, {"n", c.n}, {"value", rat_to_json(c.value)}};
}

json to_json(const TheoremReport& report) {
    json counts = json::object();
    for (auto kind : {CertKind::Harmonic, CertKind::Smallness, CertKind::Prime, CertKind::Direct}) {
        counts[std::string(kind_name(kind))] = report.count(kind);
    }
    json certs = json::array();
    for (const auto& c : report.certificates) certs.push_back(to_json(c));
    json counterexamples = json::array();
    for (const auto& c : report.counterexamples) counterexamples.push_back(to_json(c));
    json invalid = json::array();
    for (const auto& [k, n] : report.invalid) invalid.push_back(json{{"k", k}, {"n", n}});
    return json{{"n_range", {{"lo", report.n_lo}, {"hi", report.n_hi}}},
                {"k_policy", report.k_policy},
                {"pair_count", report.pair_count()},
                {"all_nonintegral", report.all_nonintegral},
                {"validated", report.validated},
                {"method_counts", counts},
                {"invalid", invalid},
                {"counterexamples", counterexamples},
                {"certificates", certs},
                {"metadata",
                 {{"elapsed_seconds", report.elapsed.count()}, {"workers", report.workers}}}};
}

json to_json(const AnalyticReport& r) {
    json grid = json::array();
    for (const auto& s : r.derivative_grid) grid.push_back(sign_sample(s));
    json slack = json::array();
    for (const auto& s : r.slack_grid) slack.push_back(sign_sample(s));
    return json{{"precision_bits", r.precision},
                {"f_at_300000", sign_sample(r.f_at_300000)},
                {"g_at_300000", sign_sample(r.g_at_300000)},
                {"derivative_grid", grid},
                {"cubic_slack",
                 {{"at_published_threshold", sign_sample(r.slack_at_threshold)},
                  {"just_above_threshold", sign_sample(r.slack_above_threshold)},
                  {"at_3_4", sign_sample(r.slack_at_3_4)},
                  {"grid", slack},
                  {"root_lower", r.root_lower},
                  {"root_upper", r.root_upper},
                  {"threshold_check", r.slack_threshold_check}}},
                {"n_threshold",
                 {{"derived", r.n_threshold_derived},
                  {"published", r.n_threshold_published},
                  {"implication_holds", r.implication_holds}}},
                {"all_passed", r.all_passed}};
}

json to_json(const GapCheckResult& result, const Sieve& sieve) {
    json failures = json::array();
    for (const auto i : result.failures) {
        failures.push_back(json{{"i", i}, {"p_i", sieve.nth_prime(i)}, {"p_i_plus_1", sieve.nth_prime(i + 1)}});
    }
    return json{{"k", result.k},
                {"i_lo", result.i_lo},
                {"i_hi", result.i_hi},
                {"p_i_lo", sieve.nth_prime(result.i_lo)},
                {"p_i_hi_plus_1", sieve.nth_prime(result.i_hi + 1)},
                {"all_pass", result.all_pass},
                {"failures", failures}};
}

json to_json(const std::vector<ApHit>& hits) {
    json out = json::array();
    for (const auto& h : hits) {
        out.push_back(json{{"k", h.k}, {"n", h.n}, {"value", to_decimal(h.value)}});
    }
    return out;
}

}  // namespace esym
