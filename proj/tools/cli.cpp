#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "esym/analytic.hpp"
#include "esym/certificate.hpp"
#include "esym/explore.hpp"
#include "esym/primes.hpp"
#include "esym/serialize.hpp"
#include "esym/symfun.hpp"
#include "esym/theorem.hpp"

namespace esym::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Session {
public:
    Session(const RunConfig& cfg, std::ostream& out, std::ostream& err)
        : cfg_(cfg), out_(out), err_(err) {
        if (cfg_.output_path) {
            file_.open(*cfg_.output_path);
            if (!file_) throw UsageError("cannot open output file " + *cfg_.output_path);
        }
    }

    std::ostream& out() { return cfg_.output_path ? static_cast<std::ostream&>(file_) : out_; }
    std::ostream& err() { return err_; }

    Format format(Format fallback) const { return cfg_.output_format.value_or(fallback); }

    /// Sieve covering at least `needed`, extending past the configured limit
    /// with a warning.
    const Sieve& sieve(std::uint64_t needed = 0) {
        std::uint64_t limit = std::max<std::uint64_t>(cfg_.sieve_limit, 2);
        if (needed > limit) {
            err_ << "warning: extending sieve limit from " << limit << " to " << needed << "\n";
            limit = needed;
        }
        if (!sieve_ || sieve_->limit() < limit) sieve_.emplace(limit);
        return *sieve_;
    }

    /// Sieve holding at least `count` primes.
    const Sieve& sieve_with_primes(std::size_t count) {
        std::uint64_t limit = std::max<std::uint64_t>(cfg_.sieve_limit, 2);
        const Sieve* s = &sieve(limit);
        while (s->count() < count) {
            limit *= 2;
            s = &sieve(limit);
        }
        return *s;
    }

    void json_out(const json& j, int indent = 2) { out() << j.dump(indent) << "\n"; }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    std::ofstream file_;
    std::optional<Sieve> sieve_;
};

std::string summary(const Certificate& c) {
    std::ostringstream os;
    os << "S(" << c.k << "," << c.n << ") is not an integer: ";
    std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, HarmonicWitness>) {
                os << "harmonic, r=" << w.power_of_two << ", v_2=" << w.valuation;
            } else if constexpr (std::is_same_v<W, SmallnessWitness>) {
                os << "smallness, H_n <= " << w.harmonic_bound << " and that bound^k < k!";
            } else if constexpr (std::is_same_v<W, PrimeWitness>) {
                os << "prime p=" << w.p << ", t=" << w.t << ", v_p=" << w.valuation;
            } else {
                os << "direct, denominator digits=" << w.denominator_digits << ", prime "
                   << w.prime << " with v_p=" << w.valuation;
            }
        },
        c.payload);
    return os.str();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

int cmd_compute(const RunConfig& cfg, Session& s) {
    require(cfg.k >= 1 && cfg.k <= cfg.n, "compute needs 1 <= k <= n");
    const Rat value = esym(cfg.k, cfg.n);
    switch (s.format(Format::Human)) {
        case Format::Human: s.out() << value.to_string() << "\n"; break;
        case Format::Csv:
            s.out() << "k,n,num,den\n"
                    << cfg.k << "," << cfg.n << "," << value.num() << "," << value.den() << "\n";
            break;
        case Format::Json:
            s.json_out(json{{"k", cfg.k}, {"n", cfg.n}, {"value", rat_to_json(value)},
                            {"is_integer", value.is_integer()}});
            break;
    }
    return 0;
}

int cmd_certify(const RunConfig& cfg, Session& s) {
    require(cfg.k >= 1 && cfg.k <= cfg.n, "certify needs 1 <= k <= n");
    require(cfg.n >= 4 || cfg.allow_small, "certify needs n >= 4 (pass --allow-small for n < 4)");
    const Sieve& sieve = s.sieve(cfg.n);
    const DirectOutcome outcome = certify(cfg.k, cfg.n, sieve);
    if (const auto* cex = std::get_if<Counterexample>(&outcome)) {
        switch (s.format(Format::Json)) {
            case Format::Human:
                s.out() << "S(" << cex->k << "," << cex->n << ") = " << cex->value
                        << " is an integer\n";
                break;
            case Format::Csv:
                s.out() << "k,n,kind,value\n"
                        << cex->k << "," << cex->n << ",integer," << cex->value.num() << "\n";
                break;
            case Format::Json: {
                json j = to_json(*cex);
                j["kind"] = "integer";
                s.json_out(j);
                break;
            }
        }
        return 1;
    }
    const auto& cert = std::get<Certificate>(outcome);
    switch (s.format(Format::Json)) {
        case Format::Human: s.out() << summary(cert) << "\n"; break;
        case Format::Csv:
            s.out() << "k,n,kind\n" << cert.k << "," << cert.n << "," << kind_name(cert.kind()) << "\n";
            break;
        case Format::Json: s.json_out(to_json(cert)); break;
    }
    return 0;
}

int cmd_verify_theorem(const RunConfig& cfg, Session& s) {
    require(cfg.n_lo >= 4 && cfg.n_lo <= cfg.n_hi, "verify-theorem needs 4 <= n_lo <= n_hi");
    const Sieve& sieve = s.sieve(cfg.n_hi);
    TheoremOptions options;
    options.workers = cfg.worker_count;
    const TheoremReport report = verify_theorem(cfg.n_lo, cfg.n_hi, sieve, options);

    switch (s.format(Format::Json)) {
        case Format::Json: s.json_out(to_json(report), -1); break;
        case Format::Csv:
            s.out() << "kind,count\n";
            for (auto kind : {CertKind::Harmonic, CertKind::Smallness, CertKind::Prime, CertKind::Direct}) {
                s.out() << kind_name(kind) << "," << report.count(kind) << "\n";
            }
            break;
        case Format::Human:
            s.out() << "n in [" << report.n_lo << ", " << report.n_hi << "], " << report.pair_count()
                    << " pairs\n";
            for (auto kind : {CertKind::Harmonic, CertKind::Smallness, CertKind::Prime, CertKind::Direct}) {
                s.out() << "  " << kind_name(kind) << ": " << report.count(kind) << "\n";
            }
            s.out() << "all non-integral: " << (report.all_nonintegral ? "yes" : "no") << "\n";
            break;
    }
    if (!report.all_nonintegral) {
        s.err() << "incomplete: " << report.counterexamples.size() << " integral pairs, "
                << report.invalid.size() << " invalid certificates\n";
        for (const auto& c : report.counterexamples) s.err() << "  integral (" << c.k << "," << c.n << ")\n";
        for (const auto& [k, n] : report.invalid) s.err() << "  invalid (" << k << "," << n << ")\n";
        return 1;
    }
    return 0;
}

int cmd_gap_check(const RunConfig& cfg, Session& s) {
    require(cfg.k >= 1, "gap-check needs k >= 1");
    require(cfg.i_lo >= 1 && cfg.i_lo <= cfg.i_hi, "gap-check needs 1 <= i_lo <= i_hi");
    const Sieve& sieve = s.sieve_with_primes(cfg.i_hi + 1);
    const GapCheckResult r = gap_check(sieve, cfg.k, cfg.i_lo, cfg.i_hi);
    switch (s.format(Format::Json)) {
        case Format::Json: s.json_out(to_json(r, sieve)); break;
        case Format::Csv:
            s.out() << "k,i_lo,i_hi,p_i_lo,p_i_hi_plus_1,all_pass,failure_count\n"
                    << r.k << "," << r.i_lo << "," << r.i_hi << "," << sieve.nth_prime(r.i_lo) << ","
                    << sieve.nth_prime(r.i_hi + 1) << "," << (r.all_pass ? "true" : "false") << ","
                    << r.failures.size() << "\n";
            break;
        case Format::Human:
            s.out() << "k=" << r.k << ", " << r.i_lo << " <= i <= " << r.i_hi << ": "
                    << (r.all_pass ? "pass" : "FAIL") << " (" << r.failures.size() << " failures)\n";
            break;
    }
    return r.all_pass ? 0 : 1;
}

int cmd_analytic_check(const RunConfig& cfg, Session& s) {
    const AnalyticReport r = analytic_region_check(cfg.precision_bits);
    switch (s.format(Format::Json)) {
        case Format::Json: s.json_out(to_json(r)); break;
        case Format::Csv: {
            s.out() << "label,at,lower,upper,sign\n";
            auto row = [&](const SignSample& x) {
                s.out() << x.label << "," << x.at << "," << x.lower << "," << x.upper << ","
                        << to_string(x.sign) << "\n";
            };
            row(r.f_at_300000);
            row(r.g_at_300000);
            row(r.slack_at_threshold);
            row(r.slack_above_threshold);
            row(r.slack_at_3_4);
            for (const auto& x : r.derivative_grid) row(x);
            for (const auto& x : r.slack_grid) row(x);
            break;
        }
        case Format::Human:
            s.out().precision(12);
            s.out() << "f(300000) in [" << r.f_at_300000.lower << ", " << r.f_at_300000.upper << "]\n"
                    << "g(300000) in [" << r.g_at_300000.lower << ", " << r.g_at_300000.upper << "]\n"
                    << "root of cubic in [" << r.root_lower << ", " << r.root_upper << "]\n"
                    << "n threshold: derived " << r.n_threshold_derived << ", published "
                    << r.n_threshold_published << "\n"
                    << (r.all_passed ? "all checks passed" : "CHECK FAILED") << "\n";
            break;
    }
    return r.all_passed ? 0 : 1;
}

int cmd_explore_ap(const RunConfig& cfg, Session& s) {
    std::vector<ApHit> hits;
    try {
        hits = explore_ap(cfg.a, cfg.m, cfg.n_max, cfg.k_max);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    switch (s.format(Format::Json)) {
        case Format::Json:
            s.json_out(json{{"a", cfg.a}, {"m", cfg.m}, {"n_max", cfg.n_max}, {"k_max", cfg.k_max},
                            {"hits", to_json(hits)}});
            break;
        case Format::Csv:
            s.out() << "k,n,value\n";
            for (const auto& h : hits) s.out() << h.k << "," << h.n << "," << h.value << "\n";
            break;
        case Format::Human:
            for (const auto& h : hits) {
                s.out() << "k=" << h.k << " n=" << h.n << " value=" << h.value << "\n";
            }
            s.out() << hits.size() << " hits\n";
            break;
    }
    return 0;
}

int cmd_bench(const RunConfig& cfg, Session& s) {
    const std::uint64_t k = cfg.k == 0 ? 10 : cfg.k;
    const std::uint64_t n = cfg.n == 0 ? 400 : cfg.n;
    require(k >= 1 && k <= n, "bench needs 1 <= k <= n");

    struct Run {
        std::string method;
        Rat value;
        double seconds;
    };
    std::vector<Run> runs;
    auto time = [&](const std::string& method, const std::function<Rat()>& fn) {
        const auto start = std::chrono::steady_clock::now();
        Rat v = fn();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        runs.push_back(Run{method, std::move(v), dt.count()});
    };
    time("recurrence", [&] { return esym(k, n); });
    time("newton", [&] { return esym_newton(k, n); });
    if (n <= kDefaultBruteforceCap) time("bruteforce", [&] { return esym_bruteforce(k, n); });

    bool agree = true;
    for (const auto& r : runs) agree = agree && r.value == runs.front().value;

    switch (s.format(Format::Json)) {
        case Format::Json: {
            json methods = json::array();
            json timings = json::object();
            for (const auto& r : runs) {
                methods.push_back(r.method);
                timings[r.method] = r.seconds;
            }
            s.json_out(json{{"k", k},
                            {"n", n},
                            {"methods", methods},
                            {"agree", agree},
                            {"denominator_digits", runs.front().value.den().get_str().size()},
                            {"metadata", {{"seconds", timings}}}});
            break;
        }
        case Format::Csv:
            s.out() << "method,seconds\n";
            for (const auto& r : runs) s.out() << r.method << "," << r.seconds << "\n";
            break;
        case Format::Human:
            for (const auto& r : runs) s.out() << r.method << ": " << r.seconds << " s\n";
            s.out() << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
            break;
    }
    return agree ? 0 : 1;
}

int cmd_validate(const RunConfig& cfg, Session& s) {
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("cannot read " + cfg.input_path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
    const json* list = &doc;
    json single;
    if (doc.is_object() && doc.contains("certificates")) {
        list = &doc.at("certificates");
    } else if (doc.is_object()) {
        single = json::array({doc});
        list = &single;
    }
    std::vector<Certificate> certs;
    std::uint64_t n_max = 2;
    for (const auto& j : *list) {
        try {
            certs.push_back(certificate_from_json(j));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        n_max = std::max(n_max, certs.back().n);
    }
    const Sieve& sieve = s.sieve(n_max);
    Validator validator(sieve);
    const auto bad = validator.failures(certs);
    switch (s.format(Format::Json)) {
        case Format::Json: {
            json invalid = json::array();
            for (auto i : bad) invalid.push_back(json{{"k", certs[i].k}, {"n", certs[i].n}});
            s.json_out(json{{"checked", certs.size()}, {"invalid", invalid}, {"all_valid", bad.empty()}});
            break;
        }
        case Format::Csv:
            s.out() << "checked,invalid\n" << certs.size() << "," << bad.size() << "\n";
            break;
        case Format::Human:
            s.out() << certs.size() << " certificates, " << bad.size() << " invalid\n";
            break;
    }
    return bad.empty() ? 0 : 1;
}

int dispatch(const RunConfig& cfg, Session& s) {
    switch (cfg.command) {
        case Command::Compute: return cmd_compute(cfg, s);
        case Command::Certify: return cmd_certify(cfg, s);
        case Command::VerifyTheorem: return cmd_verify_theorem(cfg, s);
        case Command::GapCheck: return cmd_gap_check(cfg, s);
        case Command::AnalyticCheck: return cmd_analytic_check(cfg, s);
        case Command::ExploreAp: return cmd_explore_ap(cfg, s);
        case Command::Bench: return cmd_bench(cfg, s);
        case Command::Validate: return cmd_validate(cfg, s);
    }
    return 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv(kSieveLimitEnv)) {
        try {
            cfg.sieve_limit = std::stoull(env);
        } catch (const std::exception&) {
            err << "warning: ignoring non-numeric " << kSieveLimitEnv << "=" << env << "\n";
        }
    }
    cfg.worker_count = std::max(1u, std::thread::hardware_concurrency());

    CLI::App app{"Exact elementary symmetric functions of 1, 1/2, ..., 1/n and non-integrality certificates",
                 "esym"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format_name;
    std::string out_path;
    app.add_option("--sieve-limit", cfg.sieve_limit, "Sieve limit (default 1000000 or $ESYM_SIEVE_LIMIT)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--out", out_path, "Write output to PATH instead of stdout");
    app.add_option("--workers", cfg.worker_count, "Worker threads (1 = sequential)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--precision-bits", cfg.precision_bits, "Mantissa bits for directed rounding")
        ->check(CLI::Range(53u, 1u << 16));
    app.add_flag("--allow-small", cfg.allow_small, "Allow n < 4 in certify");

    auto* compute = app.add_subcommand("compute", "Print S(k,n) in lowest terms");
    compute->add_option("k", cfg.k)->required();
    compute->add_option("n", cfg.n)->required();

    auto* certify_cmd = app.add_subcommand("certify", "Certify that S(k,n) is not an integer");
    certify_cmd->add_option("k", cfg.k)->required();
    certify_cmd->add_option("n", cfg.n)->required();

    auto* theorem = app.add_subcommand("verify-theorem", "Certify every 1 <= k <= n over an n-range");
    theorem->add_option("n_lo", cfg.n_lo)->required();
    theorem->add_option("n_hi", cfg.n_hi)->required();

    auto* gap = app.add_subcommand("gap-check", "Check k p_{i+1} < (k+4) p_i over an index range");
    gap->add_option("k", cfg.k)->required();
    gap->add_option("i_lo", cfg.i_lo)->required();
    gap->add_option("i_hi", cfg.i_hi)->required();

    auto* analytic = app.add_subcommand("analytic-check", "Directed-rounding checks for n >= 300000");

    auto* explore = app.add_subcommand("explore-ap", "Search arithmetic progressions for integral values");
    explore->add_option("a", cfg.a)->required();
    explore->add_option("m", cfg.m)->required();
    explore->add_option("n_max", cfg.n_max)->required();
    explore->add_option("k_max", cfg.k_max)->required();

    auto* bench = app.add_subcommand("bench", "Time the recurrence against Newton's identities");
    bench->add_option("k", cfg.k);
    bench->add_option("n", cfg.n);

    auto* validate_cmd = app.add_subcommand("validate", "Re-check certificates from a JSON file");
    validate_cmd->add_option("path", cfg.input_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    if (*compute) cfg.command = Command::Compute;
    else if (*certify_cmd) cfg.command = Command::Certify;
    else if (*theorem) cfg.command = Command::VerifyTheorem;
    else if (*gap) cfg.command = Command::GapCheck;
    else if (*analytic) cfg.command = Command::AnalyticCheck;
    else if (*explore) cfg.command = Command::ExploreAp;
    else if (*bench) cfg.command = Command::Bench;
    else if (*validate_cmd) cfg.command = Command::Validate;

    if (format_name == "json") cfg.output_format = Format::Json;
    else if (format_name == "csv") cfg.output_format = Format::Csv;
    else if (format_name == "human") cfg.output_format = Format::Human;
    if (!out_path.empty()) cfg.output_path = out_path;

    try {
        Session session(cfg, out, err);
        return dispatch(cfg, session);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace esym::cli
