#include "hrbound/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "hrbound/bounds.hpp"
#include "hrbound/errors.hpp"
#include "hrbound/report.hpp"

namespace hrb {

namespace {

struct GlobalOptions {
    std::string field;
    std::string config;
    std::string output;
    std::string format;
    std::string overrides;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> max_sieve;
    std::optional<std::uint64_t> limit;
    std::optional<unsigned> threads;
    bool force = false;
};

struct BoundsOptions {
    std::string formula = "all";
    std::optional<double> alpha;
    std::optional<double> log_c;
};

struct VerifyOptions {
    std::string suite = "all";
    bool dense = false;
};

struct TraceOptions {
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<double> log_c;
};

class OutputSink {
public:
    OutputSink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ValidationError("cannot open output '" + path + "'");
        }
        stream_ = file_ ? file_.get() : &fallback;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

RunConfig resolve_config(const GlobalOptions& g) {
    RunConfig cfg;
    if (!g.config.empty()) cfg = load_run_config(g.config, cfg);
    if (g.seed) cfg.seed = *g.seed;
    if (g.max_sieve) cfg.max_sieve = *g.max_sieve;
    if (g.limit) cfg.sieve_limit = *g.limit;
    if (g.threads) cfg.threads = *g.threads;
    if (g.force) cfg.force = true;
    if (!g.format.empty()) cfg.format = g.format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!g.overrides.empty()) cfg.overrides = load_overrides(g.overrides);
    return cfg;
}

NumberFieldSpec require_field(const GlobalOptions& g) {
    if (g.field.empty()) throw ValidationError("--field <spec.json> is required for this command");
    return load_field_spec(g.field);
}

void require_valid(const NumberFieldSpec& spec, bool force) {
    const auto violations = validate_spec(spec);
    if (violations.empty() || force) return;
    std::string msg = "field spec invalid:";
    for (const auto& v : violations) msg += " [" + v.invariant + ": " + v.detail + "]";
    throw ValidationError(msg);
}

CoefficientTable sieve_for(const NumberFieldSpec& spec, const RunConfig& cfg, std::uint64_t limit) {
    if (limit > cfg.max_sieve)
        throw ValidationError("sieve limit " + std::to_string(limit) + " exceeds --max-sieve " +
                              std::to_string(cfg.max_sieve));
    return sieve_coefficients(spec, limit, {cfg.overrides, cfg.seed, cfg.threads});
}

int cmd_bounds(const GlobalOptions& g, const BoundsOptions& b, std::ostream& out, std::ostream& err) {
    const RunConfig cfg = resolve_config(g);
    const NumberFieldSpec spec = require_field(g);
    require_valid(spec, cfg.force);
    const int n = spec.degree;
    const int r2 = spec.signature.r2;
    const int w = spec.roots_of_unity;

    std::vector<Formula> formulas;
    if (b.formula == "all")
        formulas = {Formula::theorem1, Formula::corollary2, Formula::stirling, Formula::louboutin};
    else
        formulas = {formula_from_string(b.formula)};

    int status = kExitOk;
    nlohmann::json results = nlohmann::json::array();
    for (Formula f : formulas) {
        ReportedBound rb;
        switch (f) {
            case Formula::theorem1: {
                const LeeConstants lee = lee_constants(spec);
                const double alpha = b.alpha.value_or(cfg.alpha.value_or(lee.alpha));
                double log_c = lee.log_c;
                if (b.log_c)
                    log_c = *b.log_c;
                else if (cfg.c_policy == CPolicy::explicit_value)
                    log_c = cfg.log_c;
                const HypothesisReport gate = check_hypothesis(n, alpha, log_c);
                if (!gate.passed && !cfg.force) {
                    err << "theorem1: hypothesis gate failed (log C_K = " << log_c << " < floor "
                        << gate.floor_value << (gate.alpha_ok ? "" : ", alpha outside (0, 2/n)")
                        << "); use --force to evaluate anyway\n";
                    nlohmann::json entry{{"formula", "theorem1"}, {"hypothesis", hypothesis_to_json(gate)}};
                    entry["hypothesis"]["source"] = b.log_c ? "explicit" : "lee";
                    entry["error"] = "hypothesis not verified";
                    results.push_back(entry);
                    status = kExitHypothesis;
                    continue;
                }
                rb = {theorem1_bound(n, r2, w, spec.abs_discriminant, alpha, log_c, true), gate,
                      b.log_c ? "explicit" : "lee", !gate.passed};
                break;
            }
            case Formula::corollary2:
            case Formula::stirling: {
                const LeeConstants lee = lee_constants(spec);
                rb.bound = f == Formula::corollary2 ? corollary2_bound(spec) : stirling_form_bound(spec);
                rb.hypothesis = check_hypothesis(n, lee.alpha, lee.log_c);
                rb.hypothesis_source = "lee";
                break;
            }
            case Formula::louboutin:
                rb.bound = louboutin_bound(n, r2, w, spec.abs_discriminant);
                break;
            case Formula::e4_kappa:
                throw ValidationError("e4_kappa bounds kappa_K, not h_K R_K; use it through the library");
        }
        results.push_back(bound_to_json(rb));
    }
    OutputSink sink(g.output, out);
    sink.stream() << (formulas.size() == 1 ? results[0] : results).dump(2) << '\n';
    return status;
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& v, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    SuiteOptions opt;
    opt.dense = v.dense;
    opt.seed = cfg.seed;
    std::optional<CoefficientTable> table;
    if (!g.field.empty()) {
        const NumberFieldSpec spec = require_field(g);
        require_valid(spec, cfg.force);
        table.emplace(sieve_for(spec, cfg, std::min<std::uint64_t>(cfg.max_sieve, v.dense ? 100000 : 10000)));
        opt.field_table = &*table;
        opt.field_degree = spec.degree;
    }
    const auto checks = run_suite(suite_from_string(v.suite), opt);
    OutputSink sink(g.output, out);
    sink.stream() << checks_to_json(checks).dump(2) << '\n';
    for (const auto& c : checks)
        if (!c.pass) return kExitNumeric;
    return kExitOk;
}

int cmd_sieve(const GlobalOptions& g, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    const NumberFieldSpec spec = require_field(g);
    require_valid(spec, cfg.force);
    const CoefficientTable table = sieve_for(spec, cfg, cfg.sieve_limit);
    OutputSink sink(g.output, out);
    table.write_csv(sink.stream());
    return kExitOk;
}

int cmd_delta(const GlobalOptions& g, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    const NumberFieldSpec spec = require_field(g);
    require_valid(spec, cfg.force);
    const CoefficientTable table = sieve_for(spec, cfg, cfg.sieve_limit);
    const Kappa kappa = (spec.class_number && spec.regulator)
                            ? kappa_from_invariants(spec)
                            : estimate_kappa(table, cfg.alpha.value_or(2.0 / (spec.degree + 1)), 0.0);
    OutputSink sink(g.output, out);
    DeltaProfile(table, kappa).write_csv(sink.stream());
    return kExitOk;
}

int cmd_trace(const GlobalOptions& g, const TraceOptions& t, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    std::optional<NumberFieldSpec> spec;
    if (!g.field.empty()) spec = require_field(g);
    const int n = t.n ? *t.n : (spec ? spec->degree : 0);
    if (n < 3) throw ValidationError("trace needs --n >= 3 or a --field of degree >= 3");
    double alpha = t.alpha.value_or(cfg.alpha.value_or(2.0 / (n + 1)));
    double log_c = 0.0;
    if (t.log_c) {
        log_c = *t.log_c;
    } else if (cfg.c_policy == CPolicy::explicit_value) {
        log_c = cfg.log_c;
    } else if (spec) {
        log_c = lee_constants(*spec).log_c;
    } else {
        throw ValidationError("trace needs --logC or a --field to derive Lee's C_K");
    }
    nlohmann::json j = trace_to_json(proof_trace(n, alpha, log_c));
    j["hypothesis"] = hypothesis_to_json(check_hypothesis(n, alpha, log_c));
    OutputSink sink(g.output, out);
    sink.stream() << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_report(const GlobalOptions& g, std::ostream& out) {
    const RunConfig cfg = resolve_config(g);
    const NumberFieldSpec spec = require_field(g);
    const BoundReport report = run_pipeline(spec, cfg);
    OutputSink sink(g.output, out);
    emit_report(report, cfg.format, sink.stream());
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit upper bounds for h_K R_K and checks of their auxiliary inequalities"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--field", g.field, "Field spec JSON");
    app.add_option("--config", g.config, "Run config JSON");
    app.add_option("--output", g.output, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized factorization and property draws");
    app.add_option("--max-sieve", g.max_sieve, "Largest admissible sieve limit (default 1e7)");
    app.add_option("--limit", g.limit, "Sieve limit X");
    app.add_option("--threads", g.threads, "Worker threads for the sieve");
    app.add_option("--overrides", g.overrides, "Local-shape override JSON for index primes");
    app.add_flag("--force", g.force, "Evaluate even when validation or the hypothesis gate fails");

    BoundsOptions b;
    auto* bounds = app.add_subcommand("bounds", "Evaluate explicit bounds for a field");
    bounds->add_option("--formula", b.formula)
        ->check(CLI::IsMember({"theorem1", "corollary2", "stirling", "louboutin", "all"}));
    bounds->add_option("--alpha", b.alpha, "Exponent alpha in the error-term hypothesis");
    bounds->add_option("--logC", b.log_c, "log C_K for the error-term hypothesis");

    VerifyOptions v;
    auto* verify = app.add_subcommand("verify", "Run the inequality and identity suites");
    verify->add_option("--suite", v.suite)
        ->check(CLI::IsMember({"weighted-log", "binomial", "factorial", "tech", "trace", "all"}));
    verify->add_flag("--grid-dense", v.dense, "Use the larger grids");

    auto* sieve = app.add_subcommand("sieve", "Export r_K(m) and partial sums as CSV");
    auto* delta = app.add_subcommand("delta", "Export the Delta_K profile as CSV");

    TraceOptions t;
    auto* trace = app.add_subcommand("trace", "Evaluate the proof's parameter choices and conditions");
    trace->add_option("--n", t.n, "Degree (instead of --field)");
    trace->add_option("--alpha", t.alpha);
    trace->add_option("--logC", t.log_c);

    auto* report = app.add_subcommand("report", "Run the full pipeline");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bounds) return cmd_bounds(g, b, out, err);
        if (*verify) return cmd_verify(g, v, out);
        if (*sieve) return cmd_sieve(g, out);
        if (*delta) return cmd_delta(g, out);
        if (*trace) return cmd_trace(g, t, out);
        if (*report) return cmd_report(g, out);
    } catch (const HypothesisFailed& e) {
        err << "error: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IndexPrimeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}

}  // namespace hrb
