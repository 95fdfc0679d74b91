#include "hrbound/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "hrbound/errors.hpp"
#include "hrbound/format.hpp"

namespace hrb {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or(const json& v, double fallback) { return v.is_null() ? fallback : v.get<double>(); }

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

HypothesisReport hypothesis_from_json(const json& j) {
    HypothesisReport h;
    h.alpha_ok = j.at("alpha_ok").get<bool>();
    h.floor_value = j.at("floor").get<double>();
    h.log_ck = j.at("log_ck").get<double>();
    h.passed = j.at("passed").get<bool>();
    return h;
}

ReportedBound bound_from_json(const json& j) {
    ReportedBound b;
    b.bound.formula = formula_from_string(j.at("formula").get<std::string>());
    b.bound.value.sign = j.at("sign").get<int>();
    b.bound.value.log_magnitude = number_or(j.at("log_value"), kNegInf);
    const json& in = j.at("inputs");
    b.bound.inputs.n = in.at("n").get<int>();
    b.bound.inputs.r2 = in.at("r2").get<int>();
    b.bound.inputs.w = in.at("w").get<int>();
    b.bound.inputs.abs_discriminant = in.at("abs_discriminant").get<std::string>();
    if (in.contains("alpha")) b.bound.inputs.alpha = in.at("alpha").get<double>();
    if (in.contains("log_c")) b.bound.inputs.log_c = in.at("log_c").get<double>();
    const json& hyp = j.at("hypothesis");
    if (!hyp.is_null()) {
        b.hypothesis = hypothesis_from_json(hyp);
        b.hypothesis_source = hyp.at("source").get<std::string>();
        b.forced = hyp.at("forced").get<bool>();
    }
    return b;
}

ProofTrace trace_from_json(const json& j) {
    ProofTrace t;
    t.n = j.at("n").get<int>();
    t.alpha = j.at("alpha").get<double>();
    t.log_ck = j.at("log_ck").get<double>();
    t.log_x = j.at("log_x").get<double>();
    t.delta = j.at("delta").get<double>();
    t.cond1 = j.at("cond1").get<bool>();
    t.cond2 = j.at("cond2").get<bool>();
    t.chain = j.at("chain").get<bool>();
    t.chain_left = number_or(j.at("chain_left"), 0.0);
    t.chain_middle = number_or(j.at("chain_middle"), 0.0);
    t.chain_right = number_or(j.at("chain_right"), 0.0);
    return t;
}

SuiteSummary summarize(const std::string& name, const std::vector<CheckResult>& checks) {
    SuiteSummary s{name, checks.size(), 0};
    for (const auto& c : checks) s.passed += c.pass ? 1 : 0;
    return s;
}

void require_keys(const json& doc, const std::set<std::string>& allowed, const std::string& what) {
    if (!doc.is_object()) throw ValidationError(what + ": top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (!allowed.count(key)) throw ValidationError(what + ": unknown key '" + key + "'");
}

// Re-throws module errors with the failing pipeline stage prefixed.
template <class F>
auto in_stage(const char* stage, F&& body) {
    const auto tag = [stage](const std::exception& e) { return std::string(stage) + ": " + e.what(); };
    try {
        return body();
    } catch (const IndexPrimeError& e) {
        throw IndexPrimeError(e.prime(), tag(e));
    } catch (const ValidationError& e) {
        throw ValidationError(tag(e));
    } catch (const OverflowError& e) {
        throw OverflowError(tag(e));
    } catch (const HypothesisFailed& e) {
        throw HypothesisFailed(tag(e));
    } catch (const DomainError& e) {
        throw DomainError(tag(e));
    } catch (const PreconditionError& e) {
        throw PreconditionError(tag(e));
    } catch (const Error& e) {
        throw Error(tag(e));
    }
}

}  // namespace

RunConfig parse_run_config(const json& doc, RunConfig base) {
    require_keys(doc,
                 {"sieve_limit", "max_sieve", "alpha", "c_policy", "format", "seed", "force", "threads", "overrides"},
                 "config");
    try {
        if (doc.contains("sieve_limit")) base.sieve_limit = doc.at("sieve_limit").get<std::uint64_t>();
        if (doc.contains("max_sieve")) base.max_sieve = doc.at("max_sieve").get<std::uint64_t>();
        if (doc.contains("alpha")) {
            const json& a = doc.at("alpha");
            if (a.is_string() && a.get<std::string>() == "lee")
                base.alpha.reset();
            else
                base.alpha = a.get<double>();
        }
        if (doc.contains("c_policy")) {
            const json& c = doc.at("c_policy");
            if (c.is_number()) {
                base.c_policy = CPolicy::explicit_value;
                base.log_c = c.get<double>();
            } else if (c.get<std::string>() == "lee") {
                base.c_policy = CPolicy::lee;
            } else if (c.get<std::string>() == "empirical") {
                base.c_policy = CPolicy::empirical;
            } else {
                throw ValidationError("config: c_policy must be \"lee\", \"empirical\" or a number (log C_K)");
            }
        }
        if (doc.contains("format")) {
            const auto f = doc.at("format").get<std::string>();
            if (f != "json" && f != "csv") throw ValidationError("config: format must be json or csv");
            base.format = f == "json" ? OutputFormat::json : OutputFormat::csv;
        }
        if (doc.contains("seed")) base.seed = doc.at("seed").get<std::uint64_t>();
        if (doc.contains("force")) base.force = doc.at("force").get<bool>();
        if (doc.contains("threads")) base.threads = doc.at("threads").get<unsigned>();
        if (doc.contains("overrides")) base.overrides = load_overrides(doc.at("overrides").get<std::string>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    if (base.sieve_limit < 1) throw ValidationError("config: sieve_limit must be at least 1");
    if (base.alpha && !(*base.alpha > 0.0 && *base.alpha < 1.0))
        throw ValidationError("config: explicit alpha must lie in (0, 1)");
    return base;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    try {
        return parse_run_config(json::parse(in), std::move(base));
    } catch (const json::parse_error& e) {
        throw ValidationError("config '" + path + "': " + e.what());
    }
}

BoundReport run_pipeline(const NumberFieldSpec& spec, const RunConfig& config) {
    BoundReport rep;
    rep.field = spec;
    const auto violations = validate_spec(spec);
    if (!violations.empty()) {
        std::string msg = "field spec invalid:";
        for (const auto& v : violations) msg += " [" + v.invariant + ": " + v.detail + "]";
        if (!config.force) throw ValidationError(msg);
        rep.warnings.push_back(msg);
    }
    for (auto& w : spec_warnings(spec)) rep.warnings.push_back(std::move(w));
    if (config.sieve_limit > config.max_sieve)
        throw ValidationError("sieve limit " + std::to_string(config.sieve_limit) + " exceeds --max-sieve " +
                              std::to_string(config.max_sieve));
    if (config.alpha && !(*config.alpha > 0.0 && *config.alpha < 1.0))
        throw ValidationError("explicit alpha must lie in (0, 1)");

    const int n = spec.degree;
    rep.sieve_limit = config.sieve_limit;
    const CoefficientTable table = in_stage("sieve", [&] {
        return sieve_coefficients(spec, config.sieve_limit, {config.overrides, config.seed, config.threads});
    });

    rep.alpha = config.alpha.value_or(2.0 / (n + 1));
    if (spec.class_number && spec.regulator) {
        rep.kappa = kappa_from_invariants(spec);
        rep.kappa_provenance = "exact";
        rep.hr_known = spec.class_number->convert_to<double>() * *spec.regulator;
    } else {
        rep.kappa = in_stage("kappa", [&] {
            const Kappa rough = estimate_kappa(table, rep.alpha, 0.0);
            const double c_self = empirical_C(DeltaProfile(table, rough), rep.alpha);
            return estimate_kappa(table, rep.alpha, c_self);
        });
        rep.kappa_provenance = "empirical";
    }

    const DeltaProfile profile(table, rep.kappa);
    rep.delta_sup = profile.sup_statistic();
    rep.empirical_c = empirical_C(profile, rep.alpha);

    const LeeConstants lee = in_stage("bounds", [&] { return lee_constants(spec); });
    rep.lee_error_term_on_range = empirical_C(profile, lee.alpha) <= std::exp(lee.log_c);

    double log_c = 0.0;
    switch (config.c_policy) {
        case CPolicy::lee:
            log_c = lee.log_c;
            rep.c_source = "lee";
            rep.hypothesis_note = "C_K from Lee's explicit error term";
            break;
        case CPolicy::explicit_value:
            log_c = config.log_c;
            rep.c_source = "explicit";
            rep.hypothesis_note = "C_K supplied explicitly";
            break;
        case CPolicy::empirical:
            log_c = std::log(rep.empirical_c);
            rep.c_source = "empirical";
            rep.hypothesis_note = "empirical certificate only, range [1," + std::to_string(config.sieve_limit) + "]";
            break;
    }
    rep.hypothesis = check_hypothesis(n, rep.alpha, log_c);

    if (rep.hypothesis.passed || config.force) {
        ReportedBound b{theorem1_bound(n, spec.signature.r2, spec.roots_of_unity, spec.abs_discriminant, rep.alpha,
                                       log_c, true),
                        rep.hypothesis, rep.c_source, !rep.hypothesis.passed};
        rep.bounds.emplace(to_string(Formula::theorem1), std::move(b));
    }
    rep.bounds.emplace(to_string(Formula::louboutin),
                       ReportedBound{louboutin_bound(n, spec.signature.r2, spec.roots_of_unity, spec.abs_discriminant),
                                     std::nullopt, "", false});
    if (spec.abs_discriminant >= 16) {
        const HypothesisReport lee_gate = check_hypothesis(n, lee.alpha, lee.log_c);
        rep.bounds.emplace(to_string(Formula::corollary2),
                           ReportedBound{corollary2_bound(spec), lee_gate, "lee", false});
        rep.bounds.emplace(to_string(Formula::stirling),
                           ReportedBound{stirling_form_bound(spec), lee_gate, "lee", false});
    }

    try {
        rep.trace = proof_trace(n, rep.alpha, log_c);
    } catch (const PreconditionError& e) {
        rep.trace_error = e.what();
    }

    SuiteOptions quick;
    quick.seed = config.seed;
    quick.field_table = &table;
    quick.field_degree = n;
    rep.suite_results.push_back(summarize("weighted-log", run_suite(Suite::weighted_log, quick)));
    rep.suite_results.push_back(summarize("binomial", run_suite(Suite::binomial, quick)));
    rep.suite_results.push_back(summarize("factorial", run_suite(Suite::factorial, quick)));
    rep.suite_results.push_back(summarize("tech", run_suite(Suite::tech, quick)));
    rep.suite_results.push_back(summarize("trace", run_suite(Suite::trace, quick)));
    return rep;
}

json hypothesis_to_json(const HypothesisReport& h) {
    return {{"alpha_ok", h.alpha_ok}, {"floor", h.floor_value}, {"log_ck", h.log_ck}, {"passed", h.passed}};
}

json bound_to_json(const ReportedBound& b) {
    json j;
    j["formula"] = to_string(b.bound.formula);
    j["sign"] = b.bound.value.sign;
    j["log_value"] = number_or_null(b.bound.value.log_magnitude);
    const auto plain = b.bound.value.to_double();
    j["value_if_representable"] = plain ? json(*plain) : json(nullptr);
    json in{{"n", b.bound.inputs.n},
            {"r2", b.bound.inputs.r2},
            {"w", b.bound.inputs.w},
            {"abs_discriminant", b.bound.inputs.abs_discriminant}};
    if (b.bound.inputs.alpha) in["alpha"] = *b.bound.inputs.alpha;
    if (b.bound.inputs.log_c) in["log_c"] = *b.bound.inputs.log_c;
    j["inputs"] = in;
    if (b.hypothesis) {
        json h = hypothesis_to_json(*b.hypothesis);
        h["source"] = b.hypothesis_source;
        h["forced"] = b.forced;
        if (b.forced) h["note"] = "unconditional hypothesis NOT verified";
        j["hypothesis"] = h;
    } else {
        j["hypothesis"] = nullptr;
    }
    return j;
}

json trace_to_json(const ProofTrace& t) {
    return {{"n", t.n},
            {"alpha", t.alpha},
            {"log_ck", t.log_ck},
            {"log_x", t.log_x},
            {"delta", t.delta},
            {"cond1", t.cond1},
            {"cond2", t.cond2},
            {"chain", t.chain},
            {"chain_left", number_or_null(t.chain_left)},
            {"chain_middle", number_or_null(t.chain_middle)},
            {"chain_right", number_or_null(t.chain_right)}};
}

json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json params = json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        arr.push_back({{"check", c.check},
                       {"params", params},
                       {"pass", c.pass},
                       {"lhs_log", number_or_null(c.lhs_log)},
                       {"rhs_log", number_or_null(c.rhs_log)}});
    }
    return arr;
}

json report_to_json(const BoundReport& r) {
    json j;
    j["field"] = field_spec_to_json(r.field);
    j["sieve_limit"] = r.sieve_limit;
    json kappa{{"value", r.kappa.value}, {"uncertainty", r.kappa.uncertainty}, {"provenance", r.kappa_provenance}};
    if (r.kappa_provenance == "empirical") kappa["computed_at_X"] = r.sieve_limit;
    j["kappa"] = kappa;
    j["hr_known"] = r.hr_known ? json(*r.hr_known) : json(nullptr);
    j["delta_sup"] = {{"value", r.delta_sup}, {"computed_at_X", r.sieve_limit}};
    j["empirical_C"] = {{"alpha", r.alpha}, {"value", r.empirical_c}, {"computed_at_X", r.sieve_limit}};
    json hyp = hypothesis_to_json(r.hypothesis);
    hyp["source"] = r.c_source;
    hyp["note"] = r.hypothesis_note;
    j["hypothesis"] = hyp;
    j["lee_error_term_on_range"] = r.lee_error_term_on_range ? json(*r.lee_error_term_on_range) : json(nullptr);
    json bounds = json::object();
    for (const auto& [name, b] : r.bounds) bounds[name] = bound_to_json(b);
    j["bounds"] = bounds;
    j["trace"] = r.trace ? trace_to_json(*r.trace) : json(nullptr);
    j["trace_error"] = r.trace_error;
    json suites = json::array();
    for (const auto& s : r.suite_results) suites.push_back({{"suite", s.suite}, {"checks", s.checks}, {"passed", s.passed}});
    j["suite_results"] = suites;
    j["warnings"] = r.warnings;
    return j;
}

BoundReport report_from_json(const json& j) {
    BoundReport r;
    try {
        r.field = parse_field_spec(j.at("field"));
        r.sieve_limit = j.at("sieve_limit").get<std::uint64_t>();
        r.kappa.value = j.at("kappa").at("value").get<double>();
        r.kappa.uncertainty = j.at("kappa").at("uncertainty").get<double>();
        r.kappa_provenance = j.at("kappa").at("provenance").get<std::string>();
        if (!j.at("hr_known").is_null()) r.hr_known = j.at("hr_known").get<double>();
        r.delta_sup = j.at("delta_sup").at("value").get<double>();
        r.alpha = j.at("empirical_C").at("alpha").get<double>();
        r.empirical_c = j.at("empirical_C").at("value").get<double>();
        r.hypothesis = hypothesis_from_json(j.at("hypothesis"));
        r.c_source = j.at("hypothesis").at("source").get<std::string>();
        r.hypothesis_note = j.at("hypothesis").at("note").get<std::string>();
        if (!j.at("lee_error_term_on_range").is_null())
            r.lee_error_term_on_range = j.at("lee_error_term_on_range").get<bool>();
        for (const auto& [name, b] : j.at("bounds").items()) r.bounds.emplace(name, bound_from_json(b));
        if (!j.at("trace").is_null()) r.trace = trace_from_json(j.at("trace"));
        r.trace_error = j.at("trace_error").get<std::string>();
        for (const auto& s : j.at("suite_results"))
            r.suite_results.push_back(
                {s.at("suite").get<std::string>(), s.at("checks").get<std::size_t>(), s.at("passed").get<std::size_t>()});
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
    return r;
}

void emit_report(const BoundReport& report, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::json) {
        out << report_to_json(report).dump(2) << '\n';
        return;
    }
    out << "formula,sign,log_value,value,hypothesis_passed\n";
    for (const auto& [name, b] : report.bounds) {
        const auto plain = b.bound.value.to_double();
        out << name << ',' << b.bound.value.sign << ',' << shortest_repr(b.bound.value.log_magnitude) << ','
            << (plain ? shortest_repr(*plain) : std::string()) << ','
            << (b.hypothesis ? (b.hypothesis->passed ? "true" : "false") : "n/a") << '\n';
    }
}

std::vector<std::pair<std::string, BoundValue>> compare_bounds(const BoundReport& report) {
    if (report.bounds.size() < 2) throw PreconditionError("compare_bounds: needs at least two bounds");
    std::vector<std::pair<std::string, BoundValue>> out;
    for (const auto& [name, b] : report.bounds) out.emplace_back(name, b.bound);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto c = a.second <=> b.second;
        if (c != 0) return c < 0;
        return a.first < b.first;
    });
    return out;
}

}  // namespace hrb
