#ifndef HRBOUND_REPORT_HPP
#define HRBOUND_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hrbound/bounds.hpp"
#include "hrbound/field_model.hpp"
#include "hrbound/ideal_counter.hpp"
#include "hrbound/lemma_lab.hpp"

namespace hrb {

enum class CPolicy { lee, explicit_value, empirical };
enum class OutputFormat { json, csv };

struct RunConfig {
    std::uint64_t sieve_limit = 100000;
    std::uint64_t max_sieve = 10000000;
    std::optional<double> alpha;  // nullopt: Lee's alpha = 2/(n+1)
    CPolicy c_policy = CPolicy::lee;
    double log_c = 0.0;  // used when c_policy == explicit_value
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 0x5eed5eedULL;
    bool force = false;
    unsigned threads = 1;
    ShapeOverrides overrides;
};

/// Reads a config document. `overrides` names an override file, resolved
/// relative to the working directory.
RunConfig parse_run_config(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

/// A bound together with the hypothesis status it depends on. Louboutin's
/// bound is unconditional and carries no hypothesis.
struct ReportedBound {
    BoundValue bound;
    std::optional<HypothesisReport> hypothesis;
    std::string hypothesis_source;
    bool forced = false;
};

struct SuiteSummary {
    std::string suite;
    std::size_t checks = 0;
    std::size_t passed = 0;
    friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct BoundReport {
    NumberFieldSpec field;
    std::uint64_t sieve_limit = 0;
    Kappa kappa;
    std::string kappa_provenance;  // "exact" or "empirical"
    std::optional<double> hr_known;
    double delta_sup = 0.0;
    double alpha = 0.0;
    double empirical_c = 0.0;
    std::string c_source;  // "lee", "explicit" or "empirical"
    std::string hypothesis_note;
    HypothesisReport hypothesis;
    /// |Delta_K(x)| <= C_Lee x^{1 - 2/(n+1)} at every checkpoint of [1, X].
    std::optional<bool> lee_error_term_on_range;
    std::map<std::string, ReportedBound> bounds;
    std::optional<ProofTrace> trace;
    std::string trace_error;
    std::vector<SuiteSummary> suite_results;
    std::vector<std::string> warnings;
};

/// sieve -> kappa -> Delta profile -> empirical C -> hypothesis gate ->
/// bounds -> proof trace -> verification summaries. Deterministic in
/// (spec, config) and independent of config.threads.
BoundReport run_pipeline(const NumberFieldSpec& spec, const RunConfig& config);

nlohmann::json bound_to_json(const ReportedBound& b);
nlohmann::json report_to_json(const BoundReport& report);
BoundReport report_from_json(const nlohmann::json& doc);
nlohmann::json trace_to_json(const ProofTrace& t);
nlohmann::json hypothesis_to_json(const HypothesisReport& h);
nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

/// JSON (sorted keys, shortest round-trip floats) or one CSV row per formula.
void emit_report(const BoundReport& report, OutputFormat format, std::ostream& out);

/// Bounds in ascending order of value; ties by formula name. Needs two or more.
std::vector<std::pair<std::string, BoundValue>> compare_bounds(const BoundReport& report);

}  // namespace hrb

#endif
