#include "hrbound/bounds.hpp"

#include <cmath>
#include <numbers>

#include "hrbound/errors.hpp"

namespace hrb {

namespace {

constexpr double kPi = std::numbers::pi;

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

LogValue int_power(double base, int k) {
    if (k == 0) return LogValue::from_log(0.0);
    LogValue b = LogValue::from_double(base);
    if (b.is_zero()) return b;
    return {(b.sign < 0 && k % 2 == 1) ? -1 : 1, k * b.log_magnitude};
}

BoundInputs echo(int n, int r2, int w, const BigInt& abs_d) {
    BoundInputs in;
    in.n = n;
    in.r2 = r2;
    in.w = w;
    in.abs_discriminant = abs_d.str();
    return in;
}

void require_degree(int n, const char* who) {
    if (n < 3) throw DomainError(std::string(who) + ": degree must be at least 3");
}

void require_corollary_domain(int n, const BigInt& abs_d, const char* who) {
    require_degree(n, who);
    if (abs_d < 16) throw DomainError(std::string(who) + ": needs |d_K| >= 16 so that log log d_K > 0");
}

}  // namespace

std::string to_string(Formula f) {
    switch (f) {
        case Formula::theorem1: return "theorem1";
        case Formula::e4_kappa: return "e4_kappa";
        case Formula::corollary2: return "corollary2";
        case Formula::stirling: return "stirling";
        case Formula::louboutin: return "louboutin";
    }
    return "unknown";
}

Formula formula_from_string(const std::string& name) {
    for (Formula f : {Formula::theorem1, Formula::e4_kappa, Formula::corollary2, Formula::stirling,
                      Formula::louboutin})
        if (to_string(f) == name) return f;
    throw ValidationError("unknown formula '" + name + "'");
}

int gamma_n(int n) {
    require_degree(n, "gamma_n");
    return n == 3 ? 214 : 10;
}

HypothesisReport check_hypothesis(int n, double alpha, double log_c) {
    HypothesisReport rep;
    rep.alpha_ok = alpha > 0.0 && alpha < 2.0 / n;
    rep.floor_value = std::max(static_cast<double>(gamma_n(n)), alpha * n + 1.0 / (4.0 * alpha * alpha));
    rep.log_ck = log_c;
    rep.passed = rep.alpha_ok && log_c >= rep.floor_value;
    return rep;
}

BoundValue theorem1_bound(int n, int r2, int w, const BigInt& abs_d, double alpha, double log_c, bool force) {
    const HypothesisReport gate = check_hypothesis(n, alpha, log_c);
    if (!gate.passed && !force)
        throw HypothesisFailed("theorem1: hypothesis not met (log C_K = " + std::to_string(log_c) +
                               ", floor = " + std::to_string(gate.floor_value) +
                               (gate.alpha_ok ? "" : ", alpha outside (0, 2/n)") + ")");
    const double a = log_c / (2.0 * alpha);
    const LogValue prefactor =
        LogValue::from_log(std::log(1.5 * w) + r2 * std::log(2.0 / kPi) + 0.5 * log_abs(abs_d));
    const LogValue lower_term = int_power(a, n - 2) * LogValue::from_log(-log_factorial(n - 2));
    const LogValue bracket = lower_term * LogValue::from_double(a / (n - 1) - 1.0);
    BoundValue out{prefactor * bracket, Formula::theorem1, echo(n, r2, w, abs_d)};
    out.inputs.alpha = alpha;
    out.inputs.log_c = log_c;
    return out;
}

LogValue e4_kappa_bound(int n, double alpha, double log_c, bool force) {
    const HypothesisReport gate = check_hypothesis(n, alpha, log_c);
    if (!gate.passed && !force) throw HypothesisFailed("e4_kappa: hypothesis not met");
    const double b = log_c / alpha;
    const LogValue lower_term = int_power(b, n - 2) * LogValue::from_log(-log_factorial(n - 2));
    return LogValue::from_log(std::log(3.0)) * lower_term * LogValue::from_double(b / (n - 1) - 2.0);
}

BoundValue louboutin_bound(int n, int r2, int w, const BigInt& abs_d) {
    if (n < 2) throw DomainError("louboutin: degree must be at least 2");
    if (abs_d < 3) throw DomainError("louboutin: needs |d_K| >= 3");
    const double log_d = log_abs(abs_d);
    const double log_value = std::log(w / 2.0) + r2 * std::log(2.0 / kPi) +
                             (n - 1) * std::log(std::numbers::e * log_d / (4.0 * n - 4.0)) + 0.5 * log_d;
    return {LogValue::from_log(log_value), Formula::louboutin, echo(n, r2, w, abs_d)};
}

LogValue lee_theta(int n) {
    require_degree(n, "lee_theta");
    const double nd = n;
    const LogValue factorial_part =
        LogValue::from_log(std::log(44.39) + nd * std::log(0.082) + log_factorial(n));
    const LogValue tail = factorial_part + LogValue::from_double(13.0 / (nd - 1.0));
    const double log_theta = std::log(0.17) + std::log((6.0 * nd - 2.0) / (nd - 1.0)) + nd * std::log(2.26) +
                             4.0 * nd + 26.0 / nd + (nd + 0.5) * std::log(nd) + tail.log_magnitude;
    return LogValue::from_log(log_theta);
}

LeeConstants lee_constants(int n, const BigInt& abs_d) {
    if (abs_d < 3) throw DomainError("lee_constants: needs |d_K| >= 3");
    const double log_d = log_abs(abs_d);
    return {2.0 / (n + 1), lee_theta(n).log_magnitude + log_d / (n + 1) + (n - 1) * std::log(log_d)};
}

LeeConstants lee_constants(const NumberFieldSpec& spec) { return lee_constants(spec.degree, spec.abs_discriminant); }

CorollaryOffsets corollary_offsets(int n, const BigInt& abs_d) {
    require_corollary_domain(n, abs_d, "corollary_offsets");
    const double nd = n;
    const double shared = (nd * nd - 1.0) / 4.0 * std::log(log_abs(abs_d));
    const double n2logn = nd * nd * std::log(nd);
    return {shared + 3.0 * n2logn, shared + 0.5 * n2logn};
}

BoundValue corollary2_bound(int n, int r2, int w, const BigInt& abs_d) {
    const CorollaryOffsets off = corollary_offsets(n, abs_d);
    const double log_d = log_abs(abs_d);
    const double big = 0.25 * log_d + off.upper;
    const double small = 0.25 * log_d + off.lower;
    const LogValue first = LogValue::from_log((n - 1) * std::log(big) - log_factorial(n - 1));
    const LogValue second = LogValue::from_log((n - 2) * std::log(small) - log_factorial(n - 2));
    const LogValue prefactor = LogValue::from_log(std::log(1.5 * w) + r2 * std::log(2.0 / kPi) + 0.5 * log_d);
    return {prefactor * (first - second), Formula::corollary2, echo(n, r2, w, abs_d)};
}

BoundValue corollary2_bound(const NumberFieldSpec& spec) {
    return corollary2_bound(spec.degree, spec.signature.r2, spec.roots_of_unity, spec.abs_discriminant);
}

BoundValue stirling_form_bound(int n, int r2, int w, const BigInt& abs_d) {
    const CorollaryOffsets off = corollary_offsets(n, abs_d);
    const double log_d = log_abs(abs_d);
    const double e = std::numbers::e;
    const double k1 = n - 1;
    const double k2 = n - 2;
    const LogValue first =
        LogValue::from_log(k1 * std::log(e * log_d / (4.0 * k1) + e * off.upper / k1) - 0.5 * std::log(k1));
    const LogValue second = LogValue::from_log(-1.0 / (12.0 * k2) +
                                               k2 * std::log(e * log_d / (4.0 * k2) + e * off.lower / k2) -
                                               0.5 * std::log(k2));
    const LogValue prefactor = LogValue::from_log(std::log(3.0 * w / (2.0 * std::sqrt(2.0 * kPi))) +
                                                  r2 * std::log(2.0 / kPi) + 0.5 * log_d);
    return {prefactor * (first - second), Formula::stirling, echo(n, r2, w, abs_d)};
}

BoundValue stirling_form_bound(const NumberFieldSpec& spec) {
    return stirling_form_bound(spec.degree, spec.signature.r2, spec.roots_of_unity, spec.abs_discriminant);
}

}  // namespace hrb
