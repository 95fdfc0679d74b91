#include "hrbound/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hrbound/bounds.hpp"
#include "hrbound/errors.hpp"
#include "hrbound/polynomial.hpp"

namespace hrb {

namespace {

constexpr double kRelTol = 1e-12;
constexpr double kAbsTol = 1e-300;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

double safe_log(double v) { return v > 0.0 ? std::log(v) : (v == 0.0 ? kNegInf : std::log(-v)); }

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class T>
double weighted_log_sum_impl(std::span<const T> coeffs, double x) {
    if (x < 1.0) throw PreconditionError("weighted_log_sum: x must be at least 1");
    if (x > static_cast<double>(coeffs.size()))
        throw PreconditionError("weighted_log_sum: x exceeds the coefficient range");
    const auto top = static_cast<std::size_t>(std::floor(x));
    CompensatedSum acc;
    for (std::size_t m = 1; m <= top; ++m)
        if (coeffs[m - 1] != 0) acc.add(static_cast<double>(coeffs[m - 1]) * std::log(x / static_cast<double>(m)));
    return acc.value();
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

BigInt factorial(int n) {
    BigInt acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

double simpson(double a, double fa, double b, double fb, double fm) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double simpson_recurse(const std::function<double(double)>& f, double a, double fa, double b, double fb, double m,
                       double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double err = left + right - whole;
    const double limit = std::max(tol, 1e-13 * std::abs(left + right));
    if (depth <= 0 || std::abs(err) <= 15.0 * limit) return left + right + err / 15.0;
    return simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

CheckResult make_result(std::string check, std::vector<std::pair<std::string, double>> params, bool pass,
                        double lhs_log, double rhs_log) {
    return {std::move(check), std::move(params), pass, lhs_log, rhs_log};
}

void weighted_log_suite(const SuiteOptions& opt, std::vector<CheckResult>& out) {
    std::vector<int> degrees{3, 4, 5, 6};
    std::vector<double> xs{2.0, 10.0, 100.0, 1e3, 1e4};
    if (opt.dense) {
        degrees = {2, 3, 4, 5, 6, 7, 8};
        xs.push_back(1e5);
    }
    const auto xmax = static_cast<std::uint64_t>(xs.back());
    for (int n : degrees) {
        std::vector<std::uint64_t> tau_table(xmax);
        for (std::uint64_t m = 1; m <= xmax; ++m) tau_table[m - 1] = tau(n, m);
        std::uint64_t tau_sum = 0;
        std::size_t next = 0;
        for (std::uint64_t m = 1; m <= xmax && next < xs.size(); ++m) {
            tau_sum += tau_table[m - 1];
            if (static_cast<double>(m) != xs[next]) continue;
            const double t = xs[next++];
            const double piltz = piltz_partial_bound(n, t);
            out.push_back(make_result("piltz-partial-sum", {{"n", n}, {"t", t}},
                                      holds(static_cast<double>(tau_sum), piltz),
                                      safe_log(static_cast<double>(tau_sum)), safe_log(piltz)));
        }
        for (double x : xs) {
            const double w_tau = weighted_log_sum(std::span<const std::uint64_t>(tau_table), x);
            const double closed = closed_form_k_sum(n, x);
            const double major = weighted_log_majorant(n, x);
            if (opt.field_table && n >= opt.field_degree && x <= static_cast<double>(opt.field_table->limit())) {
                const double w_r = weighted_log_sum(opt.field_table->counts(), x);
                out.push_back(make_result("weighted-log:rK<=tau", {{"n", n}, {"x", x}}, holds(w_r, w_tau),
                                          safe_log(w_r), safe_log(w_tau)));
            }
            out.push_back(make_result("weighted-log:tau<=closed", {{"n", n}, {"x", x}}, holds(w_tau, closed),
                                      safe_log(w_tau), safe_log(closed)));
            out.push_back(make_result("weighted-log:closed<=majorant", {{"n", n}, {"x", x}},
                                      holds(closed, major), safe_log(closed), safe_log(major)));
            if (n == 3)
                out.push_back(make_result("weighted-log:closed==majorant", {{"n", n}, {"x", x}},
                                          std::abs(closed - major) <= 1e-12 * std::abs(major), safe_log(closed),
                                          safe_log(major)));
            if (n <= 6 && x <= 1e4) {
                const double quad = integrated_piltz_bound(n, x);
                out.push_back(make_result("integral-identity", {{"n", n}, {"x", x}},
                                          std::abs(quad - closed) <= 1e-8 * std::abs(closed), safe_log(quad),
                                          safe_log(closed)));
            }
        }
    }
}

void binomial_suite(const SuiteOptions& opt, std::vector<CheckResult>& out) {
    const int max_n = opt.dense ? 20 : 12;
    const int max_k = opt.dense ? 60 : 40;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= max_k; ++k) {
            const int top = std::min(n - 1, k - 1);
            BigInt lhs = 0;
            for (int j = 0; j <= top; ++j) lhs += (j % 2 == 0 ? 1 : -1) * binomial(n - 1, j);
            const BigInt rhs = (top % 2 == 0 ? 1 : -1) * binomial(n - 2, top);
            out.push_back(make_result("alternating-binomial", {{"n", n}, {"k", k}}, alternating_binomial_check(n, k),
                                      lhs == 0 ? kNegInf : log_abs(lhs), rhs == 0 ? kNegInf : log_abs(rhs)));
        }
}

void factorial_suite(const SuiteOptions& opt, std::vector<CheckResult>& out) {
    const int max_n = opt.dense ? 120 : 60;
    for (int n = 3; n <= max_n; ++n)
        for (int k = 0; k <= n - 2; ++k) {
            const double lhs = log_factorial(n - 1);
            const double rhs = log_factorial(k + 1) + (n - k - 2) * std::log(n - 1.0);
            out.push_back(make_result("factorial-gam", {{"n", n}, {"k", k}}, factorial_gam_check(n, k), lhs, rhs));
        }
}

void tech_suite(const SuiteOptions& opt, std::vector<CheckResult>& out) {
    const int alpha_points = opt.dense ? 200 : 50;
    for (int n = 3; n <= 12; ++n) {
        const double g = gamma_n(n);
        for (double log_c : {g, 2.0 * g, 10.0 * g})
            for (int i = 1; i <= alpha_points; ++i) {
                const double alpha = (2.0 / n) * i / (alpha_points + 1);
                const double lhs = (n - 2) * std::log(log_c / alpha) - log_factorial(n - 2);
                const double rhs = alpha * (n - 1) + 1.0 + 0.5 * std::log(log_c) - 0.5 * std::log(alpha * (1 - alpha));
                out.push_back(make_result("lemma-tech", {{"n", n}, {"alpha", alpha}, {"logC", log_c}},
                                          lemma_tech_check(n, alpha, log_c), lhs, rhs));
            }
        out.push_back(make_result("tech-monotonic", {{"n", n}, {"grid", 1000}}, tech_monotonic_check(n, 1000), 0.0,
                                  0.0));
    }
    for (int n = 3; n <= 50; ++n) {
        const double g = gamma_n(n);
        const double s = s_constant(n);
        out.push_back(make_result("gamma>=s", {{"n", n}}, g >= s, std::log(g), std::log(s)));
    }
}

void trace_suite(const SuiteOptions& opt, std::vector<CheckResult>& out) {
    const int draws = opt.dense ? 100000 : 10000;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> degree(3, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < draws; ++i) {
        const int n = degree(rng);
        double alpha = 0.0;
        while (alpha <= 0.0) alpha = unit(rng) * (2.0 / n);
        const double floor_value = check_hypothesis(n, alpha, 0.0).floor_value;
        const double log_c = (i % 10 == 0) ? floor_value : floor_value * std::exp(unit(rng) * std::log(100.0));
        if (!check_hypothesis(n, alpha, log_c).passed) continue;
        const ProofTrace t = proof_trace(n, alpha, log_c);
        out.push_back(make_result("proof-trace", {{"n", n}, {"alpha", alpha}, {"logC", log_c}}, t.all_true(),
                                  safe_log(t.chain_middle), safe_log(t.chain_left)));
    }
}

}  // namespace

bool holds(double lhs, double rhs) { return lhs <= rhs * (1.0 + kRelTol) + kAbsTol; }

bool holds_log(double lhs_log, double rhs_log) {
    if (lhs_log <= std::log(kAbsTol)) return true;
    return lhs_log <= rhs_log + std::log1p(kRelTol);
}

double weighted_log_sum(std::span<const std::uint32_t> coeffs, double x) { return weighted_log_sum_impl(coeffs, x); }
double weighted_log_sum(std::span<const std::uint64_t> coeffs, double x) { return weighted_log_sum_impl(coeffs, x); }

double closed_form_k_sum(int n, double x) {
    if (n < 2) throw PreconditionError("closed_form_k_sum: n must be at least 2");
    if (x < 1.0) throw PreconditionError("closed_form_k_sum: x must be at least 1");
    const double lx = std::log(x);
    CompensatedSum acc;
    for (int k = 1; k <= n - 1; ++k)
        acc.add(std::pow(lx, k) / std::exp(log_factorial(k)) * binomial(n - 2, k - 1).convert_to<double>());
    return x * acc.value();
}

double weighted_log_majorant(int n, double x) {
    if (n < 2) throw PreconditionError("weighted_log_majorant: n must be at least 2");
    if (x < 1.0) throw PreconditionError("weighted_log_majorant: x must be at least 1");
    const double lx = std::log(x);
    return x * lx * std::pow(lx + n - 1.0, n - 2) / std::exp(log_factorial(n - 1));
}

double piltz_partial_bound(int n, double t) {
    if (n < 1) throw PreconditionError("piltz_partial_bound: n must be positive");
    if (t < 1.0) throw PreconditionError("piltz_partial_bound: t must be at least 1");
    const double lt = std::log(t);
    CompensatedSum acc;
    for (int j = 0; j <= n - 1; ++j)
        acc.add(binomial(n - 1, j).convert_to<double>() * std::pow(lt, j) / std::exp(log_factorial(j)));
    return t * acc.value();
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    return simpson_recurse(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), abs_tol, 48);
}

double integrated_piltz_bound(int n, double x) {
    if (n < 2) throw PreconditionError("integrated_piltz_bound: n must be at least 2");
    if (x < 1.0) throw PreconditionError("integrated_piltz_bound: x must be at least 1");
    CompensatedSum acc;
    for (int j = 0; j <= n - 1; ++j) {
        const double integral = adaptive_simpson([j](double t) { return std::pow(std::log(t), j); }, 1.0, x);
        acc.add(binomial(n - 1, j).convert_to<double>() / std::exp(log_factorial(j)) * integral);
    }
    return acc.value();
}

bool alternating_binomial_check(int n, int k) {
    if (n < 2 || k < 1) throw PreconditionError("alternating_binomial_check: needs n >= 2 and k >= 1");
    const int top = std::min(n - 1, k - 1);
    BigInt lhs = 0;
    for (int j = 0; j <= top; ++j) {
        const BigInt c = binomial(n - 1, j);
        lhs += (j % 2 == 0) ? c : BigInt(-c);
    }
    const BigInt c = binomial(n - 2, top);
    const BigInt rhs = (top % 2 == 0) ? c : BigInt(-c);
    return lhs == rhs;
}

bool factorial_gam_check(int n, int k) {
    if (n < 2 || k < 0 || k > n - 2) throw PreconditionError("factorial_gam_check: needs 0 <= k <= n - 2");
    return factorial(n - 1) <= factorial(k + 1) * boost::multiprecision::pow(BigInt(n - 1), n - k - 2);
}

bool lemma_tech_check(int n, double alpha, double log_c) {
    if (log_c < gamma_n(n)) throw PreconditionError("lemma_tech_check: log C_K below gamma_n");
    if (!(alpha > 0.0 && alpha < 2.0 / n)) throw PreconditionError("lemma_tech_check: alpha outside (0, 2/n)");
    const double lhs = (n - 2) * std::log(log_c / alpha) - log_factorial(n - 2);
    const double rhs = alpha * (n - 1) + 1.0 + 0.5 * std::log(log_c) - 0.5 * std::log(alpha * (1.0 - alpha));
    return holds_log(rhs, lhs);
}

double s_constant(int n) {
    if (n < 3) throw PreconditionError("s_constant: n must be at least 3");
    if (n == 3) return 4.0 * std::numbers::pi * std::exp(17.0 / 6.0);
    return std::pow(2.0, 4.0 / 3.0) * std::cbrt(std::numbers::pi) * std::exp(13.0 / 36.0);
}

bool tech_monotonic_check(int n, int grid_size) {
    if (n < 3) throw PreconditionError("tech_monotonic_check: n must be at least 3");
    if (grid_size < 2) throw PreconditionError("tech_monotonic_check: grid needs at least two points");
    auto log_g = [n](double a) { return (2 * n - 5) * std::log(a) + 2.0 * a * (n - 1) + 2.0 - std::log1p(-a); };
    double prev = log_g((2.0 / n) / (grid_size + 1));
    for (int i = 2; i <= grid_size; ++i) {
        const double cur = log_g((2.0 / n) * i / (grid_size + 1));
        if (cur < prev + std::log1p(-kRelTol)) return false;
        prev = cur;
    }
    return true;
}

ProofTrace proof_trace(int n, double alpha, double log_c) {
    if (n < 3) throw PreconditionError("proof_trace: n must be at least 3");
    if (!(alpha > 0.0 && alpha < 2.0 / n)) throw PreconditionError("proof_trace: alpha outside (0, 2/n)");
    ProofTrace t;
    t.n = n;
    t.alpha = alpha;
    t.log_ck = log_c;
    t.log_x = log_c / alpha + 1.0 - n;
    if (!(t.log_x > 0.0)) throw PreconditionError("proof_trace: log x <= 0");
    const double lx = t.log_x;
    t.delta = alpha - 1.0 / lx;

    // x^{-2 delta} underflows to 0 for large log x.
    const double decay = std::exp(-2.0 * t.delta * lx);
    t.cond1 = t.delta > 0.0 && t.delta < 1.0 && holds(decay, t.delta * (1.0 - t.delta));
    t.cond2 = holds(1.0 + 1.0 / (4.0 * alpha * alpha * alpha), lx);

    t.chain_left = (alpha * lx - 1.0) * (1.0 + (1.0 - alpha) * lx);
    t.chain_middle = 1.0 / (16.0 * alpha * alpha);
    t.chain_right = std::exp(2.0 + 2.0 * std::log(lx) - 2.0 * alpha * lx);
    t.chain = holds(t.chain_middle, t.chain_left) && holds(t.chain_right, t.chain_middle);
    return t;
}

Suite suite_from_string(const std::string& name) {
    if (name == "weighted-log") return Suite::weighted_log;
    if (name == "binomial") return Suite::binomial;
    if (name == "factorial") return Suite::factorial;
    if (name == "tech") return Suite::tech;
    if (name == "trace") return Suite::trace;
    if (name == "all") return Suite::all;
    throw ValidationError("unknown verification suite '" + name + "'");
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& options) {
    std::vector<CheckResult> out;
    if (suite == Suite::weighted_log || suite == Suite::all) weighted_log_suite(options, out);
    if (suite == Suite::binomial || suite == Suite::all) binomial_suite(options, out);
    if (suite == Suite::factorial || suite == Suite::all) factorial_suite(options, out);
    if (suite == Suite::tech || suite == Suite::all) tech_suite(options, out);
    if (suite == Suite::trace || suite == Suite::all) trace_suite(options, out);
    return out;
}

}  // namespace hrb
