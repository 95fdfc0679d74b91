#ifndef HRBOUND_LEMMA_LAB_HPP
#define HRBOUND_LEMMA_LAB_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hrbound/ideal_counter.hpp"

namespace hrb {

/// Inequality policy: lhs <= rhs holds if lhs <= rhs (1 + 1e-12) + 1e-300.
bool holds(double lhs, double rhs);
/// Same policy with both sides given by their natural logs.
bool holds_log(double lhs_log, double rhs_log);

/// sum_{m <= floor(x)} a_m log(x/m) with compensated summation; coeffs[0] is a_1.
double weighted_log_sum(std::span<const std::uint32_t> coeffs, double x);
double weighted_log_sum(std::span<const std::uint64_t> coeffs, double x);

/// x sum_{k=1}^{n-1} (log x)^k / k! C(n-2, k-1).
double closed_form_k_sum(int n, double x);

/// x log x (log x + n - 1)^{n-2} / (n-1)!.
double weighted_log_majorant(int n, double x);

/// t sum_{j=0}^{n-1} C(n-1, j) (log t)^j / j!, an upper bound for sum_{m<=t} tau_n(m).
double piltz_partial_bound(int n, double t);

/// Adaptive Simpson on [a, b]; panels stop refining once the Richardson
/// error estimate drops below max(1e-10, 1e-13 |estimate|) or at depth 48.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10);

/// sum_j C(n-1, j)/j! int_1^x (log t)^j dt by quadrature; equals closed_form_k_sum.
double integrated_piltz_bound(int n, double x);

/// sum_{j=0}^{min(n-1,k-1)} (-1)^j C(n-1, j) == (-1)^{min(n-1,k-1)} C(n-2, min(n-1,k-1)), exactly.
bool alternating_binomial_check(int n, int k);

/// (n-1)! <= (k+1)! (n-1)^{n-k-2}, exactly; 0 <= k <= n-2.
bool factorial_gam_check(int n, int k);

/// (logC/alpha)^{n-2}/(n-2)! >= e^{alpha(n-1)+1} sqrt(logC) / sqrt(alpha(1-alpha)).
/// Requires logC >= gamma_n.
bool lemma_tech_check(int n, double alpha, double log_c);

/// 4 pi e^{17/6} for n = 3; 2^{4/3} pi^{1/3} e^{13/36} for n >= 4.
double s_constant(int n);

/// alpha -> alpha^{2n-5} e^{2 alpha (n-1) + 2} / (1 - alpha) is non-decreasing
/// on a uniform grid of `grid_size` interior points of (0, 2/n).
bool tech_monotonic_check(int n, int grid_size);

/// Concrete parameters of the main proof for (n, alpha, log C_K).
struct ProofTrace {
    int n = 0;
    double alpha = 0.0;
    double log_ck = 0.0;
    double log_x = 0.0;  // log C_K / alpha + 1 - n
    double delta = 0.0;  // alpha - 1 / log x
    bool cond1 = false;  // delta (1 - delta) >= x^{-2 delta}
    bool cond2 = false;  // log x >= 1 + 1/(4 alpha^3)
    bool chain = false;  // (alpha L - 1)(1 + (1-alpha) L) >= 1/(16 alpha^2) >= e^2 L^2 x^{-2 alpha}
    double chain_left = 0.0;
    double chain_middle = 0.0;
    double chain_right = 0.0;

    bool all_true() const noexcept { return cond1 && cond2 && chain; }
};

/// Requires alpha in (0, 2/n) and log x > 0.
ProofTrace proof_trace(int n, double alpha, double log_c);

/// One verified instance for the `verify` report.
struct CheckResult {
    std::string check;
    std::vector<std::pair<std::string, double>> params;
    bool pass = false;
    double lhs_log = 0.0;
    double rhs_log = 0.0;
};

enum class Suite { weighted_log, binomial, factorial, tech, trace, all };
Suite suite_from_string(const std::string& name);

struct SuiteOptions {
    bool dense = false;
    std::uint64_t seed = 0x5eed5eedULL;
    /// When present, the weighted-log suite also checks r_K against tau_n
    /// for every n >= field_degree (r_K <= tau_deg <= tau_n).
    const CoefficientTable* field_table = nullptr;
    int field_degree = 0;
};

std::vector<CheckResult> run_suite(Suite suite, const SuiteOptions& options = {});

}  // namespace hrb

#endif
