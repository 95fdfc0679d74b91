#ifndef HRBOUND_BOUNDS_HPP
#define HRBOUND_BOUNDS_HPP

#include <optional>
#include <string>

#include "hrbound/field_model.hpp"
#include "hrbound/log_value.hpp"

namespace hrb {

enum class Formula { theorem1, e4_kappa, corollary2, stirling, louboutin };

std::string to_string(Formula f);
Formula formula_from_string(const std::string& name);

/// The arguments a bound was evaluated at.
struct BoundInputs {
    int n = 0;
    int r2 = 0;
    int w = 2;
    std::string abs_discriminant;
    std::optional<double> alpha;
    std::optional<double> log_c;
};

/// Value of a bound's right-hand side for h_K R_K, in log-space.
struct BoundValue {
    LogValue value;
    Formula formula = Formula::theorem1;
    BoundInputs inputs;

    friend std::partial_ordering operator<=>(const BoundValue& a, const BoundValue& b) { return a.value <=> b.value; }
    friend bool operator==(const BoundValue& a, const BoundValue& b) { return a.value == b.value; }
};

/// Gate on (n, alpha, C_K): alpha in (0, 2/n) and
/// log C_K >= max(gamma_n, alpha n + 1/(4 alpha^2)).
struct HypothesisReport {
    bool alpha_ok = false;
    double floor_value = 0.0;
    double log_ck = 0.0;
    bool passed = false;
};

/// 214 for n = 3, 10 for n >= 4.
int gamma_n(int n);

HypothesisReport check_hypothesis(int n, double alpha, double log_c);

/// (3w/2)(2/pi)^{r2} [A^{n-1}/(n-1)! - A^{n-2}/(n-2)!] sqrt(d_K), with
/// A = log C_K / (2 alpha), evaluated as A^{n-2}/(n-2)! (A/(n-1) - 1).
/// Throws HypothesisFailed unless the gate passes or `force` is set.
BoundValue theorem1_bound(int n, int r2, int w, const BigInt& abs_d, double alpha, double log_c, bool force = false);

/// The kappa_K majorant 3 [B^{n-1}/(n-1)! - 2 B^{n-2}/(n-2)!], B = log C_K / alpha.
LogValue e4_kappa_bound(int n, double alpha, double log_c, bool force = false);

/// (w/2)(2/pi)^{r2} (e log d / (4n - 4))^{n-1} sqrt(d).
BoundValue louboutin_bound(int n, int r2, int w, const BigInt& abs_d);

/// Theta_n = 0.17 (6n-2)/(n-1) 2.26^n e^{4n + 26/n} n^{n+1/2} (44.39 * 0.082^n n! + 13/(n-1)).
LogValue lee_theta(int n);

struct LeeConstants {
    double alpha;
    double log_c;
};

/// alpha = 2/(n+1), C_K = Theta_n d^{1/(n+1)} (log d)^{n-1}.
LeeConstants lee_constants(int n, const BigInt& abs_d);
LeeConstants lee_constants(const NumberFieldSpec& spec);

/// L_K and l_K: (n^2 - 1)/4 log log d + {3, 1/2} n^2 log n.
struct CorollaryOffsets {
    double upper;  // L_K
    double lower;  // l_K
};
CorollaryOffsets corollary_offsets(int n, const BigInt& abs_d);

/// The main bound at Lee's constants, with log Theta replaced by its n^2 log n sandwich. Needs d >= 16.
BoundValue corollary2_bound(int n, int r2, int w, const BigInt& abs_d);
BoundValue corollary2_bound(const NumberFieldSpec& spec);

/// The corollary with factorials replaced by their Stirling/Robbins estimates. Needs d >= 16.
BoundValue stirling_form_bound(int n, int r2, int w, const BigInt& abs_d);
BoundValue stirling_form_bound(const NumberFieldSpec& spec);

}  // namespace hrb

#endif
