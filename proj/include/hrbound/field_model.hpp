#ifndef HRBOUND_FIELD_MODEL_HPP
#define HRBOUND_FIELD_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hrbound/polynomial.hpp"

namespace hrb {

struct Signature {
    int r1 = 0;
    int r2 = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// A number field described by its computable invariants. The discriminant
/// is stored as |d_K|; the sign (-1)^{r2} is implied by the signature.
struct NumberFieldSpec {
    std::string name;
    int degree = 0;
    Signature signature;
    BigInt abs_discriminant;
    int roots_of_unity = 2;
    IntPoly poly;
    std::optional<BigInt> class_number;
    std::optional<double> regulator;

    double log_discriminant() const { return log_abs(abs_discriminant); }
};

/// Residue of zeta_K at s = 1, with the half-width of its confidence
/// interval (zero when derived from exact invariants).
struct Kappa {
    double value = 0.0;
    double uncertainty = 0.0;
};

Signature signature_of(const IntPoly& f);

/// kappa = h R 2^n (pi/2)^{r2} / (w sqrt(d)). Requires h and R.
Kappa kappa_from_invariants(const NumberFieldSpec& spec);

/// h R = (w / 2^n) (2/pi)^{r2} sqrt(d) kappa.
double hr_from_kappa(const Kappa& kappa, const NumberFieldSpec& spec);

/// log of hr_from_kappa for a kappa given by its natural log.
double log_hr_from_log_kappa(double log_kappa, int n, int r2, int w, double log_d);

struct Violation {
    std::string invariant;
    std::string detail;
};

/// Empty iff every structural invariant holds, including agreement of the
/// Sturm signature and of disc(f) = (-1)^{r2} d_K q^2 for some integer q.
std::vector<Violation> validate_spec(const NumberFieldSpec& spec);

/// Non-fatal remarks, e.g. |d_K| below the smallest known discriminant of its degree.
std::vector<std::string> spec_warnings(const NumberFieldSpec& spec);

/// Square root of disc(f) / ((-1)^{r2} d_K); the index [O_K : Z[theta]]
/// divides it. Throws ValidationError when the ratio is not a square.
BigInt index_witness(const NumberFieldSpec& spec);

/// Reads the field JSON document; unknown keys are rejected.
NumberFieldSpec parse_field_spec(const nlohmann::json& doc);
NumberFieldSpec load_field_spec(const std::string& path);
nlohmann::json field_spec_to_json(const NumberFieldSpec& spec);

}  // namespace hrb

#endif
