#ifndef HRBOUND_IDEAL_COUNTER_HPP
#define HRBOUND_IDEAL_COUNTER_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hrbound/field_model.hpp"

namespace hrb {

struct PrimeIdealData {
    int ramification;  // e
    int residue_degree;  // f
    friend bool operator==(const PrimeIdealData&, const PrimeIdealData&) = default;
};

/// The prime ideals above a rational prime p, as (e, f) pairs with sum e f = n.
struct LocalShape {
    std::uint64_t prime = 0;
    std::vector<PrimeIdealData> ideals;

    int degree() const;
    friend bool operator==(const LocalShape&, const LocalShape&) = default;
};

/// User-supplied splitting data for primes that may divide the index.
using ShapeOverrides = std::map<std::uint64_t, LocalShape>;

ShapeOverrides parse_overrides(const nlohmann::json& doc);
ShapeOverrides load_overrides(const std::string& path);

/// Piltz divisor function: ordered n-tuples of positive integers with product m.
std::uint64_t tau(int n, std::uint64_t m);

/// Dedekind's theorem: one prime ideal (e_i, f_i) per irreducible factor of
/// degree f_i and multiplicity e_i of f mod p. Throws IndexPrimeError when p
/// divides `index_witness` and no override is present.
LocalShape local_shape(const NumberFieldSpec& spec, std::uint64_t p, const ShapeOverrides& overrides = {},
                       std::uint64_t seed = 0x5eed5eedULL);
/// Same, with the index witness precomputed.
LocalShape local_shape(const NumberFieldSpec& spec, const BigInt& witness, std::uint64_t p,
                       const ShapeOverrides& overrides, std::uint64_t seed);

/// r_K(p^k): the coefficient of t^k in prod_i 1 / (1 - t^{f_i}).
std::uint64_t prime_power_count(const LocalShape& shape, int k);

/// Exact ideal counts r_K(m), 1 <= m <= limit, with 64-bit prefix sums.
class CoefficientTable {
public:
    CoefficientTable(std::vector<std::uint32_t> counts);

    std::uint64_t limit() const noexcept { return counts_.size() - 1; }
    /// r_K(m); m in [1, limit].
    std::uint32_t r(std::uint64_t m) const { return counts_[m]; }
    /// sum_{j <= m} r_K(j); m in [0, limit].
    std::uint64_t partial_sum(std::uint64_t m) const { return sums_[m]; }
    /// r_K(1..limit) as a span starting at m = 1.
    std::span<const std::uint32_t> counts() const { return {counts_.data() + 1, counts_.size() - 1}; }

    void write_csv(std::ostream& out) const;

private:
    std::vector<std::uint32_t> counts_;  // index 0 unused (zero)
    std::vector<std::uint64_t> sums_;
};

struct SieveOptions {
    ShapeOverrides overrides;
    std::uint64_t seed = 0x5eed5eedULL;
    unsigned threads = 1;
};

/// Primes up to `limit` in ascending order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Multiplicative sieve over the local factors of every prime p <= limit.
/// Output is identical for every thread count.
CoefficientTable sieve_coefficients(const NumberFieldSpec& spec, std::uint64_t limit,
                                    const SieveOptions& options = {});

/// Delta_K(x) = S(x) - kappa x on both sides of every integer jump.
class DeltaProfile {
public:
    DeltaProfile(const CoefficientTable& table, const Kappa& kappa);

    std::uint64_t limit() const noexcept { return at_.size(); }
    /// S(x) - kappa x, x in [1, limit].
    double delta_at(std::uint64_t x) const { return at_[x - 1]; }
    /// S(x - 1) - kappa x, the left limit at x.
    double delta_left(std::uint64_t x) const { return left_[x - 1]; }
    const Kappa& kappa() const noexcept { return kappa_; }
    /// max over checkpoints of max(|delta_at|, |delta_left|): the exact sup
    /// of |Delta_K| over real x in [1, limit].
    double sup_statistic() const noexcept { return sup_; }

    void write_csv(std::ostream& out) const;

private:
    std::vector<double> at_;
    std::vector<double> left_;
    Kappa kappa_;
    double sup_ = 0.0;
};

inline DeltaProfile delta_profile(const CoefficientTable& table, const Kappa& kappa) { return {table, kappa}; }

/// Smallest C with |Delta_K(x)| <= C x^{1 - alpha} at every checkpoint.
/// Certifies the range [1, limit] only.
double empirical_C(const DeltaProfile& profile, double alpha);

/// kappa ~ S(X)/X with half-width C_hyp X^{-alpha}. Requires X >= 1000.
Kappa estimate_kappa(const CoefficientTable& table, double alpha, double c_hyp);

}  // namespace hrb

#endif
