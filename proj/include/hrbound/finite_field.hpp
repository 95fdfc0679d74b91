#ifndef HRBOUND_FINITE_FIELD_HPP
#define HRBOUND_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "hrbound/polynomial.hpp"

namespace hrb {

/// Polynomials over the prime field F_p, constant term first, no trailing
/// zeros. p must be prime and below 2^63.
class FpPoly {
public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static FpPoly reduce(const IntPoly& f, std::uint64_t p);
    static FpPoly monomial(std::uint64_t p, int degree, std::uint64_t c = 1);

    std::uint64_t modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    std::uint64_t operator[](int i) const { return i < 0 || i > degree() ? 0 : c_[static_cast<std::size_t>(i)]; }

    FpPoly monic() const;
    FpPoly derivative() const;
    std::uint64_t evaluate(std::uint64_t x) const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

    /// Quotient and remainder by a nonzero divisor.
    static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b);

private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

struct FactorPower {
    FpPoly factor;
    int multiplicity;
};

/// Square-free decomposition of a monic polynomial: f = prod g_i^{m_i}
/// with each g_i squarefree, pairwise coprime.
std::vector<FactorPower> squarefree_factorization(const FpPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f);

/// Splits a monic squarefree product of degree-d irreducibles into its
/// factors. Deterministic for p < 50 (trial roots for d = 1, enumerated
/// splitting polynomials otherwise); seeded Cantor-Zassenhaus above.
std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, int d, std::uint64_t seed);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, multiplicity, coefficients).
std::vector<FactorPower> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed);

struct DegreeMultiplicity {
    int degree;
    int multiplicity;
    friend auto operator<=>(const DegreeMultiplicity&, const DegreeMultiplicity&) = default;
};

/// The multiset of (degree, multiplicity) of the irreducible factors of
/// f mod p, sorted ascending.
std::vector<DegreeMultiplicity> factor_poly_mod_p(const IntPoly& f, std::uint64_t p,
                                                  std::uint64_t seed = 0x5eed5eedULL);

}  // namespace hrb

#endif
