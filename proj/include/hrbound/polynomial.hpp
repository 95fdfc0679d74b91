#ifndef HRBOUND_POLYNOMIAL_HPP
#define HRBOUND_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hrb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over Z, constant term first. The zero
/// polynomial is the empty coefficient vector; trailing zeros are stripped.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const BigInt& leading() const { return coeffs_.back(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt operator[](int i) const;

    IntPoly derivative() const;
    BigInt evaluate(const BigInt& x) const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Res(f, g) as the determinant of the Sylvester matrix, by fraction-free
/// Bareiss elimination. Res(f, g) = 0 when either argument is zero.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f). Degree-1 inputs give 1.
BigInt poly_discriminant(const IntPoly& f);

/// Number of distinct real roots of a squarefree f, from the sign variations
/// of its Sturm chain at -inf and +inf (exact rational arithmetic).
int real_root_count(const IntPoly& f);

/// Natural log of |v| for v != 0, valid far beyond the double range.
double log_abs(const BigInt& v);

/// Integer square root if v is a perfect square, otherwise -1.
BigInt exact_sqrt_or_negative(const BigInt& v);

}  // namespace hrb

#endif
