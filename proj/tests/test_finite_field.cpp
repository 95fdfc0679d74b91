#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "hrbound/finite_field.hpp"

using namespace hrb;

namespace {

using Shape = std::vector<DegreeMultiplicity>;

// Every monic polynomial of degree d over F_p.
std::vector<FpPoly> monic_of_degree(std::uint64_t p, int d) {
    std::vector<FpPoly> out;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c.back() = 1;
    while (true) {
        out.emplace_back(p, c);
        int i = 0;
        while (i < d && ++c[static_cast<std::size_t>(i)] == p) c[static_cast<std::size_t>(i++)] = 0;
        if (i == d) break;
    }
    return out;
}

// Factorization by trial division against all monic polynomials of degree
// <= deg/2, smallest degree first, so every divisor found is irreducible.
std::map<std::vector<std::uint64_t>, int> trial_factor(FpPoly f) {
    std::map<std::vector<std::uint64_t>, int> out;
    const std::uint64_t p = f.modulus();
    f = f.monic();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        for (const auto& g : monic_of_degree(p, d)) {
            while (f.degree() >= d && (f % g).is_zero()) {
                ++out[g.coeffs()];
                f = f / g;
            }
        }
    }
    if (f.degree() >= 1) ++out[f.coeffs()];
    return out;
}

}  // namespace

TEST(FiniteField, ScalarArithmetic) {
    const std::uint64_t p = (1ULL << 61) - 1;
    EXPECT_EQ(mulmod(p - 1, p - 1, p), 1u);
    EXPECT_EQ(powmod(3, p - 1, p), 1u);
    EXPECT_EQ(mulmod(invmod(12345, p), 12345, p), 1u);
}

TEST(FiniteField, FactorShapeExamples) {
    const IntPoly f{-1, -1, 0, 1};
    EXPECT_EQ(factor_poly_mod_p(f, 2), (Shape{{3, 1}}));
    EXPECT_EQ(factor_poly_mod_p(f, 23), (Shape{{1, 1}, {1, 2}}));
    EXPECT_EQ(factor_poly_mod_p(IntPoly{-1, 0, 1}, 5), (Shape{{1, 1}, {1, 1}}));
    // x^3 - x - 1 = (x - 3)(x - 10)^2 mod 23.
    const auto full = factor_mod_p(f, 23, 1);
    ASSERT_EQ(full.size(), 2u);
}

TEST(FiniteField, InseparableSquarefreePart) {
    // x^3 + 2 = (x + 2)^3 over F_3; its derivative vanishes.
    EXPECT_EQ(factor_poly_mod_p(IntPoly{2, 0, 0, 1}, 3), (Shape{{1, 3}}));
    // (x^2 + 1)^5 over F_5 = ((x+2)(x+3))^5.
    IntPoly g{1, 0, 1};
    IntPoly h = g * g * g * g * g;
    EXPECT_EQ(factor_poly_mod_p(h, 5), (Shape{{1, 5}, {1, 5}}));
    // x^2 + 1 is irreducible mod 7, so its 7th power has one factor.
    h = g * g * g * g * g * g * g;
    EXPECT_EQ(factor_poly_mod_p(h, 7), (Shape{{2, 7}}));
}

TEST(FiniteField, MatchesTrialDivisionOracle) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (int trial = 0; trial < 80; ++trial) {
            const int deg = std::uniform_int_distribution<int>(1, p <= 5 ? 8 : 6)(rng);
            std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
            for (auto& v : c) v = std::uniform_int_distribution<int>(-20, 20)(rng);
            c.back() = 1;
            const IntPoly f(c);

            std::map<std::vector<std::uint64_t>, int> fast;
            for (const auto& fp : factor_mod_p(f, p, 99)) fast[fp.factor.coeffs()] += fp.multiplicity;
            EXPECT_EQ(fast, trial_factor(FpPoly::reduce(f, p))) << "p=" << p << " f=" << f.to_string();
        }
    }
}

TEST(FiniteField, ProductOfFactorsIsInput) {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {101ULL, 1009ULL, 65537ULL, 1000003ULL}) {
        for (int trial = 0; trial < 30; ++trial) {
            const int deg = std::uniform_int_distribution<int>(2, 10)(rng);
            std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
            for (auto& v : c) v = std::uniform_int_distribution<int>(-1000, 1000)(rng);
            c.back() = 1;
            const IntPoly f(c);
            FpPoly prod(p, {1});
            for (const auto& fp : factor_mod_p(f, p, trial))
                for (int m = 0; m < fp.multiplicity; ++m) prod = prod * fp.factor;
            EXPECT_EQ(prod, FpPoly::reduce(f, p));
        }
    }
}

TEST(FiniteField, ShapeIndependentOfSeed) {
    const IntPoly f{3, -7, 0, 2, 0, 0, 1};
    for (std::uint64_t p : {101ULL, 9973ULL, 1000003ULL}) {
        const auto ref = factor_poly_mod_p(f, p, 1);
        for (std::uint64_t seed = 2; seed < 8; ++seed) EXPECT_EQ(factor_poly_mod_p(f, p, seed), ref);
    }
}

TEST(FiniteField, RootCountMatchesEvaluation) {
    const IntPoly f{-1, -1, 0, 1};
    for (std::uint64_t p : {29ULL, 31ULL, 37ULL, 59ULL, 61ULL, 67ULL, 71ULL}) {
        int roots = 0;
        const auto fp = FpPoly::reduce(f, p);
        for (std::uint64_t x = 0; x < p; ++x) roots += fp.evaluate(x) == 0;
        int linear = 0;
        for (const auto& dm : factor_poly_mod_p(f, p)) linear += dm.degree == 1 ? dm.multiplicity : 0;
        EXPECT_EQ(linear, roots) << p;
    }
}
