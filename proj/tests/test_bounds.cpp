#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hrbound/bounds.hpp"
#include "hrbound/errors.hpp"
#include "test_support.hpp"

using namespace hrb;
using hrb::testing::rel_close;

namespace {

double value_of(const BoundValue& b) { return *b.value.to_double(); }

// The corollary's factorial form with both offsets set to the exact value
// (n+1)/4 log Theta + (n^2-1)/4 log log d; equals the main bound at Lee's constants.
double exact_offset_form(int n, int r2, int w, double d) {
    const double log_d = std::log(d);
    const double offset = (n + 1) / 4.0 * lee_theta(n).log_magnitude + (n * n - 1) / 4.0 * std::log(log_d);
    const double a = 0.25 * log_d + offset;
    const double bracket = std::pow(a, n - 1) / std::tgamma(n) - std::pow(a, n - 2) / std::tgamma(n - 1);
    return 1.5 * w * std::pow(2.0 / std::numbers::pi, r2) * std::sqrt(d) * bracket;
}

}  // namespace

TEST(Bounds, GammaAndGate) {
    EXPECT_EQ(gamma_n(3), 214);
    EXPECT_EQ(gamma_n(4), 10);
    EXPECT_EQ(gamma_n(40), 10);
    EXPECT_THROW(gamma_n(2), DomainError);

    auto g = check_hypothesis(3, 0.5, 214.0);
    EXPECT_TRUE(g.passed);
    EXPECT_EQ(g.floor_value, 214.0);
    EXPECT_FALSE(check_hypothesis(3, 0.5, 213.9).passed);
    EXPECT_FALSE(check_hypothesis(3, 0.7, 500.0).alpha_ok);
    // alpha n + 1/(4 alpha^2) dominates gamma_n for small alpha.
    g = check_hypothesis(4, 0.1, 20.0);
    EXPECT_NEAR(g.floor_value, 25.4, 1e-12);
    EXPECT_FALSE(g.passed);
}

TEST(Bounds, MainBoundExample) {
    const auto b = theorem1_bound(3, 1, 2, BigInt(23), 0.5, 214.0);
    EXPECT_NEAR(value_of(b), 207771.0020435, 1e-6);
    EXPECT_GT(value_of(b), 1.0 * 0.281199);
    EXPECT_EQ(b.formula, Formula::theorem1);
    EXPECT_EQ(b.inputs.abs_discriminant, "23");
    EXPECT_EQ(b.inputs.alpha, 0.5);
}

TEST(Bounds, MainBoundRefusesFailedGate) {
    EXPECT_THROW(theorem1_bound(3, 1, 2, BigInt(23), 0.5, 32.2), HypothesisFailed);
    EXPECT_NO_THROW(theorem1_bound(3, 1, 2, BigInt(23), 0.5, 32.2, true));
}

TEST(Bounds, KappaMajorantExample) {
    EXPECT_NEAR(*e4_kappa_bound(3, 0.5, 214.0).to_double(), 272208.0, 1e-8);
}

TEST(Bounds, KappaMajorantMatchesMainBound) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 20)(rng);
        const int r2 = std::uniform_int_distribution<int>(0, n / 2)(rng);
        const int w = r2 * 2 == n ? 2 * std::uniform_int_distribution<int>(1, 5)(rng) : 2;
        const double alpha = std::uniform_real_distribution<double>(0.01, 2.0 / n - 1e-6)(rng);
        const double floor = check_hypothesis(n, alpha, 0.0).floor_value;
        const double log_c = floor * std::uniform_real_distribution<double>(1.0, 5.0)(rng);
        const BigInt d(std::uniform_int_distribution<long long>(3, 1LL << 50)(rng));
        const LogValue main = theorem1_bound(n, r2, w, d, alpha, log_c).value;
        const double log_hr = log_hr_from_log_kappa(e4_kappa_bound(n, alpha, log_c).log_magnitude, n, r2, w, log_abs(d));
        EXPECT_NEAR(main.log_magnitude, log_hr, 1e-12);
    }
}

TEST(Bounds, MainBoundMonotonicity) {
    const BigInt d(23);
    double prev = 0.0;
    for (double lc = 214.0; lc < 400.0; lc += 7.0) {
        const double v = value_of(theorem1_bound(3, 1, 2, d, 0.5, lc));
        EXPECT_GT(v, prev);
        prev = v;
    }
    prev = 0.0;
    for (long long dd : {23, 50, 1000, 100000}) {
        const double v = value_of(theorem1_bound(3, 1, 2, BigInt(dd), 0.5, 214.0));
        EXPECT_GT(v, prev);
        prev = v;
    }
    // Each complex place multiplies by 2/pi.
    const double r0 = value_of(theorem1_bound(4, 0, 2, d, 0.3, 50.0));
    const double r1 = value_of(theorem1_bound(4, 1, 2, d, 0.3, 50.0));
    EXPECT_NEAR(r1 / r0, 2.0 / std::numbers::pi, 1e-13);
}

TEST(Bounds, HugeValuesStayFinite) {
    BigInt d = 1;
    for (int i = 0; i < 500; ++i) d *= 10;
    const auto b = theorem1_bound(60, 10, 2, d, 0.02, 5000.0);
    EXPECT_TRUE(std::isfinite(b.value.log_magnitude));
    EXPECT_FALSE(b.value.to_double().has_value());
}

TEST(Bounds, LouboutinExample) {
    const auto b = louboutin_bound(3, 1, 2, BigInt(23));
    EXPECT_NEAR(value_of(b), 3.465493102029925, 1e-9);
    EXPECT_GT(value_of(b), 0.281199);
}

TEST(Bounds, LeeThetaAndConstants) {
    EXPECT_NEAR(lee_theta(3).log_magnitude, 29.159532078412125, 1e-12);
    EXPECT_TRUE(rel_close(*lee_theta(3).to_double(), 4.611305301e12, 1e-9));
    const auto lc = lee_constants(3, BigInt(23));
    EXPECT_DOUBLE_EQ(lc.alpha, 0.5);
    EXPECT_NEAR(lc.log_c, 32.228979244983957, 1e-12);
    EXPECT_FALSE(check_hypothesis(3, lc.alpha, lc.log_c).passed);
}

TEST(Bounds, ThetaSandwich) {
    for (int n = 3; n <= 50; ++n) {
        const double mid = (n + 1) / 4.0 * lee_theta(n).log_magnitude;
        const double n2 = n * n * std::log(static_cast<double>(n));
        EXPECT_LT(0.5 * n2, mid) << n;
        EXPECT_LT(mid, 3.0 * n2) << n;
    }
    const double upper3 = 27.0 * std::log(3.0);
    EXPECT_LT(upper3 - lee_theta(3).log_magnitude, 0.02 * upper3);
}

TEST(Bounds, CorollaryExample) {
    const auto off = corollary_offsets(3, BigInt(23));
    EXPECT_NEAR(off.upper, 31.948105406628505, 1e-12);
    EXPECT_NEAR(off.lower, 7.229328911596037, 1e-12);
    EXPECT_NEAR(off.upper - off.lower, 2.5 * 9 * std::log(3.0), 1e-12);
    EXPECT_NEAR(value_of(corollary2_bound(3, 1, 2, BigInt(23))), 4833.1948136662665, 1e-8);
    EXPECT_NEAR(value_of(stirling_form_bound(3, 1, 2, BigInt(23))), 5040.4544342156200, 1e-8);
    EXPECT_THROW(corollary2_bound(3, 1, 2, BigInt(15)), DomainError);
    EXPECT_THROW(stirling_form_bound(3, 1, 2, BigInt(15)), DomainError);
}

TEST(Bounds, CorollaryBracketsMainBoundAtLeeConstants) {
    for (int n = 3; n <= 8; ++n) {
        for (double d : {16.0, 100.0, 1e4, 1e8, 1e12}) {
            const BigInt bd(static_cast<long long>(d));
            const auto lee = lee_constants(n, bd);
            const double main = value_of(theorem1_bound(n, 0, 2, bd, lee.alpha, lee.log_c, true));
            EXPECT_TRUE(rel_close(main, exact_offset_form(n, 0, 2, d), 1e-9)) << n << " " << d;
            EXPECT_GE(value_of(corollary2_bound(n, 0, 2, bd)), main) << n << " " << d;
        }
    }
}

TEST(Bounds, StirlingDominatesCorollary) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        const int r2 = std::uniform_int_distribution<int>(0, n / 2)(rng);
        const BigInt d(static_cast<long long>(std::exp(std::uniform_real_distribution<double>(std::log(16.0), std::log(1e12))(rng))));
        EXPECT_GE(stirling_form_bound(n, r2, 2, d).value, corollary2_bound(n, r2, 2, d).value);
    }
}

TEST(Bounds, LogAndPlainArithmeticAgree) {
    for (int n = 3; n <= 10; ++n) {
        const double alpha = 1.0 / n;
        const double log_c = check_hypothesis(n, alpha, 0).floor_value + 3.0;
        const double a = log_c / (2 * alpha);
        const double plain = 3.0 * std::sqrt(1000.0) *
                             (std::pow(a, n - 1) / std::tgamma(n) - std::pow(a, n - 2) / std::tgamma(n - 1));
        EXPECT_TRUE(rel_close(value_of(theorem1_bound(n, 0, 2, BigInt(1000), alpha, log_c)), plain, 1e-12)) << n;
    }
}

TEST(Bounds, FormulaNames) {
    for (auto f : {Formula::theorem1, Formula::e4_kappa, Formula::corollary2, Formula::stirling, Formula::louboutin})
        EXPECT_EQ(formula_from_string(to_string(f)), f);
    EXPECT_THROW(formula_from_string("nope"), ValidationError);
}

TEST(LogValue, Arithmetic) {
    const auto a = LogValue::from_double(5.0);
    const auto b = LogValue::from_double(3.0);
    EXPECT_NEAR(*(a - b).to_double(), 2.0, 1e-14);
    EXPECT_NEAR(*(b - a).to_double(), -2.0, 1e-14);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_LT(b - a, LogValue::zero());
    EXPECT_LT(LogValue::from_log(1000.0), LogValue::from_log(1001.0));
    EXPECT_GT(-LogValue::from_log(1000.0), -LogValue::from_log(1001.0));
}
