#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hrbound/errors.hpp"
#include "hrbound/field_model.hpp"
#include "test_support.hpp"

using namespace hrb;
using hrb::testing::field;

namespace {

// disc(x^3 + a x + b) = -4a^3 - 27b^2.
BigInt depressed_cubic_disc(long long a, long long b) { return BigInt(-4) * a * a * a - BigInt(27) * b * b; }

IntPoly product_of(const std::vector<IntPoly>& factors) {
    IntPoly acc{1};
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

}  // namespace

TEST(Polynomial, DiscriminantExamples) {
    EXPECT_EQ(poly_discriminant(IntPoly{-1, -1, 0, 1}), BigInt(-23));
    EXPECT_EQ(poly_discriminant(IntPoly{-2, 0, 1}), BigInt(8));
    EXPECT_EQ(poly_discriminant(IntPoly{0, 0, 1}), BigInt(0));
    EXPECT_EQ(poly_discriminant(IntPoly{5, 1}), BigInt(1));
}

TEST(Polynomial, DepressedCubicMatchesClosedForm) {
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) EXPECT_EQ(poly_discriminant(IntPoly{b, a, 0, 1}), depressed_cubic_disc(a, b));
}

TEST(Polynomial, ResultantWithLinearFactorIsEvaluation) {
    const IntPoly g{7, -3, 0, 2, 1};
    for (long long a = -5; a <= 5; ++a) {
        // Res(x - a, g) = g(a) for monic linear first argument.
        EXPECT_EQ(resultant(IntPoly{-a, 1}, g), g.evaluate(a));
    }
}

TEST(Polynomial, DiscriminantIsMultiplicative) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(1, 4);
    int checked = 0;
    while (checked < 60) {
        auto random_monic = [&] {
            std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = coef(rng);
            c.back() = 1;
            return IntPoly(c);
        };
        const IntPoly f = random_monic();
        const IntPoly g = random_monic();
        const BigInt res = resultant(f, g);
        if (res == 0) continue;
        EXPECT_EQ(poly_discriminant(f * g), poly_discriminant(f) * poly_discriminant(g) * res * res)
            << f.to_string() << " | " << g.to_string();
        ++checked;
    }
}

TEST(Polynomial, RealRootCountOnConstructedPolynomials) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<int> roots;
        std::uniform_int_distribution<int> pick(-9, 9);
        const int linear = std::uniform_int_distribution<int>(0, 4)(rng);
        while (static_cast<int>(roots.size()) < linear) {
            const int r = pick(rng);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        const int quadratics = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<IntPoly> factors;
        for (int r : roots) factors.push_back(IntPoly{-r, 1});
        for (int q = 0; q < quadratics; ++q) factors.push_back(IntPoly{q + 1, 0, 1});  // x^2 + c, c > 0, distinct
        if (factors.empty()) continue;
        EXPECT_EQ(real_root_count(product_of(factors)), linear);
    }
}

TEST(Polynomial, LogAbsBeyondDoubleRange) {
    BigInt big = 1;
    for (int i = 0; i < 2000; ++i) big *= 10;
    EXPECT_NEAR(log_abs(big), 2000 * std::log(10.0), 1e-9);
    EXPECT_NEAR(log_abs(BigInt(-23)), std::log(23.0), 1e-15);
}

TEST(FieldModel, SignatureExamples) {
    EXPECT_EQ(signature_of(IntPoly{-1, -1, 0, 1}), (Signature{1, 1}));
    EXPECT_EQ(signature_of(IntPoly{-1, -3, 0, 1}), (Signature{3, 0}));
    EXPECT_EQ(signature_of(IntPoly{1, 0, 0, 0, 1}), (Signature{0, 2}));
    EXPECT_THROW(signature_of(IntPoly{1, 2, 1}), DomainError);
}

TEST(FieldModel, SignatureParityProperty) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = coef(rng);
        c.back() = 1;
        const IntPoly f(c);
        if (poly_discriminant(f) == 0) continue;
        const Signature s = signature_of(f);
        EXPECT_EQ(s.r1 + 2 * s.r2, n);
        EXPECT_EQ((s.r1 - n) % 2, 0);
    }
}

TEST(FieldModel, KappaExample) {
    const auto k = kappa_from_invariants(field("cubic_23"));
    EXPECT_NEAR(k.value, 0.36840856827538393, 1e-12);
    EXPECT_EQ(k.uncertainty, 0.0);
}

TEST(FieldModel, KappaRoundTripProperty) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        NumberFieldSpec s;
        s.degree = std::uniform_int_distribution<int>(2, 12)(rng);
        s.signature.r2 = std::uniform_int_distribution<int>(0, s.degree / 2)(rng);
        s.signature.r1 = s.degree - 2 * s.signature.r2;
        s.roots_of_unity = s.signature.r1 > 0 ? 2 : 2 * std::uniform_int_distribution<int>(1, 6)(rng);
        s.abs_discriminant = BigInt(std::uniform_int_distribution<long long>(3, 1000000000LL)(rng));
        s.class_number = BigInt(std::uniform_int_distribution<int>(1, 500)(rng));
        s.regulator = std::uniform_real_distribution<double>(0.05, 500.0)(rng);
        const auto k = kappa_from_invariants(s);
        const double hr = hr_from_kappa(k, s);
        EXPECT_NEAR(hr, static_cast<double>(*s.class_number) * *s.regulator, 1e-12 * hr);
    }
}

TEST(FieldModel, KappaZeroGivesZero) {
    EXPECT_EQ(hr_from_kappa(Kappa{0.0, 0.0}, field("cubic_23")), 0.0);
}

TEST(FieldModel, KappaNeedsInvariants) {
    EXPECT_THROW(kappa_from_invariants(field("quartic_283")), PreconditionError);
}

TEST(FieldModel, CorpusValidates) {
    for (const auto& spec : hrb::testing::corpus()) {
        EXPECT_TRUE(validate_spec(spec).empty()) << spec.name;
        EXPECT_EQ(index_witness(spec), BigInt(1)) << spec.name;
    }
}

TEST(FieldModel, ValidationFailures) {
    auto base = field("cubic_23");

    auto bad = base;
    bad.signature = {3, 0};
    auto v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "signature-polynomial mismatch");

    bad = base;
    bad.signature = {2, 1};
    v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "signature-degree mismatch");

    bad = base;
    bad.roots_of_unity = 4;
    v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "roots-of-unity violation");

    bad = base;
    bad.abs_discriminant = 1;
    v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "discriminant floor");

    bad = base;
    bad.abs_discriminant = 31;
    v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "discriminant-polynomial mismatch");

    bad = base;
    bad.regulator = -1.0;
    v = validate_spec(bad);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v.front().invariant, "invariant positivity");

    EXPECT_FALSE(validate_spec(field("rational")).empty());
}

TEST(FieldModel, DiscriminantBelowKnownMinimumWarns) {
    auto s = field("cubic_23");
    EXPECT_TRUE(spec_warnings(s).empty());
    // x^4 + 1 has |disc| = 256, the field Q(zeta_8); the degree-4 record is 117.
    NumberFieldSpec q;
    q.degree = 4;
    q.signature = {0, 2};
    q.abs_discriminant = 100;
    q.roots_of_unity = 8;
    q.poly = IntPoly{1, 0, 0, 0, 1};
    EXPECT_FALSE(spec_warnings(q).empty());
}

TEST(FieldModel, NonMonogenicWitness) {
    NumberFieldSpec s;
    s.degree = 2;
    s.signature = {2, 0};
    s.abs_discriminant = 8;
    s.poly = IntPoly{-8, 0, 1};  // disc 32 = 8 * 2^2
    EXPECT_TRUE(validate_spec(s).empty());
    EXPECT_EQ(index_witness(s), BigInt(2));
    s.abs_discriminant = 16;  // 32 / 16 is not a square
    EXPECT_THROW(index_witness(s), ValidationError);
}

TEST(FieldModel, JsonRoundTrip) {
    const auto s = field("cubic_81");
    const auto back = parse_field_spec(field_spec_to_json(s));
    EXPECT_EQ(back.name, s.name);
    EXPECT_EQ(back.degree, s.degree);
    EXPECT_EQ(back.signature, s.signature);
    EXPECT_EQ(back.abs_discriminant, s.abs_discriminant);
    EXPECT_EQ(back.poly, s.poly);
    EXPECT_EQ(back.class_number, s.class_number);
    EXPECT_EQ(back.regulator, s.regulator);
}

TEST(FieldModel, JsonRejectsUnknownKeysAndMissingW) {
    auto doc = field_spec_to_json(field("cubic_23"));
    doc["colour"] = "blue";
    EXPECT_THROW(parse_field_spec(doc), ValidationError);

    nlohmann::json imag = {{"degree", 4}, {"signature", {0, 2}}, {"abs_discriminant", "256"},
                           {"poly", {"1", "0", "0", "0", "1"}}};
    EXPECT_THROW(parse_field_spec(imag), ValidationError);
    imag["w"] = 8;
    EXPECT_EQ(parse_field_spec(imag).roots_of_unity, 8);
}

TEST(FieldModel, JsonLargeDiscriminantString) {
    nlohmann::json doc = {{"degree", 2}, {"signature", {2, 0}}, {"abs_discriminant", "123456789012345678901234567890"},
                          {"poly", {"-1", "0", "1"}}};
    const auto s = parse_field_spec(doc);
    EXPECT_EQ(s.abs_discriminant.str(), "123456789012345678901234567890");
}
