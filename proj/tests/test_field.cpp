#include <fatpoints/field.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fatpoints;

namespace {

Scalar random_scalar(const FieldPtr &f, std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    std::vector<mpq_class> c(f->degree());
    for (auto &x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return Scalar::from_coefficients(f, c);
}

} // namespace

TEST(Field, CyclotomicPolynomials) {
    EXPECT_EQ(cyclotomic_field(3)->modulus(), (detail::ZPoly{1, 1, 1}));
    EXPECT_EQ(cyclotomic_field(6)->modulus(), (detail::ZPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_field(12)->modulus(), (detail::ZPoly{1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 30; ++n)
        EXPECT_EQ(cyclotomic_field(n)->degree(), detail::euler_phi(n)) << n;
    EXPECT_EQ(rational_field()->degree(), 1u);
}

TEST(Field, RejectsZeroConductor) {
    EXPECT_THROW(make_field(Field::Kind::cyclotomic, 0), std::invalid_argument);
    EXPECT_THROW(Field(Field::Kind::rational, 5), std::invalid_argument);
}

TEST(Field, SmallConductorsCollapseToRationals) {
    const auto q = rational_field();
    const auto c1 = cyclotomic_field(1), c2 = cyclotomic_field(2);
    EXPECT_TRUE(q->compatible(*c2));
    EXPECT_EQ(primitive_root(c2), Scalar(q, -1));
    EXPECT_EQ(primitive_root(c1), Scalar(q, 1));
    EXPECT_THROW(Scalar(q, 1) + primitive_root(cyclotomic_field(3)), FieldMismatch);
}

TEST(Field, RationalArithmetic) {
    const auto q = rational_field();
    EXPECT_EQ(Scalar::parse(q, "2/4") + Scalar::parse(q, "1/4"), Scalar::parse(q, "3/4"));
    EXPECT_EQ(Scalar::parse(q, "-6/4").to_string(), "-3/2");
    EXPECT_THROW(Scalar(q, 0).inverse(), DivisionByZero);
    EXPECT_THROW(Scalar(q, 1) / Scalar(q, 0), DivisionByZero);
}

TEST(Field, CyclotomicIdentities) {
    const auto f3 = cyclotomic_field(3);
    const Scalar z3 = primitive_root(f3);
    EXPECT_TRUE((z3 * z3 + z3 + Scalar(f3, 1)).is_zero());
    const auto f5 = cyclotomic_field(5);
    const Scalar z5 = primitive_root(f5);
    EXPECT_EQ(z5.inverse(), z5.pow(4));
    const auto f6 = cyclotomic_field(6);
    const Scalar z6 = primitive_root(f6);
    EXPECT_TRUE((z6 * z6 - z6 + Scalar(f6, 1)).is_zero());
    EXPECT_THROW(primitive_root(rational_field()), std::invalid_argument);
}

TEST(Field, PrimitiveRootOrder) {
    for (unsigned n = 1; n <= 12; ++n) {
        const auto f = cyclotomic_field(n);
        const Scalar z = primitive_root(f);
        EXPECT_TRUE(z.pow(n).is_one()) << n;
        for (unsigned k = 1; k < n; ++k)
            EXPECT_FALSE(z.pow(k).is_one()) << n << " " << k;
    }
}

TEST(Field, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(11);
    for (unsigned n : {1u, 3u, 4u, 5u, 7u, 12u}) {
        const auto f = n == 1 ? rational_field() : cyclotomic_field(n);
        for (int t = 0; t < 1000; ++t) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero()) {
                ASSERT_TRUE((a * a.inverse()).is_one());
            }
        }
    }
}

TEST(Field, MultiplicationAgreesWithComplexEmbedding) {
    std::mt19937_64 rng(5);
    for (unsigned n : {3u, 5u, 8u, 9u, 15u}) {
        const auto f = cyclotomic_field(n);
        for (int t = 0; t < 200; ++t) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng);
            const auto lhs = oracle::embed(a * b), rhs = oracle::embed(a) * oracle::embed(b);
            ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-6 * (1 + std::abs(rhs)));
            if (!a.is_zero()) {
                const auto inv = oracle::embed(a.inverse());
                ASSERT_NEAR(std::abs(inv * oracle::embed(a) - 1.0), 0.0, 1e-6);
            }
        }
    }
}

TEST(Field, ParseAndPrint) {
    const auto f = cyclotomic_field(5);
    const Scalar s = Scalar::parse(f, "1-z^2");
    EXPECT_EQ(s.to_string(), "1-z^2");
    EXPECT_EQ(Scalar::parse(f, "-2/3*z").to_string(), "-2/3*z");
    EXPECT_EQ(Scalar::parse(f, "z^5"), Scalar(f, 1));
    // z^4 = -1 - z - z^2 - z^3
    EXPECT_EQ(Scalar::parse(f, "z^4").to_string(), "-1-z-z^2-z^3");
    EXPECT_EQ(Scalar::parse(f, "3"), Scalar(f, 3));
    EXPECT_THROW(Scalar::parse(f, "z^"), ScalarParseError);
    EXPECT_THROW(Scalar::parse(f, ""), ScalarParseError);
    EXPECT_THROW(Scalar::parse(f, "1/0"), ScalarParseError);
    const auto q = rational_field();
    EXPECT_THROW(Scalar::parse(q, "z"), ScalarParseError);
    EXPECT_THROW(Scalar::parse(q, "1.5"), ScalarParseError);
    EXPECT_THROW(Scalar::parse(q, "+1"), ScalarParseError);
    EXPECT_EQ(Scalar::parse(q, "-12/8"), Scalar(q, mpq_class(-3, 2)));
}

TEST(Field, CanonicalFormIsIdempotent) {
    std::mt19937_64 rng(3);
    const auto f = cyclotomic_field(7);
    for (int t = 0; t < 100; ++t) {
        const Scalar a = random_scalar(f, rng);
        const Scalar again = Scalar::parse(f, a.to_string());
        EXPECT_EQ(again, a);
        EXPECT_EQ(again.to_string(), a.to_string());
        // re-reducing an already reduced vector changes nothing
        EXPECT_EQ(Scalar::from_coefficients(f, a.coefficients()).coefficients(), a.coefficients());
    }
}
