#include <fatpoints/configs.hpp>
#include <fatpoints/unexpected.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fatpoints;

namespace {

const FieldPtr Q = rational_field();

GeneralPointStrategy sampled(std::uint64_t seed) {
    GeneralPointStrategy s;
    s.seed = seed;
    return s;
}

// dim I(Z + mP)_d by direct interpolation at one rational point
std::size_t oracle_dim(const PointConfiguration &z, const ProjectivePoint &p, unsigned m, unsigned d) {
    std::vector<oracle::RationalFatPoint> pts;
    for (const auto &q : z)
        pts.push_back({q[0].constant_term(), q[1].constant_term(), q[2].constant_term(), 1});
    pts.push_back({p[0].constant_term(), p[1].constant_term(), p[2].constant_term(), m});
    return oracle::interpolation_dim(pts, d);
}

Matrix<Scalar> random_invertible(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> v(-3, 3);
    while (true) {
        Matrix<Scalar> t(3, 3, Scalar(Q));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                t(i, j) = Scalar(Q, v(rng));
        if (!det3(t).is_zero())
            return t;
    }
}

} // namespace

TEST(Strategy, Validation) {
    GeneralPointStrategy s;
    s.samples = 0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s.samples = 1;
    s.height = 1;
    EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(Strategy, SamplesAreDeterministicAndAvoidZ) {
    const auto ex = example_quartic_config();
    const FatPointScheme x(ex);
    for (std::size_t i = 0; i < 20; ++i) {
        GeneralPointStrategy s = sampled(5);
        s.height = 2; // small box: collisions with Z are likely and must be skipped
        const auto p = general_point(x, s, i);
        EXPECT_EQ(p, general_point(x, s, i));
        EXPECT_FALSE(ex.contains(p));
    }
}

TEST(Detect, ExampleQuartic) {
    const auto ex = example_quartic_config();
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        const auto r = detect_unexpected(ex, 4, sampled(seed));
        EXPECT_EQ(r.dim_z, 6u);
        EXPECT_EQ(r.generic_dim, 1u);
        EXPECT_EQ(r.threshold, 0u);
        EXPECT_TRUE(r.unexpected);
        ASSERT_TRUE(r.witness && r.witness_point);
        EXPECT_TRUE(vanishes_to_order(*r.witness, *r.witness_point, 3));
        for (const auto &p : ex)
            EXPECT_TRUE(vanishes_to_order(*r.witness, p, 1));
        for (const auto &s : r.samples)
            EXPECT_EQ(s.dim, oracle_dim(ex, s.point, 3, 4));
    }
    const auto c = detect_unexpected(ex, 4, GeneralPointStrategy::certified_with(0));
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(c.generic_dim, 1u);
    EXPECT_TRUE(c.unexpected);
}

TEST(Detect, RandomNinePointsAndFermat) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto z = random_config(9, 100, seed);
        const auto r = detect_unexpected(z, 4, sampled(seed));
        EXPECT_FALSE(r.unexpected);
        EXPECT_EQ(r.generic_dim, 0u);
        EXPECT_EQ(oracle_dim(z, r.samples[0].point, 3, 4), 0u);
    }
    const auto f3 = dual_fermat(3);
    for (unsigned d = 2; d <= 4; ++d)
        EXPECT_FALSE(detect_unexpected(f3, d, sampled(0)).unexpected) << d;
    EXPECT_THROW(detect_unexpected(f3, 1, sampled(0)), std::invalid_argument);
}

TEST(Multiplicity, W5AndExample) {
    for (long a : {2L, 3L, -1L}) {
        const auto w5 = family(Family::w5, {Scalar(Q, a)});
        EXPECT_EQ(multiplicity_dim(w5, 1, sampled(0)), 0u);
        EXPECT_EQ(multiplicity_dim(w5, 2, sampled(0)), 2u);
        const auto st = splitting_type(w5, sampled(0));
        EXPECT_EQ(st.a, 2u);
        EXPECT_EQ(st.b, 2u);
        EXPECT_TRUE(st.balanced);
        EXPECT_EQ(is_semistable_gate(w5, sampled(0)), Balance::balanced);
    }
    const auto ex = example_quartic_config();
    EXPECT_EQ(multiplicity_dim(ex, 3, sampled(0)), 1u);
    const auto st = splitting_type(ex, sampled(0));
    EXPECT_EQ(st.a, 3u);
    EXPECT_EQ(st.b, 5u);
    EXPECT_FALSE(st.balanced);
    EXPECT_EQ(is_semistable_gate(ex, sampled(0)), Balance::unbalanced);
    EXPECT_EQ(is_semistable_gate(dual_fermat(3), sampled(0)), Balance::balanced);
    // m(j) against direct interpolation at the first sample
    for (unsigned j = 0; j < 9; ++j) {
        const auto g = generic_dim(FatPointScheme(ex), j, j + 1, sampled(0));
        EXPECT_EQ(g.dim, st.m[j]);
        EXPECT_EQ(g.samples[0].dim, oracle_dim(ex, g.samples[0].point, j, j + 1));
    }
}

TEST(Multiplicity, LinesThroughZ) {
    const PointConfiguration g(Q, {ProjectivePoint::of(Q, 1, 0, 0), ProjectivePoint::of(Q, 0, 1, 0),
                                   ProjectivePoint::of(Q, 0, 0, 1), ProjectivePoint::of(Q, 1, 1, 1)});
    EXPECT_EQ(multiplicity_dim(g, 0, sampled(0)), 0u);
    const auto st = splitting_type(g, sampled(0));
    EXPECT_EQ(st.a + st.b, 3u);
    const PointConfiguration col(Q, {ProjectivePoint::of(Q, 1, 0, 0), ProjectivePoint::of(Q, 0, 1, 0),
                                     ProjectivePoint::of(Q, 1, 1, 0)});
    EXPECT_EQ(multiplicity_dim(col, 0, sampled(0)), 1u);
}

TEST(Fermat, UnexpectedRange) {
    const auto r5 = fermat_unexpected_range(5, sampled(0));
    EXPECT_NE(std::find(r5.begin(), r5.end(), 7u), r5.end());
    EXPECT_TRUE(fermat_unexpected_range(3, sampled(0)).empty());
    const auto f5 = detect_unexpected(dual_fermat(5), 7, sampled(1));
    EXPECT_TRUE(f5.unexpected);
    ASSERT_TRUE(f5.witness);
    EXPECT_TRUE(vanishes_to_order(*f5.witness, *f5.witness_point, 6));
}

TEST(Properties, SemicontinuityAndModes) {
    std::mt19937_64 rng(40);
    for (int t = 0; t < 12; ++t) {
        const std::size_t r = 4 + t % 4;
        const auto z = random_config(r, 3, rng());
        const unsigned d = 2 + t % 3;
        const auto s = detect_unexpected(z, d, sampled(t));
        std::size_t best = SIZE_MAX;
        for (const auto &smp : s.samples) {
            EXPECT_GE(smp.dim, s.generic_dim);
            best = std::min(best, smp.dim);
        }
        EXPECT_EQ(best, s.generic_dim);
        const auto c = detect_unexpected(z, d, GeneralPointStrategy::certified_with(t));
        EXPECT_EQ(c.generic_dim, s.generic_dim);
        EXPECT_EQ(c.unexpected, s.unexpected);
    }
}

TEST(Properties, SplittingSumAndGateSoundness) {
    std::vector<PointConfiguration> corpus{example_quartic_config(), dual_fermat(3),
                                           family(Family::w5, {Scalar(Q, 2)})};
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        corpus.push_back(random_config(5 + seed % 3, 4, seed + 100));
    for (const auto &z : corpus) {
        const auto st = splitting_type(z, sampled(0));
        EXPECT_EQ(st.a + st.b, z.size() - 1);
        EXPECT_EQ(st.m.size(), z.size());
        if (!st.balanced)
            continue;
        for (unsigned d = 2; d + 2 <= z.size(); ++d)
            EXPECT_FALSE(detect_unexpected(z, d, sampled(0)).unexpected);
    }
}

TEST(Properties, VerdictInvariantUnderTransforms) {
    std::mt19937_64 rng(41);
    const auto ex = example_quartic_config();
    for (int t = 0; t < 4; ++t) {
        const auto tm = random_invertible(rng);
        EXPECT_TRUE(detect_unexpected(apply_transform(tm, ex), 4, sampled(t)).unexpected);
        const auto z = random_config(8, 5, rng());
        EXPECT_EQ(detect_unexpected(z, 3, sampled(t)).unexpected,
                  detect_unexpected(apply_transform(tm, z), 3, sampled(t)).unexpected);
    }
}

TEST(QuickReject, SoundOnCorpus) {
    EXPECT_FALSE(quick_not_unexpected(example_quartic_config(), 4, 0));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto z = random_config(9, 50, seed);
        if (quick_not_unexpected(z, 4, seed)) {
            EXPECT_FALSE(detect_unexpected(z, 4, sampled(seed)).unexpected);
        }
    }
    EXPECT_TRUE(quick_not_unexpected(random_config(9, 50, 3), 4, 3));
    EXPECT_FALSE(quick_not_unexpected(dual_fermat(3), 4, 0)); // not rational: unknown
}
