#include <fatpoints/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace fatpoints;

namespace {

const FieldPtr Q = rational_field();

Scalar q(long num, long den = 1) { return Scalar(Q, mpq_class(num, den)); }

GeneralPointStrategy sampled(std::uint64_t seed) {
    return GeneralPointStrategy{GeneralPointStrategy::Mode::sampled, 3, 1000, seed};
}

void expect_pass(const ClaimResult &r) {
    EXPECT_TRUE(r.passed()) << r.id << ": " << claim_to_json(r).dump();
    EXPECT_FALSE(r.offending.has_value());
    EXPECT_GE(r.runtime_seconds, 0.0);
}

} // namespace

TEST(Claims, SmallClaimsPass) {
    expect_pass(check_example_quartic(0));
    expect_pass(check_hessian_certificate(0));
    expect_pass(check_hessian_certificate(5));
    expect_pass(check_fermat(0, false));
    expect_pass(check_w5(0, false));
    expect_pass(check_w5(1, true));
    expect_pass(check_dejonquieres(3, 3));
    expect_pass(check_equivalence_variants());
}

TEST(Claims, MeasuredValues) {
    const auto r = check_example_quartic(0);
    ASSERT_TRUE(r.measured.contains("modes"));
    for (const auto &m : r.measured["modes"])
        EXPECT_EQ(m["genericDim"], 1);
    const auto f = check_fermat(0, false);
    EXPECT_EQ(f.measured["F3"]["threeRich"], 12);
    EXPECT_EQ(f.measured["F3"]["simple"], 0);
    EXPECT_EQ(f.measured["F5"]["degree"], 7);
    const auto w = check_w5(0, false);
    EXPECT_EQ(w.measured["exampleQuartic"]["a"], 3);
    EXPECT_EQ(w.measured["exampleQuartic"]["b"], 5);
}

TEST(TwoAndFour, Hypothesis) {
    // the example has no simple line meeting a 4-rich line off Z
    EXPECT_FALSE(two_and_four_hypothesis(example_quartic_config(), 4));
    const auto r = check_two_and_four(example_quartic_config(), 4, sampled(0));
    EXPECT_EQ(r.status, ClaimResult::Status::skipped);
    EXPECT_FALSE(r.passed());
    // wrong size
    EXPECT_FALSE(two_and_four_hypothesis(random_config(8, 100, 1), 4));
    const auto fig = family(Family::figure2_cubic, {q(1)});
    EXPECT_TRUE(two_and_four_hypothesis(fig, 3));
    expect_pass(check_two_and_four(fig, 3, sampled(0)));
}

TEST(TwoAndFour, CandidatesMeetHypothesisWhenValid) {
    std::size_t valid = 0;
    for (std::uint64_t i = 0; i < 40; ++i) {
        const auto z = two_and_four_candidate(3, 0, i);
        if (!z || !two_and_four_hypothesis(*z, 3))
            continue;
        ++valid;
        EXPECT_EQ(generic_dim(FatPointScheme(*z), 2, 3, sampled(i)).dim, 0u);
    }
    EXPECT_GT(valid, 10u);
}

TEST(TwoAndFour, Corpus) { expect_pass(check_two_and_four_corpus(0, 20)); }

TEST(FamilyEmptiness, Cases) {
    expect_pass(check_family_emptiness(Family::prop31, {q(3), q(5)}, 4, sampled(0)));
    expect_pass(check_family_emptiness(Family::prop31, {q(-1, 2), q(1, 4)}, 4, sampled(0)));
    // the excluded pair does carry an unexpected quartic
    const auto ex = check_family_emptiness(Family::prop33_case3, {q(-1), q(1)}, 4, sampled(0));
    expect_pass(ex);
    EXPECT_EQ(ex.measured["unexpected"], true);
    const auto ok = check_family_emptiness(Family::prop33_case3, {q(2), q(3)}, 4, sampled(0));
    expect_pass(ok);
    EXPECT_EQ(ok.measured["unexpected"], false);
    EXPECT_THROW(check_family_emptiness(Family::prop31, {q(2), q(2)}, 4, sampled(0)), DomainError);
}

TEST(ClaimJson, ShapeAndOffending) {
    const auto pass = claim_to_json(check_equivalence_variants());
    for (const char *k : {"id", "status", "measured", "runtimeSeconds", "corpus"})
        EXPECT_TRUE(pass.contains(k)) << k;
    EXPECT_EQ(pass["status"], "pass");
    EXPECT_FALSE(pass.contains("offending"));

    detail::ClaimRun run("demo", "none");
    run.require(true, "fine");
    run.require(false, "first", json{{"n", 1}});
    run.require(false, "second", json{{"n", 2}});
    const auto j = claim_to_json(run.finish());
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["offending"]["check"], "first");
    EXPECT_EQ(j["offending"]["instance"]["n"], 1);
}

TEST(Suite, IdsAndDispatch) {
    const auto ids = suite_claim_ids();
    EXPECT_EQ(ids.size(), 12u);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    EXPECT_EQ(run_claim("fermat", {}).id, "fermat");
    EXPECT_THROW(run_claim("nonsense", {}), std::invalid_argument);
}

TEST(Suite, DeterministicUnderSeed) {
    const auto strip = [](ClaimResult r) {
        auto j = claim_to_json(r);
        j.erase("runtimeSeconds");
        return j;
    };
    EXPECT_EQ(strip(check_dejonquieres(9, 2)), strip(check_dejonquieres(9, 2)));
    EXPECT_EQ(strip(check_oracle_coherence(4, 5)), strip(check_oracle_coherence(4, 5)));
    EXPECT_NE(check_dejonquieres(9, 2).measured, check_dejonquieres(10, 2).measured);
}

TEST(Search, MatchesBruteForce) {
    // small spaces where some configurations do carry unexpected curves
    for (const auto &[space, d] : std::vector<std::pair<SearchSpace, unsigned>>{
             {{2, 5, GridConstraint::none, 0}, 2u},
             {{2, 7, GridConstraint::none, 0}, 3u},
             {{3, 6, GridConstraint::four_rich_line, 0}, 3u}}) {
        const auto rep = search_grid(space, d, sampled(0));
        const auto all = grid_configs(space);
        EXPECT_EQ(rep.visited, all.size());
        EXPECT_EQ(rep.fast_rejected + rep.exact_checked, rep.visited);
        std::vector<PointConfiguration> brute;
        for (const auto &z : all)
            if (detect_unexpected(z, d, sampled(0)).unexpected)
                brute.push_back(z);
        EXPECT_EQ(rep.hits, brute) << "d = " << d;
    }
}

TEST(Search, InjectedExampleFoundOnce) {
    std::vector<PointConfiguration> stream{random_config(9, 100, 1), example_quartic_variant(DiagonalPair::z5_z6),
                                           random_config(9, 100, 2)};
    const auto rep = search_grid({1, 9, GridConstraint::none, 0}, 4, sampled(0), stream);
    ASSERT_EQ(rep.hits.size(), 1u);
    EXPECT_TRUE(rep.equivalent_to_example[0]);
    EXPECT_EQ(rep.visited, 3u);
    const auto j = search_report_to_json(rep);
    EXPECT_EQ(j["hitCount"], 1);
    EXPECT_EQ(j["hits"][0]["equivalentToExample"], true);
}
