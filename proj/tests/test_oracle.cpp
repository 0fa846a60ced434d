#include <gtest/gtest.h>

#include "support.hpp"

using namespace ckpolar;
using namespace ckpolar::testing;

TEST(Oracle, Examples) {
    const auto f = euc2();
    const auto origin = oracle_is_total_polar(f, pt({1, 0, 0}), hyperplane({1, 0, 0}), {1, 200000});
    EXPECT_EQ(origin.verdict, OracleVerdict::confirmed);
    ASSERT_TRUE(origin.witness.has_value());
    EXPECT_EQ(pts(origin.witness->points), pt({1, 0, 0}));
    EXPECT_EQ(zeros(origin.witness->hyperplanes), hyperplane({1, 0, 0}));

    const auto ideal = oracle_is_total_polar(f, pt({0, 1, 0}), hyperplane({0, 0, 1}), {2, 200000});
    EXPECT_EQ(ideal.verdict, OracleVerdict::refuted_within_budget);
    EXPECT_FALSE(is_total_polar(f, pt({0, 1, 0}), hyperplane({0, 0, 1})));

    EXPECT_EQ(oracle_is_total_polar(f, Subspace::full(2), Subspace::empty(2)).verdict, OracleVerdict::confirmed);
    EXPECT_EQ(oracle_is_total_polar(f, pt({1, 0, 0}), pt({0, 1, 0})).verdict, OracleVerdict::refuted_within_budget);
    EXPECT_THROW(oracle_is_total_polar(f, pt({1, 0, 0}), hyperplane({1, 0, 0}), {0, 10}), DomainError);
    EXPECT_STREQ(to_string(OracleVerdict::confirmed), "confirmed");
}

TEST(Oracle, WitnessesAreChecked) {
    Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const AbsoluteFigure f = rng.coin() ? euc2() : hyp2();
        const Subspace k = rng.subspace(2, rng.integer(0, 1), 1);
        const Subspace y = sample_schubert(f, k, rng.integer(0, 1000), 1, 1).front();
        const auto r = oracle_is_total_polar(f, k, y);
        if (r.verdict != OracleVerdict::confirmed) continue;
        const auto& w = *r.witness;
        EXPECT_EQ(pts(w.points), k);
        EXPECT_EQ(zeros(w.hyperplanes), y);
        for (std::size_t i = 0; i < w.points.size(); ++i) {
            EXPECT_TRUE(is_total_polar(f, pts({w.points[i]}), zeros({w.hyperplanes[i]})));
        }
    }
}

TEST(SampleSchubert, Examples) {
    const auto f = euc2();
    for (const auto& y : sample_schubert(f, pt({0, 1, 0}), 7, 10)) {
        EXPECT_EQ(y.dim(), 1);
        EXPECT_TRUE(contains(y, pt({0, 0, 1})));
    }
    for (const auto& y : sample_schubert(f, pt({1, 0, 0}), 3, 5)) EXPECT_EQ(y, hyperplane({1, 0, 0}));
    for (const auto& y : sample_schubert(hyp2(), pt({1, 2, 7}), 11, 5))
        EXPECT_EQ(y, zeros({vec({1, 2, -7})}));
    EXPECT_EQ(sample_schubert(f, pt({0, 1, 0}), 5, 4), sample_schubert(f, pt({0, 1, 0}), 5, 4));
    EXPECT_THROW(sample_schubert(f, pt({0, 1, 0}), 5, 0), DomainError);
}

TEST(SampleSchubert, StreamIsTheDocumentedGenerator) {
    CoefficientStream s(0, 2);
    std::uint64_t state = 0;
    for (int i = 0; i < 20; ++i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        EXPECT_EQ(s.next(), static_cast<int>((state >> 33) % 5) - 2);
    }
}

TEST(OracleProperties, ConfirmedImpliesCriterion) {
    Rng rng(62);
    for (int trial = 0; trial < 60; ++trial) {
        const AbsoluteFigure f = rng.coin() ? euc2() : hyp2();
        const Subspace k = rng.subspace(2, rng.integer(0, 1), 1);
        const Subspace y = rng.subspace(2, 1 - k.dim(), 1);
        if (oracle_is_total_polar(f, k, y, {1, 20000}).verdict == OracleVerdict::confirmed)
            EXPECT_TRUE(is_total_polar(f, k, y));
    }
}

TEST(OracleProperties, SamplesPassFlagAndInequalities) {
    Rng rng(63);
    for (int trial = 0; trial < 150; ++trial) {
        const AbsoluteFigure f = random_figure(rng);
        const Subspace k = rng.subspace(f.n(), rng.integer(-1, f.n()));
        const auto flag = schubert_flag(f, k);
        for (const auto& y : sample_schubert(f, k, rng.integer(0, 1 << 30), 3)) {
            EXPECT_TRUE(is_total_polar(f, k, y));
            EXPECT_TRUE(flag.admits(y));
        }
    }
}
