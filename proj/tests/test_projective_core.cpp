#include <gtest/gtest.h>

#include "support.hpp"

using namespace ckpolar;
using namespace ckpolar::testing;

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3/6"), ratio(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(parse_rational("+7/1"), Rational(7));
    EXPECT_EQ(format_rational(ratio(-3, 9)), "-1/3");
    EXPECT_EQ(format_rational(Rational(5)), "5");
    for (const char* bad : {"", "1/0", "1/-2", "1.5", "a", "1/", "/2", "- 1"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, SqrtDecimalRoundsHalfEven) {
    EXPECT_EQ(sqrt_decimal(4), "2");
    EXPECT_EQ(sqrt_decimal(2), "1.41421356237");
    EXPECT_EQ(sqrt_decimal(ratio(3, 2)), "1.22474487139");
    EXPECT_EQ(sqrt_decimal(ratio(1, 100)), "0.1");
    EXPECT_EQ(sqrt_decimal(0), "0");
    Rational r;
    EXPECT_TRUE(rational_sqrt(ratio(9, 4), r));
    EXPECT_EQ(r, ratio(3, 2));
    EXPECT_FALSE(rational_sqrt(2, r));
    EXPECT_FALSE(rational_sqrt(-1, r));
}

TEST(Matrix, InverseDeterminantKernel) {
    const Matrix a{{2, 1}, {4, 3}};
    EXPECT_EQ(determinant(a), Rational(2));
    EXPECT_EQ(*inverse(a) * a, Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
    const auto k = kernel(Matrix{{1, 2, 3}});
    ASSERT_EQ(k.size(), 2u);
    for (const auto& v : k) EXPECT_EQ(dot(vec({1, 2, 3}), v), 0);
}

TEST(Subspace, SpanIsCanonical) {
    EXPECT_EQ(pts({vec({1, 1, 0}), vec({1, -1, 0})}), pts({vec({0, 1, 0}), vec({2, 0, 0})}));
    EXPECT_EQ(pt({2, 4, 6}), pt({1, 2, 3}));
    EXPECT_EQ(pt({0, -3, 1}).basis().front(), (Vector{0, 1, ratio(-1, 3)}));
    EXPECT_EQ(Subspace::empty(2).dim(), -1);
    EXPECT_THROW(Subspace::span({vec({1, 0})}, 2), DimensionError);
    EXPECT_THROW(Point(vec({0, 0, 0})), GeometryError);
}

TEST(Subspace, JoinExamples) {
    EXPECT_EQ(join(pt({1, 0, 0}), pt({0, 1, 0})), hyperplane({0, 0, 1}));
    EXPECT_EQ(join(pt({1, 0, 0}), pt({1, 0, 0})), pt({1, 0, 0}));
    EXPECT_EQ(join(Subspace::empty(2), hyperplane({1, 0, 0})), hyperplane({1, 0, 0}));
    EXPECT_THROW(join(pt({1, 0}), pt({1, 0, 0})), DimensionError);
}

TEST(Subspace, MeetExamples) {
    EXPECT_EQ(meet(hyperplane({1, 0, 0}), hyperplane({0, 1, 0})), pt({0, 0, 1}));
    EXPECT_TRUE(meet(pt({1, 0, 0}), hyperplane({1, 0, 0})).is_empty());
    EXPECT_EQ(meet(Subspace::full(2), pt({1, 2, 3})), pt({1, 2, 3}));
}

TEST(Subspace, ContainsExamples) {
    EXPECT_TRUE(contains(Subspace::full(2), hyperplane({1, 1, 1})));
    EXPECT_FALSE(contains(Subspace::empty(2), pt({1, 0, 0})));
    EXPECT_TRUE(contains(hyperplane({1, 0, 0}), pt({0, 1, 0})));
}

TEST(Subspace, AnnihilatorExamples) {
    const auto d = annihilator(hyperplane({1, 0, 0}));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.rows().front(), vec({1, 0, 0}));
    EXPECT_EQ(annihilator(Subspace::empty(2)).size(), 3u);
    EXPECT_EQ(annihilated_by(DualSubspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 2)), pt({0, 0, 1}));
}

TEST(Subspace, HarmonicConjugateExamples) {
    const Point p(vec({1, 0, 0})), q(vec({0, 1, 0})), x(vec({1, 1, 0}));
    EXPECT_EQ(harmonic_conjugate(x, p, q), Point(vec({1, -1, 0})));
    EXPECT_EQ(harmonic_conjugate(harmonic_conjugate(x, p, q), p, q), x);
    EXPECT_EQ(harmonic_conjugate(Point(vec({2, 0, 1})), p, Point(vec({0, 0, 1}))), Point(vec({2, 0, -1})));
    EXPECT_THROW(harmonic_conjugate(Point(vec({0, 0, 1})), p, q), GeometryError);
    EXPECT_THROW(harmonic_conjugate(p, p, q), GeometryError);
    EXPECT_THROW(harmonic_conjugate(x, p, p), GeometryError);
}

TEST(SubspaceProperties, ModularLawDualityAndCanonicality) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.integer(1, 4);
        const Subspace s = rng.subspace(n, rng.integer(-1, n));
        const Subspace t = rng.subspace(n, rng.integer(-1, n));
        EXPECT_EQ(join(s, t).dim() + meet(s, t).dim(), s.dim() + t.dim());
        EXPECT_EQ(annihilated_by(annihilator(s)), s);
        EXPECT_EQ(static_cast<int>(annihilator(s).size()), n - s.dim());
        auto rows = annihilator(s).rows();
        const auto more = annihilator(t).rows();
        const auto joined = annihilator(join(s, t));
        // A row kills join(S,T) iff it kills both.
        for (const auto& h : joined.rows()) {
            for (const auto& v : s.basis()) EXPECT_EQ(dot(h, v), 0);
            for (const auto& v : t.basis()) EXPECT_EQ(dot(h, v), 0);
        }
        rows.insert(rows.end(), more.begin(), more.end());
        EXPECT_EQ(annihilated_by(DualSubspace::span(rows, n)), meet(s, t));
        if (!s.is_empty()) {
            std::vector<Vector> other;
            for (int i = 0; i <= s.dim(); ++i) other.push_back(rng.vector_in(s, 3));
            if (rank_of(other, static_cast<std::size_t>(n + 1)) == other.size()) EXPECT_EQ(Subspace::span(other, n), s);
        }
    }
}

TEST(SubspaceProperties, HarmonicConjugateIsAnInvolutionOnTheLine) {
    Rng rng(12);
    int checked = 0;
    while (checked < 100) {
        const int n = rng.integer(1, 4);
        const Point p(rng.vector(n, 3)), q(rng.vector(n, 3));
        if (p == q) continue;
        Vector xv(static_cast<std::size_t>(n + 1));
        const Rational a = rng.rational(4), b = rng.rational(4);
        if (a == 0 || b == 0) continue;
        for (std::size_t i = 0; i < xv.size(); ++i) xv[i] = a * p.coords()[i] + b * q.coords()[i];
        const Point x(xv);
        const Point h = harmonic_conjugate(x, p, q);
        EXPECT_TRUE(contains(join(p, q), h));
        EXPECT_FALSE(h == x);
        EXPECT_EQ(harmonic_conjugate(h, p, q), x);
        ++checked;
    }
}
