#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ellpl/level_deck.hpp"

using namespace ellpl;

namespace {

const UpperHalfPoint kTau(0.1, 1.1);

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Deck, ComposeActsAsSuccessiveActions) {
    std::mt19937_64 rng(7);
    const Complex z(0.21, 0.33);
    for (int trial = 0; trial < 20; ++trial) {
        const DeckElement d1 = random_deck(3, rng, 2, 3);
        const DeckElement d2 = random_deck(3, rng, 2, 3);
        const CoveringPoint p2 = deck_act(d2, z, kTau);
        const CoveringPoint p12 = deck_act(d1, p2.z, p2.tau);
        const CoveringPoint c = deck_act(compose(d1, d2), z, kTau);
        EXPECT_LT(std::abs(c.z - p12.z), 1e-9 * (1 + std::abs(c.z)));
        EXPECT_LT(std::abs(c.tau.value() - p12.tau.value()), 1e-9 * (1 + std::abs(c.tau.value())));
    }
}

TEST(Deck, InverseAndIdentity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const DeckElement d = random_deck(4, rng, 3);
        EXPECT_EQ(compose(d, inverse(d)), DeckElement::identity());
        EXPECT_EQ(compose(inverse(d), d), DeckElement::identity());
        EXPECT_EQ(compose(d, DeckElement::identity()), d);
    }
}

TEST(Deck, RandomGammaLiesInGammaN) {
    std::mt19937_64 rng(3);
    for (int N : {2, 3, 5}) {
        for (int trial = 0; trial < 50; ++trial) {
            const IntMatrix2 g = random_gamma(N, rng);
            EXPECT_EQ(g.det(), 1);
            EXPECT_TRUE(in_gamma(g, N));
        }
    }
}

TEST(Deck, GammaMembership) {
    EXPECT_TRUE(in_gamma({1, 3, 0, 1}, 3));
    EXPECT_FALSE(in_gamma({1, 1, 0, 1}, 3));
    EXPECT_FALSE(in_gamma({2, 0, 0, 1}, 1));
    EXPECT_TRUE(in_sl2z({0, -1, 1, 0}));
    EXPECT_THROW(require_gamma({1, 1, 0, 1}, 2), DomainError);
    EXPECT_THROW(require_sl2z({2, 0, 0, 1}), DomainError);
    EXPECT_NO_THROW(require_gamma({-1, 0, 0, -1}, 2));
}

TEST(Basis, IndexRoundTrip) {
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(rank_r(n), (n + 1) * (n + 2) / 2);
        for (int s = 0; s < rank_r(n); ++s) {
            const auto [i, j] = basis_pair(n, s);
            EXPECT_LE(i + j, n);
            EXPECT_EQ(basis_index(n, i, j), s);
        }
    }
    // j ascending outer, i ascending inner.
    EXPECT_EQ(basis_index(2, 0, 0), 0);
    EXPECT_EQ(basis_index(2, 2, 0), 2);
    EXPECT_EQ(basis_index(2, 0, 1), 3);
}

TEST(Automorphy, DegreeOneIsTheTransformOfTheBasis) {
    const DeckElement d = DeckElement::shift(1, 0);
    const CMatrix a = automorphy_A1(d, 0.2, kTau.value());
    ASSERT_EQ(a.rows(), 3);
    // Pure lattice shift: unipotent, upper-left entry 1.
    EXPECT_LT(std::abs(a(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(a.determinant() - 1.0), 1e-13);
}

TEST(Automorphy, CocycleOnRandomWords) {
    std::mt19937_64 rng(5);
    const Complex z(0.17, 0.29);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const DeckElement d1 = random_deck(3, rng, 1, 2);
            const DeckElement d2 = random_deck(3, rng, 1, 2);
            const CoveringPoint p2 = deck_act(d2, z, kTau);
            const CMatrix lhs = automorphy_An(n, compose(d1, d2), z, kTau.value());
            const CMatrix rhs = automorphy_An(n, d1, p2.z, p2.tau.value()) *
                                automorphy_An(n, d2, z, kTau.value());
            EXPECT_LT(max_abs(lhs - rhs), 1e-9 * (1 + max_abs(lhs)));
        }
    }
}

TEST(Automorphy, TensorLengthsAndKinds) {
    EXPECT_EQ(tensor_length(2, TensorKind::plain), 6);
    EXPECT_EQ(tensor_length(2, TensorKind::relative_1form), 6);
    EXPECT_EQ(tensor_length(2, TensorKind::absolute_1form), 12);
    EXPECT_EQ(tensor_length(2, TensorKind::absolute_2form), 6);
    EXPECT_EQ(parse_tensor_kind("absolute-1form"), TensorKind::absolute_1form);
    EXPECT_THROW(parse_tensor_kind("bogus"), DomainError);
    const CMatrix m = automorphy_tensor(1, DeckElement::identity(), 0.2, kTau.value(),
                                        TensorKind::absolute_1form);
    EXPECT_LT(max_abs(m - CMatrix::Identity(6, 6)), 1e-15);
}

TEST(Automorphy, ACoefficientVanishesForNegativeIndex) {
    const DeckElement d = DeckElement::shift(2, 1);
    EXPECT_EQ(a_coefficient(-1, d, 0.3, kTau.value()), Complex(0.0));
    EXPECT_EQ(a_coefficient(0, d, 0.3, kTau.value()), Complex(1.0));
    const Complex a1 = kTwoPiI * 2.0;
    EXPECT_LT(std::abs(a_coefficient(2, d, 0.3, kTau.value()) - a1 * a1 / 2.0), 1e-12);
}

TEST(Sections, PoleDivisorDistances) {
    const PoleDivisor p{2, 0.0, 0.0};
    EXPECT_NEAR(p.z_distance(0.5, Complex(0.0, 1.0)), 0.0, 1e-15);
    EXPECT_NEAR(p.z_distance(0.25, Complex(0.0, 1.0)), 0.25, 1e-15);
    EXPECT_FALSE(p.describe().empty());
}

TEST(Sections, EvaluatorChecksLength) {
    SectionEvaluator s;
    s.length = 3;
    s.eval = [](Complex, Complex) { return CVector::Zero(2).eval(); };
    EXPECT_THROW(s(0.1, kTau.value()), std::exception);
    SectionEvaluator ok;
    ok.length = 2;
    ok.eval = [](Complex z, Complex) {
        CVector v(2);
        v << z, 1.0;
        return v;
    };
    EXPECT_EQ(ok(0.5, kTau.value())(0), Complex(0.5));
    EXPECT_TRUE(std::isinf(ok.pole_distance(0.5, kTau.value())));
}
