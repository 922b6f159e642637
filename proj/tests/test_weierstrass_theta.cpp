#include <gtest/gtest.h>

#include <cmath>

#include "ellpl/level_deck.hpp"
#include "ellpl/weierstrass_theta.hpp"
#include "verify/oracles.hpp"

using namespace ellpl;

namespace {

const UpperHalfPoint kTau(0.1, 1.1);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(Theta, NormalizedDerivativeAndOddness) {
    const TauData td(kTau);
    const std::vector<Complex> c = theta_taylor(0.0, td, 3, {});
    EXPECT_LT(std::abs(c[0]), 1e-15);
    EXPECT_LT(std::abs(c[1] - 1.0), 1e-12);
    EXPECT_LT(std::abs(c[2]), 1e-12);
    const Complex z(0.31, 0.22);
    EXPECT_LT(std::abs(td.theta(-z) + td.theta(z)), 1e-15);
}

TEST(Theta, VanishesOnTheLattice) {
    const TauData td(kTau);
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            EXPECT_LT(std::abs(td.theta(static_cast<double>(m) * kTau.value() + static_cast<double>(n))),
                      1e-12);
}

TEST(Theta, AgreesWithClassicalThetaOverEtaCubed) {
    for (Complex t : {Complex(0.0, 1.0), Complex(-0.4, 0.9), Complex(0.3, 2.5)}) {
        const UpperHalfPoint tau(t);
        const Complex z(0.17, 0.05);
        const Complex eta = dedekind_eta(tau);
        EXPECT_LT(rel(theta_elementary(z, tau), -theta11(z, tau) / (2.0 * kPi * eta * eta * eta)),
                  1e-12);
    }
}

TEST(Theta, DedekindEtaAtI) {
    // eta(i) = Gamma(1/4)/(2 pi^{3/4}).
    const double want = std::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
    EXPECT_NEAR(dedekind_eta(UpperHalfPoint(0.0, 1.0)).real(), want, 1e-14);
}

TEST(Theta, QuasiPeriodicity) {
    const Complex z(0.2, 0.3);
    const Complex t = kTau.value();
    const Complex th = theta_elementary(z, kTau);
    // theta(z+1) = -theta(z), theta(z+tau) = -exp(-pi i tau - 2 pi i z) theta(z).
    EXPECT_LT(rel(theta_elementary(z + 1.0, kTau), -th), 1e-13);
    EXPECT_LT(rel(theta_elementary(z + t, kTau), -std::exp(-kPi * kI * t - kTwoPiI * z) * th), 1e-13);
}

TEST(Theta, ModularCovarianceAtOneMatrix) {
    DeckElement d;
    d.gamma = {1, 0, 5, 1};
    d.m = 1;
    d.n = -2;
    const Complex z(0.13, 0.21);
    const CoveringPoint p = deck_act(d, z, kTau);
    EXPECT_LT(rel(theta_transform(z, kTau, d), theta_elementary(p.z, p.tau)), 1e-11);
    EXPECT_LT(std::abs(theta_transform_factor(z, kTau, DeckElement::identity()) - 1.0), 1e-15);
}

TEST(Theta, ReducesLargeRealParts) {
    const TauData td(UpperHalfPoint(17.3, 0.05));
    EXPECT_GE(td.reduced_tau().imag(), std::sqrt(3.0) / 2 - 1e-12);
    EXPECT_LE(std::abs(td.reduced_tau().real()), 0.5 + 1e-12);
}

TEST(Eta, MatchesEisensteinSummedG2) {
    for (Complex t : {Complex(0.0, 1.0), Complex(0.45, 0.8), Complex(-0.2, 1.7), Complex(3.1, 0.3)})
        EXPECT_LT(rel(eta_one(UpperHalfPoint(t)), oracle::eta_one_eisenstein(t)), 1e-12);
}

TEST(Eta, ValueAtIAndCusp) {
    // G_2(i) = pi, so eta(1, i) = -pi.
    EXPECT_NEAR(std::abs(eta_one(UpperHalfPoint(0.0, 1.0)) + kPi), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(eta_one(UpperHalfPoint(0.0, 50.0)) + kPi * kPi / 3), 0.0, 1e-13);
}

TEST(Eta, LegendreRelation) {
    for (Complex t : {Complex(0.0, 1.0), Complex(0.3, 0.9), Complex(-0.45, 1.4)}) {
        const UpperHalfPoint tau(t);
        EXPECT_LT(std::abs(quasi_period(1, 0, tau) - t * eta_one(tau) - kTwoPiI), 1e-11);
        EXPECT_LT(std::abs(quasi_period(0, 1, tau) - eta_one(tau)), 1e-11);
    }
}

TEST(Eta, DerivativeMatchesDifferenceQuotient) {
    const Complex t(0.2, 1.2);
    const Complex fd = oracle::central_difference(
        [](Complex x) { return oracle::eta_one_eisenstein(x); }, t, 1e-4);
    EXPECT_LT(std::abs(eta_one_derivative(UpperHalfPoint(t)) - fd), 1e-6);
}

TEST(Weierstrass, PMatchesEisensteinOrderedLatticeSum) {
    // wp(z) = sum_e (z + w)^{-2} - G_2 in Eisenstein order; eta(1) = -G_2.
    const Complex t = kTau.value();
    for (auto [x, y] : {std::pair{0.3, 0.2}, {0.5, 0.5}, {0.1, 0.7}}) {
        const Complex z = x * t + y;
        const Complex want = oracle::lattice_sum_rows(2, x, y, t) + oracle::eta_one_eisenstein(t);
        EXPECT_LT(rel(weierstrass_p(z, kTau), want), 1e-10);
    }
}

TEST(Weierstrass, ZetaDerivativeIsMinusP) {
    const Complex z(0.27, 0.41);
    const Complex fd = oracle::central_difference(
        [](Complex x) { return weierstrass_zeta(x, kTau); }, z, 1e-4);
    EXPECT_LT(rel(fd, -weierstrass_p(z, kTau)), 1e-7);
}

TEST(Weierstrass, ZetaQuasiPeriod) {
    const Complex z(0.27, 0.41);
    // eta(1) = zeta(z) - zeta(z + 1).
    EXPECT_LT(std::abs(weierstrass_zeta(z + 1.0, kTau) - weierstrass_zeta(z, kTau) + eta_one(kTau)),
              1e-10);
}

TEST(Weierstrass, PoleIsReported) {
    EXPECT_THROW(weierstrass_p(kTau.value() + 1.0, kTau), PoleError);
}

TEST(Weierstrass, SigmaNearOrigin) {
    const SigmaZetaP s = weierstrass_sigma_zeta_p(Complex(1e-3, 0.0), kTau);
    EXPECT_LT(std::abs(s.sigma - 1e-3), 1e-9);
}
