#include <gtest/gtest.h>

#include <cmath>

#include "ellpl/numeric_core.hpp"
#include "verify/oracles.hpp"

using namespace ellpl;

TEST(Precision, DefaultsValidate) {
    Precision p;
    EXPECT_NO_THROW(p.validate());
    EXPECT_DOUBLE_EQ(p.q_tail_eps, 1e-14);
    EXPECT_EQ(p.quad_points, 256);
    EXPECT_EQ(p.lattice_radius, 64);
    EXPECT_DOUBLE_EQ(p.deriv_radius_frac, 0.25);
}

TEST(Precision, RejectsBadFields) {
    Precision p;
    p.lattice_radius = 3;
    EXPECT_THROW(p.validate(), DomainError);
    p = {};
    p.deriv_radius_frac = 1.0;
    EXPECT_THROW(p.validate(), DomainError);
    p = {};
    p.q_tail_eps = 0.0;
    EXPECT_THROW(p.validate(), DomainError);
}

TEST(UpperHalfPoint, RejectsLowerHalfPlane) {
    EXPECT_THROW(UpperHalfPoint(0.3, 0.0), DomainError);
    EXPECT_THROW(UpperHalfPoint(0.3, -1.0), DomainError);
    EXPECT_NO_THROW(UpperHalfPoint(0.3, 1e-6));
}

TEST(Cauchy, ExponentialTaylorCoefficients) {
    const TruncatedLaurent l =
        cauchy_coefficients([](Complex w) { return std::exp(w); }, 0.0, 0.5, 0, 8, {});
    // Roundoff in coefficient k grows like eps / radius^k.
    for (int k = 0; k <= 8; ++k)
        EXPECT_NEAR(std::abs(l.coeff(k) - 1.0 / factorial(k)), 0.0, 1e-15 * std::pow(2.0, k));
    EXPECT_EQ(l.trunc_degree(), 8);
}

TEST(Cauchy, LaurentWithSimplePole) {
    // 1/w + 3 + 2w around 0.
    const TruncatedLaurent l = cauchy_coefficients(
        [](Complex w) { return 1.0 / w + 3.0 + 2.0 * w; }, 0.0, 0.3, 1, 3, {});
    EXPECT_NEAR(std::abs(l.coeff(-1) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(l.coeff(0) - 3.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(l.coeff(1) - 2.0), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(l.coeff(2)), 0.0, 1e-12);
}

TEST(Cauchy, RejectsNonPositiveRadius) {
    EXPECT_THROW(cauchy_coefficients([](Complex w) { return w; }, 0.0, 0.0, 0, 2, {}), DomainError);
}

TEST(Cauchy, HolomorphicDerivativeOfSine) {
    const Complex at(0.3, 0.2);
    const Complex d1 =
        holomorphic_derivative(ScalarFn([](Complex w) { return std::sin(w); }), at, 1, 1.0,
                               Precision{});
    const Complex d3 =
        holomorphic_derivative(ScalarFn([](Complex w) { return std::sin(w); }), at, 3, 1.0, Precision{});
    EXPECT_LT(std::abs(d1 - std::cos(at)), 1e-13);
    EXPECT_LT(std::abs(d3 + std::cos(at)), 1e-12);
}

TEST(Lattice, ReducedBasisAndDistances) {
    const Complex tau(3.2, 0.5);
    EXPECT_NEAR(shortest_vector(tau), std::abs(Complex(0.2, 0.5)), 1e-14);
    EXPECT_NEAR(lattice_distance(tau + 2.0, tau), 0.0, 1e-14);
    EXPECT_NEAR(lattice_distance(Complex(0.5, 0.0), Complex(0.0, 1.0)), 0.5, 1e-15);
    EXPECT_NEAR(lattice_distance(Complex(0.25, 0.0), Complex(0.0, 1.0), 0.5), 0.25, 1e-15);
    EXPECT_NEAR(lattice_distance(0.0, Complex(0.0, 1.0), 1.0, true), 1.0, 1e-15);
}

TEST(Lattice, SumMatchesRowOrderOracle) {
    const UpperHalfPoint tau(0.2, 1.3);
    for (int k = 3; k <= 8; ++k) {
        for (auto [x, y] : {std::pair{0.0, 0.0}, {0.2, 0.7}, {0.5, 0.0}, {0.0, 0.5}}) {
            const Complex want = oracle::lattice_sum_rows(k, x, y, tau);
            const Complex got = lattice_sum(k, x, y, tau, {});
            EXPECT_LT(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)))
                << "k=" << k << " x=" << x << " y=" << y;
        }
    }
}

TEST(Lattice, EvenWeightSumAtOriginIsG4) {
    // G_4(i) = Gamma(1/4)^8/(960 pi^2).
    const double g = std::tgamma(0.25);
    const double want = std::pow(g, 8) / (960.0 * kPi * kPi);
    EXPECT_NEAR(lattice_sum(4, 0.0, 0.0, UpperHalfPoint(0.0, 1.0), {}).real(), want, 1e-12 * want);
}

TEST(Lattice, SumOffsetMatchesTorsionForm) {
    const Complex tau(0.1, 1.1);
    const Complex u = 0.25 * tau + 0.5;
    EXPECT_LT(std::abs(lattice_sum_offset(5, u, tau, false, {}) -
                       lattice_sum(5, 0.25, 0.5, UpperHalfPoint(tau), {})),
              1e-12);
}

TEST(Special, HurwitzTailMatchesEulerMaclaurinOracle) {
    for (int k = 2; k <= 6; ++k)
        for (double a : {20.5, 40.0, 77.25})
            EXPECT_NEAR(hurwitz_tail(k, a).real(), oracle::hurwitz_zeta(k, a),
                        1e-13 * oracle::hurwitz_zeta(k, a));
}

TEST(Special, BernoulliNumbers) {
    const auto& b = bernoulli_numbers();
    ASSERT_GE(b.size(), 13u);
    EXPECT_DOUBLE_EQ(b[0], 1.0);
    EXPECT_DOUBLE_EQ(b[1], -0.5);
    EXPECT_NEAR(b[2], 1.0 / 6, 1e-16);
    EXPECT_NEAR(b[4], -1.0 / 30, 1e-16);
    EXPECT_NEAR(b[12], -691.0 / 2730, 1e-15);
    EXPECT_EQ(b[3], 0.0);
}

TEST(Special, FactorialBinomialPower) {
    EXPECT_DOUBLE_EQ(factorial(0), 1.0);
    EXPECT_DOUBLE_EQ(factorial(6), 720.0);
    EXPECT_DOUBLE_EQ(binomial(6, 2), 15.0);
    EXPECT_LT(std::abs(ipow(Complex(0.0, 1.0), 3) - Complex(0.0, -1.0)), 1e-16);
    EXPECT_LT(std::abs(ipow(Complex(2.0, 0.0), -2) - 0.25), 1e-16);
}

TEST(Oracle, HurwitzAtOneIsZeta) {
    EXPECT_NEAR(oracle::hurwitz_zeta(2, 1.0), kPi * kPi / 6, 1e-14);
    EXPECT_NEAR(oracle::hurwitz_zeta(4, 1.0), std::pow(kPi, 4) / 90, 1e-14);
}

TEST(Oracle, BernoulliPolynomial) {
    EXPECT_NEAR(oracle::bernoulli_poly(2, 0.5), -1.0 / 12, 1e-15);
    EXPECT_NEAR(oracle::bernoulli_poly(3, 0.25), 3.0 / 64, 1e-15);
}
