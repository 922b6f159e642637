#include <gtest/gtest.h>

#include <cmath>

#include "ellpl/eisenstein_classes.hpp"

using namespace ellpl;

namespace {

const UpperHalfPoint kTau(0.3, 1.2);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(EisClass, CoefficientsInTermsOfF) {
    const Complex f2 = modular_F(2, 1, 2, 3, kTau).value;
    EXPECT_LT(rel(eisenstein_class_coefficient(0, 1, 2, 3, kTau).algebraic_coefficient, f2 / 3.0),
              1e-14);
    const Complex f3 = modular_F(3, 1, 2, 3, kTau).value;
    EXPECT_LT(rel(eisenstein_class_coefficient(1, 1, 2, 3, kTau).algebraic_coefficient, f3), 1e-14);
    const Complex f4 = modular_F(4, 1, 2, 3, kTau).value;
    EXPECT_LT(rel(eisenstein_class_coefficient(2, 1, 2, 3, kTau).algebraic_coefficient, -1.5 * f4),
              1e-14);
}

TEST(EisClass, RepresentativeCarriesTheAnalyticForm) {
    const EisensteinClass e = eisenstein_class_coefficient(2, 1, 0, 3, kTau);
    EXPECT_EQ(e.representative.n, 2);
    EXPECT_EQ(e.representative.level, 3);
    EXPECT_EQ(e.representative.provenance.weight, 4);
    EXPECT_LT(rel(e.representative.coefficient,
                  analytic_form_factor(2) * e.algebraic_coefficient / kTwoPiI),
              1e-15);
    EXPECT_LT(rel(class_from_specialization_entry(2, e.representative.coefficient),
                  e.algebraic_coefficient),
              1e-15);
}

TEST(EisClass, RecoveryWhenDIsOneModN) {
    for (int n = 0; n <= 3; ++n) {
        const Complex dv = dvariant_class_coefficient(n, 1, 2, 3, 4, kTau);
        const Complex eis = eisenstein_class_coefficient(n, 1, 2, 3, kTau).algebraic_coefficient;
        EXPECT_LT(rel(eisenstein_from_dvariant(n, dv, 3, 4), eis), 1e-12) << "n=" << n;
    }
    EXPECT_THROW(eisenstein_from_dvariant(1, 1.0, 3, 2), DomainError);
}

TEST(EisClass, DVariantUnfoldsThroughEis) {
    for (int n = 0; n <= 3; ++n)
        EXPECT_LT(rel(dvariant_class_from_eisenstein(n, 1, 0, 5, 2, kTau),
                      dvariant_class_coefficient(n, 1, 0, 5, 2, kTau)),
                  1e-12)
            << "n=" << n;
}

TEST(EisClass, AnalyticFormFactorSigns) {
    EXPECT_LT(std::abs(analytic_form_factor(0) - kTwoPiI * kTwoPiI), 1e-12);
    EXPECT_LT(std::abs(analytic_form_factor(1) + ipow(kTwoPiI, 3)), 1e-12);
}

TEST(KodairaSpencer, DirectAndGaussManinRoutesAgree) {
    const TauFn g = [](const UpperHalfPoint& t) { return modular_F(3, 1, 0, 3, t).value; };
    const Complex direct = kodaira_spencer(g, kTau);
    EXPECT_LT(rel(direct, g(kTau) / kTwoPiI), 1e-15);
    EXPECT_LT(rel(kodaira_spencer_via_gauss_manin(g, kTau), direct), 1e-8);
}

TEST(Representative, WeightCheckAcceptsModularForms) {
    const TauFn f = [](const UpperHalfPoint& t) { return modular_F(3, 1, 0, 3, t).value; };
    EXPECT_NO_THROW(form_to_representative(1, f, 3, kTau, 3));
}

TEST(Representative, WeightCheckNamesTheFailingMatrix) {
    const TauFn f = [](const UpperHalfPoint& t) { return t.value(); };
    try {
        form_to_representative(0, f, 3, kTau, 5);
        FAIL() << "tau accepted as a weight-2 form";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("matrix ("), std::string::npos);
    }
    EXPECT_THROW(form_to_representative(-1, f, 3, kTau), DomainError);
}
