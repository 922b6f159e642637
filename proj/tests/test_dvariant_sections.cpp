#include <gtest/gtest.h>

#include <cmath>

#include "ellpl/dvariant_sections.hpp"
#include "ellpl/jacobi_kronecker.hpp"

using namespace ellpl;

namespace {

const UpperHalfPoint kTau(0.1, 1.1);

double max_abs(const CVector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(SD, CoefficientsFromLaurentDataOfJ) {
    // s_k = (-1)^k (D^2 r_k(z) - D^{1-k} r_k(Dz)).
    const Complex z(0.21, 0.13);
    for (int D : {2, 3}) {
        const TruncatedLaurent l1 = laurent_r(z, kTau, 4);
        const TruncatedLaurent l2 = laurent_r(static_cast<double>(D) * z, kTau, 4);
        const std::vector<Complex> s = s_D_all(4, D, z, kTau);
        ASSERT_EQ(s.size(), 5u);
        for (int k = 0; k <= 4; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double d = static_cast<double>(D);
            const Complex want = sign * (d * d * l1.coeff(k) - std::pow(d, 1 - k) * l2.coeff(k));
            EXPECT_LT(std::abs(s[k] - want), 1e-9 * std::max(1.0, std::abs(want)))
                << "D=" << D << " k=" << k;
            EXPECT_EQ(s_D(k, D, z, kTau), s[k]);
        }
    }
}

TEST(SD, PrincipalPartCancels) {
    const TauData td(kTau);
    const SDExpansion e = s_D_expansion(3, 2, Complex(0.3, 0.2), td, {});
    EXPECT_LT(std::abs(e.principal), 1e-10);
    EXPECT_GT(e.radius, 0.0);
}

TEST(SD, PolesOnTheDTorsionDivisor) {
    EXPECT_NEAR(s_D_pole_distance(2, 0.25, Complex(0.0, 1.0)), 0.25, 1e-15);
    EXPECT_THROW(s_D(0, 2, 0.5, kTau), PoleError);
    EXPECT_THROW(s_D(0, 2, 0.5 * kTau.value(), kTau), PoleError);
    EXPECT_NO_THROW(s_D(0, 2, 0.25, kTau));
    EXPECT_THROW(s_D(-1, 2, 0.25, kTau), DomainError);
}

TEST(SD, HeatChainAndMismatchControl) {
    const Complex z(0.21, 0.13);
    const HeatChain h = heat_chain_defect(1, 2, z, kTau);
    EXPECT_LT(std::abs(h.defect), 1e-6 * std::abs(h.d_tau));
    const HeatChain bad = heat_chain_defect(1, 2, z, kTau, {}, true);
    EXPECT_GT(std::abs(bad.defect), 1e-3 * std::abs(bad.d_tau));
}

TEST(Sections, QLayoutAndRestriction) {
    const int n = 2;
    const SectionEvaluator q = build_q(n, 2);
    const SectionEvaluator p = build_p(n, 2);
    ASSERT_EQ(q.length, rank_r(n));
    ASSERT_EQ(p.length, 2 * rank_r(n));
    const Complex z(0.21, 0.13);
    const CVector qv = q(z, kTau.value());
    const std::vector<Complex> s = s_D_all(n, 2, z, kTau);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(qv(basis_index(n, k, 0)), s[k]);
    for (int i = n + 1; i < q.length; ++i) EXPECT_EQ(qv(i), Complex(0.0));
    EXPECT_EQ(restrict_to_relative(n, p)(z, kTau.value()), qv);
    EXPECT_EQ(drop_degree(n, q)(z, kTau.value()), build_q(n - 1, 2)(z, kTau.value()));
    EXPECT_THROW(drop_degree(0, build_q(0, 2)), DomainError);
}

TEST(Sections, PSecondHalfSlot) {
    const int n = 1;
    const SectionEvaluator p = build_p(n, 3);
    const Complex z(0.17, 0.29);
    const CVector v = p(z, kTau.value());
    const std::vector<Complex> s = s_D_all(n + 1, 3, z, kTau);
    const int r = rank_r(n);
    for (int k = 0; k <= n; ++k)
        EXPECT_LT(std::abs(v(r + basis_index(n, k, 0)) + (k + 1.0) / kTwoPiI * s[k + 1]), 1e-12);
}

TEST(Sections, PIsClosed) {
    const int n = 1;
    const SectionEvaluator p = build_p(n, 2);
    const Complex z = 0.21 * kTau.value() + 0.42;
    const CVector d = apply_deRham1(n, p, z, kTau);
    EXPECT_LT(max_abs(d) / (1.0 + max_abs(p(z, kTau.value()))), 1e-6);
}

TEST(Sections, ConnectionKinds) {
    EXPECT_EQ(parse_connection_kind("gauss-manin"), ConnectionKind::gauss_manin);
    EXPECT_EQ(parse_connection_kind("relative"), ConnectionKind::relative);
    EXPECT_THROW(parse_connection_kind("flat"), DomainError);
    const CMatrix z = connection_Z(2, Complex(-3.0, 0.0));
    EXPECT_EQ(z.rows(), rank_r(2));
}

TEST(Torsion, ContextValidation) {
    EXPECT_NO_THROW((DVariantContext{2, 3, 1, 0, 1}.validate()));
    EXPECT_THROW((DVariantContext{3, 3, 1, 0, 1}.validate()), DomainError);
    EXPECT_THROW((DVariantContext{2, 2, 1, 0, 1}.validate()), DomainError);
    EXPECT_THROW((DVariantContext{2, 5, 0, 5, 1}.validate()), DomainError);
    EXPECT_THROW((DVariantContext{2, 9, 1, 0, 3}.validate()), DomainError);
    const DVariantContext c{2, 5, 2, 1, 3};
    EXPECT_NEAR(c.x(), 1.0 / 5, 1e-16);
    EXPECT_NEAR(c.y(), 1.0 / 5, 1e-16);
}

TEST(Torsion, SpecializationMatchesClosedForm) {
    const UpperHalfPoint tau(0.3, 1.2);
    const int n = 2;
    const DVariantContext ctx{2, 5, 1, 2, 1};
    const CVector got = specialize_torsion(n, ctx, build_p(n, ctx.D), tau);
    const CVector want = expected_specialization(n, ctx, tau);
    ASSERT_EQ(got.size(), want.size());
    EXPECT_LT(max_abs(got - want) / max_abs(want), 1e-6);
}
