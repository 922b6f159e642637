#include "ellpl/eisenstein_classes.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ellpl/dvariant_sections.hpp"
#include "ellpl/level_deck.hpp"

namespace ellpl {

namespace {

double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Complex kodaira_spencer(const TauFn& g, const UpperHalfPoint& tau) { return g(tau) / kTwoPiI; }

Complex kodaira_spencer_via_gauss_manin(const TauFn& g, const UpperHalfPoint& tau,
                                        const Precision& prec) {
    // Connection matrix M on (chi, xi) from constant sections; the dual connection on
    // H^1 in the basis (eta, omega) is d - M^T, and the Hodge projection keeps the eta slot.
    auto constant = [](Complex c0, Complex c1) {
        SectionEvaluator s;
        s.length = 2;
        s.eval = [c0, c1](Complex, Complex) {
            CVector v(2);
            v << c0, c1;
            return v;
        };
        return s;
    };
    const CVector col_chi = apply_connection(1, ConnectionKind::gauss_manin, constant(1.0, 0.0),
                                             0.0, tau, prec);
    const Complex gv = g(tau);
    // -(M^T (0, g))_0 = -M(1,0) g
    return -col_chi(1) * gv;
}

CohomologyRepresentative form_to_representative(int n, const TauFn& f, int N,
                                                const UpperHalfPoint& tau, int weight_checks,
                                                std::uint64_t seed, double weight_tol) {
    if (n < 0) throw DomainError("form_to_representative: n must be >= 0");
    std::mt19937_64 rng(seed);
    const Complex t = tau.value();
    const Complex ft = f(tau);
    for (int c = 0; c < weight_checks; ++c) {
        IntMatrix2 g = random_gamma(N, rng, 2);
        const Complex j = static_cast<double>(g.c) * t + static_cast<double>(g.d);
        const Complex gt =
            (static_cast<double>(g.a) * t + static_cast<double>(g.b)) / j;
        const Complex lhs = f(UpperHalfPoint(gt));
        const Complex rhs = ipow(j, n + 2) * ft;
        const double err = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
        if (err > weight_tol)
            throw DomainError("form_to_representative: weight " + std::to_string(n + 2) +
                              " check failed for matrix (" + std::to_string(g.a) + " " +
                              std::to_string(g.b) + "; " + std::to_string(g.c) + " " +
                              std::to_string(g.d) + "), relative error " + std::to_string(err));
    }
    CohomologyRepresentative out;
    out.n = n;
    out.level = N;
    out.tau = t;
    out.coefficient = ft / kTwoPiI;
    out.provenance.value = ft;
    out.provenance.weight = n + 2;
    out.provenance.level = N;
    return out;
}

Complex analytic_form_factor(int n) {
    const Complex p = ipow(kTwoPiI, n + 2);
    return n == 0 ? p : -p;
}

EisensteinClass eisenstein_class_coefficient(int n, int a, int b, int N, const UpperHalfPoint& tau,
                                             const Precision& prec) {
    if (n < 0) throw DomainError("eisenstein_class_coefficient: n must be >= 0");
    const ModularValue f = modular_F(n + 2, a, b, N, tau, prec);
    const double dn = static_cast<double>(N);
    Complex x;
    if (n == 0)
        x = -(1.0 / dn) * (-f.value);
    else
        x = -std::pow(dn, n - 1) * sign_pow(n) / factorial(n) * f.value;
    EisensteinClass out;
    out.n = n;
    out.a = f.a;
    out.b = f.b;
    out.level = N;
    out.algebraic_coefficient = x;
    const Complex form = analytic_form_factor(n) * x;
    out.representative = form_to_representative(
        n, [form](const UpperHalfPoint&) { return form; }, N, tau);
    out.representative.provenance = f;
    return out;
}

Complex dvariant_class_coefficient(int n, int a, int b, int N, int D, const UpperHalfPoint& tau,
                                   const Precision& prec) {
    if (n < 0) throw DomainError("dvariant_class_coefficient: n must be >= 0");
    const Complex df = modular_DF(n + 2, a, b, N, D, tau, prec).value;
    if (n == 0) return -df;
    return sign_pow(n) / factorial(n) * df;
}

Complex dvariant_class_from_eisenstein(int n, int a, int b, int N, int D,
                                       const UpperHalfPoint& tau, const Precision& prec) {
    const Complex e1 = eisenstein_class_coefficient(n, a, b, N, tau, prec).algebraic_coefficient;
    const Complex e2 = eisenstein_class_coefficient(n, static_cast<long long>(D) * a % N,
                                                    static_cast<long long>(D) * b % N, N, tau,
                                                    prec)
                           .algebraic_coefficient;
    const double dd = static_cast<double>(D);
    return -std::pow(static_cast<double>(N), 1 - n) * (dd * dd * e1 - std::pow(dd, -n) * e2);
}

Complex class_from_specialization_entry(int n, Complex entry) {
    // entry = form/(2 pi i) with form = analytic_form_factor(n) * class.
    return entry * kTwoPiI / analytic_form_factor(n);
}

Complex eisenstein_from_dvariant(int n, Complex dvariant_class, int N, int D) {
    if (mod_rep(D, N) != 1) throw DomainError("eisenstein_from_dvariant: D must be 1 mod N");
    const double dd = static_cast<double>(D);
    return -std::pow(static_cast<double>(N), n - 1) * std::pow(dd, n) /
           (std::pow(dd, n + 2) - 1.0) * dvariant_class;
}

}  // namespace ellpl
