#pragma once

#include <cstdint>
#include <functional>

#include "ellpl/eisenstein_modular.hpp"
#include "ellpl/numeric_core.hpp"

namespace ellpl {

using TauFn = std::function<Complex(const UpperHalfPoint&)>;

// Scalar multiplying dtau (x) omega^n in the fixed trivialization, at one tau.
struct CohomologyRepresentative {
    int n = 0;
    int level = 0;
    Complex tau;
    Complex coefficient;
    ModularValue provenance;
};

// g(tau)/(2 pi i).
Complex kodaira_spencer(const TauFn& g, const UpperHalfPoint& tau);
// Same map through the Hodge inclusion, the Gauss-Manin connection and the Hodge projection.
Complex kodaira_spencer_via_gauss_manin(const TauFn& g, const UpperHalfPoint& tau,
                                        const Precision& prec = {});

// coefficient = f(tau)/(2 pi i); with weight_checks > 0, f(gamma tau) = (c tau+d)^{n+2} f(tau)
// is spot-checked at that many random Gamma(N) matrices (seeded) before accepting f.
CohomologyRepresentative form_to_representative(int n, const TauFn& f, int N,
                                                const UpperHalfPoint& tau, int weight_checks = 0,
                                                std::uint64_t seed = 1,
                                                double weight_tol = 1e-7);

// Analytic form attached to the algebraic modular form X of weight n+2:
// (2 pi i)^2 X for n = 0, -(2 pi i)^{n+2} X otherwise.
Complex analytic_form_factor(int n);

struct EisensteinClass {
    int n = 0;
    int a = 0;
    int b = 0;
    int level = 0;
    // Eis^n(t_{a,b}) as a multiple of F^(n+2)_{a/N,b/N}.
    Complex algebraic_coefficient;
    CohomologyRepresentative representative;
};

// Eis^0 = -N^{-1} (-F^(2)), Eis^n = -N^{n-1} (-1)^n/n! F^(n+2) for n > 0.
EisensteinClass eisenstein_class_coefficient(int n, int a, int b, int N, const UpperHalfPoint& tau,
                                             const Precision& prec = {});

// Specialized D-variant class: -DF^(2) for n = 0, (-1)^n/n! DF^(n+2) for n > 0.
Complex dvariant_class_coefficient(int n, int a, int b, int N, int D, const UpperHalfPoint& tau,
                                   const Precision& prec = {});

// -N^{1-n} (D^2 Eis^n(t_{a,b}) - D^{-n} Eis^n(t_{Da,Db})).
Complex dvariant_class_from_eisenstein(int n, int a, int b, int N, int D,
                                       const UpperHalfPoint& tau, const Precision& prec = {});

// Algebraic class coefficient from the dtau coefficient at slot (n,0) of a specialization.
Complex class_from_specialization_entry(int n, Complex entry);

// Eis^n recovered from the specialized D-variant class when D = 1 mod N.
Complex eisenstein_from_dvariant(int n, Complex dvariant_class, int N, int D);

}  // namespace ellpl
