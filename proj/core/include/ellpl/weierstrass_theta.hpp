#pragma once

#include <array>
#include <vector>

#include "ellpl/numeric_core.hpp"

namespace ellpl {

struct DeckElement;

// Precomputed data for a fixed tau: the SL2(Z) reduction path into the
// standard fundamental domain and the q-product data there.
class TauData {
public:
    explicit TauData(const UpperHalfPoint& tau, const Precision& prec = {});

    Complex tau() const { return tau_; }
    Complex reduced_tau() const { return tau_red_; }

    // Elementary theta function at the original tau.
    Complex theta(Complex z) const;
    Complex eta_one() const { return eta1_; }

private:
    struct Step {
        bool inversion;  // S: tau -> -1/tau, else T^shift
        double shift;
        Complex tau_before;
    };
    Complex tau_;
    Complex tau_red_;
    std::vector<Step> steps_;
    Complex q_;
    std::vector<Complex> qn_;  // q^n, n = 1..terms
    Complex norm_;             // prod (1-q^n)^{-2}
    Complex eta1_;
    double eps_;

    // Product part at the reduced tau; the automorphy exponent is added to log_factor.
    Complex theta_reduced(Complex z, Complex& log_factor) const;
};

Complex eta_one(const UpperHalfPoint& tau, const Precision& prec = {});
// d/dtau eta(1,tau) by Cauchy differentiation.
Complex eta_one_derivative(const UpperHalfPoint& tau, const Precision& prec = {});
// eta(m tau + n, tau) = m * eta(tau,tau) + n * eta(1,tau), eta(tau,tau) from zeta differences.
Complex quasi_period(int m, int n, const UpperHalfPoint& tau, const Precision& prec = {});

Complex theta_elementary(Complex z, const UpperHalfPoint& tau, const Precision& prec = {});

// Predicted value of theta((z+m tau+n)/(c tau+d), (a tau+b)/(c tau+d)) from theta(z,tau).
Complex theta_transform(Complex z, const UpperHalfPoint& tau, const DeckElement& deck,
                        const Precision& prec = {});
// Closed-form factor of that prediction.
Complex theta_transform_factor(Complex z, Complex tau, const DeckElement& deck);

struct SigmaZetaP {
    Complex sigma;
    Complex zeta;
    Complex p;
};
SigmaZetaP weierstrass_sigma_zeta_p(Complex z, const UpperHalfPoint& tau,
                                    const Precision& prec = {});
Complex weierstrass_zeta(Complex z, const UpperHalfPoint& tau, const Precision& prec = {});
Complex weierstrass_p(Complex z, const UpperHalfPoint& tau, const Precision& prec = {});

// Taylor coefficients theta(z+h) = sum c_j h^j for j = 0..order at fixed tau.
std::vector<Complex> theta_taylor(Complex z, const TauData& td, int order, const Precision& prec);

Complex dedekind_eta(const UpperHalfPoint& tau, const Precision& prec = {});
Complex theta11(Complex z, const UpperHalfPoint& tau, const Precision& prec = {});

}  // namespace ellpl
