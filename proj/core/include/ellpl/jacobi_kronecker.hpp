#pragma once

#include <cstdint>

#include "ellpl/level_deck.hpp"
#include "ellpl/numeric_core.hpp"
#include "ellpl/weierstrass_theta.hpp"

namespace ellpl {

struct JacobiPoint {
    Complex z;
    Complex w;
    UpperHalfPoint tau;
};

// J(z,w,tau) = theta(z+w)/(theta(z) theta(w)); throws PoleError near z, w or z+w in the lattice.
Complex jacobi_J(const JacobiPoint& p, const Precision& prec = {});
// Unchecked evaluation for inner loops with a shared TauData.
Complex jacobi_J(Complex z, Complex w, const TauData& td);

// Factor c with J(d_z.z, d_w.w, gamma tau) = c * J(z,w,tau), both shifts paired with gamma.
Complex jacobi_transform_factor(const JacobiPoint& p, std::int64_t m, std::int64_t n,
                                std::int64_t mp, std::int64_t np, const IntMatrix2& gamma);

// w-Laurent data of J(z,.,tau) at 0: pole order 1, coefficients r_0..r_K.
TruncatedLaurent laurent_r(Complex z, const UpperHalfPoint& tau, int K, const Precision& prec = {});

// 2 pi i dJ/dtau - d^2 J/(dz dw).
Complex heat_equation_defect(const JacobiPoint& p, const Precision& prec = {});
// Same defect with J replaced by theta(z+w,tau); not small in general.
Complex heat_equation_defect_theta(const JacobiPoint& p, const Precision& prec = {});
// d^2 J/(dz dw) by nested Cauchy differentiation.
Complex jacobi_mixed_derivative(const JacobiPoint& p, const Precision& prec = {});

// Zagier's series F(Z,W,tau) on its convergence region; throws DomainError outside.
Complex zagier_F(Complex Z, Complex W, const UpperHalfPoint& tau, const Precision& prec = {});

// Eisenstein-Kronecker function e_k(z,tau), k >= 1, through the J expansion.
Complex eisenstein_kronecker_e(int k, Complex z, const UpperHalfPoint& tau,
                               const Precision& prec = {});
// e_1,..,e_K from a single expansion.
std::vector<Complex> eisenstein_kronecker_e_all(int K, Complex z, const UpperHalfPoint& tau,
                                                const Precision& prec = {});

// 2 pi i (conj(z) - z)/(tau - conj(tau)).
Complex kronecker_character_shift(Complex z, Complex tau);

}  // namespace ellpl
