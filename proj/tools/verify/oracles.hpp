#pragma once

#include <functional>

#include "ellpl/numeric_core.hpp"

// Independent reference computations used by the verification suites and the unit tests.
// None of them call the library routes they are compared against.
namespace ellpl::oracle {

// eta(1,tau) = -G_2(tau), G_2 summed in Eisenstein order (m outer) with rows in cotangent form.
Complex eta_one_eisenstein(Complex tau);

// Hurwitz zeta(k, a) for real a > 0 and k >= 2, by Euler-Maclaurin.
double hurwitz_zeta(int k, double a);

// Bernoulli polynomial B_k(x).
double bernoulli_poly(int k, double x);

// sum_{m,n} (x tau + y + m tau + n)^{-k} summed row by row (m outer), rows in closed form;
// the term equal to zero is omitted when (x,y) = (0,0).
Complex lattice_sum_rows(int k, double x, double y, Complex tau);

// sum' exp[2 pi i (conj(z) g - z conj(g))/(tau - conj(tau))] g^{-k} for z = s tau + t, k >= 3,
// summed row by row with character-twisted closed forms.
Complex e_k_character(int k, double s, double t, Complex tau);

// Symmetric difference quotient (f(x+h) - f(x-h))/(2h).
Complex central_difference(const std::function<Complex(Complex)>& f, Complex x, double h);

}  // namespace ellpl::oracle
