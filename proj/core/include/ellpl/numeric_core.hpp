#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ellpl {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};
inline constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

// Precondition violations (bad arguments, wrong level, wrong size).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation too close to a pole divisor.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-finite values or failed saturation during a numerical evaluation.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Precision {
    double q_tail_eps = 1e-14;
    int quad_points = 256;
    int lattice_radius = 64;
    double deriv_radius_frac = 0.25;

    void validate() const;
    // Node count used for each layer of nested contour integrals.
    Precision nested() const;
};

// A point of the upper half plane; construction rejects Im tau <= 0.
class UpperHalfPoint {
public:
    UpperHalfPoint(Complex tau);
    UpperHalfPoint(double re, double im) : UpperHalfPoint(Complex(re, im)) {}
    Complex value() const { return tau_; }
    operator Complex() const { return tau_; }

private:
    Complex tau_;
};

struct TruncatedLaurent {
    int pole_order = 0;
    std::vector<Complex> coefficients;  // indices -pole_order .. trunc_degree
    Complex center{};
    double radius_used = 0.0;

    int trunc_degree() const { return static_cast<int>(coefficients.size()) - pole_order - 1; }
    Complex coeff(int k) const;
};

using ScalarFn = std::function<Complex(Complex)>;
using VectorFn = std::function<CVector(Complex)>;

TruncatedLaurent cauchy_coefficients(const ScalarFn& f, Complex center, double radius,
                                     int pole_order, int trunc_degree, const Precision& prec);

// Taylor coefficients 0..trunc_degree of a vector-valued holomorphic function;
// column k of the result holds coefficient k.
CMatrix cauchy_taylor_vector(const VectorFn& f, Complex center, double radius, int trunc_degree,
                             const Precision& prec);

// order-th derivative; the contour radius is deriv_radius_frac * singularity_distance.
Complex holomorphic_derivative(const ScalarFn& f, Complex at, int order, double singularity_distance,
                               const Precision& prec);
CVector holomorphic_derivative(const VectorFn& f, Complex at, int order,
                               double singularity_distance, const Precision& prec);

// Lagrange-Gauss reduced basis of the lattice Z*tau + Z.
struct LatticeBasis {
    Complex b1;
    Complex b2;
};
LatticeBasis reduced_basis(Complex tau);

// Distance from p to the nearest point of the coset p0 + scale * (Z*tau + Z).
// With exclude_zero, the lattice point equal to p - p0 exactly is skipped.
double lattice_distance(Complex p, Complex tau, double scale = 1.0, bool exclude_zero = false);
double shortest_vector(Complex tau);

// Distance from tau to the nearest tau' with u in (Z - shift) tau' + Z, capped by Im tau.
double tau_pole_distance(Complex u, Complex tau, double shift = 0.0);

// Sum over (m,n) of 1/(x*tau + y + m*tau + n)^k, omitting (0,0) when x = y = 0.
Complex lattice_sum(int k, double x, double y, const UpperHalfPoint& tau, const Precision& prec);

// Same sum for an arbitrary complex offset u; omit_zero drops the term with
// m*tau + n = -u when u is a lattice point.
Complex lattice_sum_offset(int k, Complex u, Complex tau, bool omit_zero, const Precision& prec);

// Hurwitz zeta sum_{n>=0} (a+n)^{-k} for |a| large and Re a > 0.
Complex hurwitz_tail(int k, Complex a);

double factorial(int n);
double binomial(int n, int k);
Complex ipow(Complex z, int k);

// Bernoulli numbers B_0..B_n (B_1 = -1/2).
const std::vector<double>& bernoulli_numbers();

}  // namespace ellpl
