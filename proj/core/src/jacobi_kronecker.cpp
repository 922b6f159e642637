#include "ellpl/jacobi_kronecker.hpp"

#include <cmath>
#include <limits>

namespace ellpl {

namespace {

void require_off_lattice(Complex u, Complex tau, double eps, const char* what) {
    if (lattice_distance(u, tau) < eps)
        throw PoleError(std::string("jacobi_J: ") + what + " lies on the period lattice");
}

}  // namespace

Complex jacobi_J(Complex z, Complex w, const TauData& td) {
    return td.theta(z + w) / (td.theta(z) * td.theta(w));
}

Complex jacobi_J(const JacobiPoint& p, const Precision& prec) {
    const Complex t = p.tau.value();
    require_off_lattice(p.z, t, prec.q_tail_eps, "z");
    require_off_lattice(p.w, t, prec.q_tail_eps, "w");
    require_off_lattice(p.z + p.w, t, prec.q_tail_eps, "z+w");
    return jacobi_J(p.z, p.w, TauData(p.tau, prec));
}

Complex jacobi_transform_factor(const JacobiPoint& p, std::int64_t m, std::int64_t n,
                                std::int64_t mp, std::int64_t np, const IntMatrix2& gamma) {
    require_sl2z(gamma);
    const Complex t = p.tau.value();
    const double c = static_cast<double>(gamma.c);
    const Complex j = c * t + static_cast<double>(gamma.d);
    const Complex zs = p.z + static_cast<double>(m) * t + static_cast<double>(n);
    const Complex ws = p.w + static_cast<double>(mp) * t + static_cast<double>(np);
    const Complex e = kTwoPiI * c / j * zs * ws - kTwoPiI * static_cast<double>(mp) * p.z -
                      kTwoPiI * static_cast<double>(m) * p.w -
                      kTwoPiI * static_cast<double>(m * mp) * t;
    return j * std::exp(e);
}

TruncatedLaurent laurent_r(Complex z, const UpperHalfPoint& tau, int K, const Precision& prec) {
    const Complex t = tau.value();
    const double dz = lattice_distance(z, t);
    if (dz < prec.q_tail_eps) throw PoleError("laurent_r: z lies on the period lattice");
    const double radius = prec.deriv_radius_frac * std::min(shortest_vector(t), dz);
    const TauData td(tau, prec);
    ScalarFn f = [&](Complex w) { return jacobi_J(z, w, td); };
    return cauchy_coefficients(f, 0.0, radius, 1, K, prec);
}

Complex jacobi_mixed_derivative(const JacobiPoint& p, const Precision& prec) {
    const Complex t = p.tau.value();
    const double d = std::min({lattice_distance(p.z, t), lattice_distance(p.w, t),
                               lattice_distance(p.z + p.w, t)});
    if (d < prec.q_tail_eps) throw PoleError("jacobi_mixed_derivative: point on the pole divisor");
    const TauData td(p.tau, prec);
    const Precision inner = prec.nested();
    ScalarFn outer = [&](Complex z) {
        ScalarFn g = [&](Complex w) { return jacobi_J(z, w, td); };
        return holomorphic_derivative(g, p.w, 1, d, inner);
    };
    return holomorphic_derivative(outer, p.z, 1, d, inner);
}

Complex heat_equation_defect(const JacobiPoint& p, const Precision& prec) {
    const Complex t = p.tau.value();
    const double dt = std::min(
        {tau_pole_distance(p.z, t), tau_pole_distance(p.w, t), tau_pole_distance(p.z + p.w, t)});
    ScalarFn ft = [&](Complex tt) { return jacobi_J(p.z, p.w, TauData(UpperHalfPoint(tt), prec)); };
    const Complex d_tau = holomorphic_derivative(ft, t, 1, dt, prec.nested());
    return kTwoPiI * d_tau - jacobi_mixed_derivative(p, prec);
}

Complex heat_equation_defect_theta(const JacobiPoint& p, const Precision& prec) {
    const Complex t = p.tau.value();
    const Precision inner = prec.nested();
    ScalarFn ft = [&](Complex tt) {
        return TauData(UpperHalfPoint(tt), prec).theta(p.z + p.w);
    };
    const Complex d_tau = holomorphic_derivative(ft, t, 1, t.imag(), inner);
    const TauData td(p.tau, prec);
    // theta(z+w) depends on z+w only, so the mixed derivative is the second derivative.
    ScalarFn fz = [&](Complex u) { return td.theta(u); };
    const Complex d2 = holomorphic_derivative(fz, p.z + p.w, 2, shortest_vector(t), inner);
    return kTwoPiI * d_tau - d2;
}

Complex zagier_F(Complex Z, Complex W, const UpperHalfPoint& tau, const Precision& prec) {
    const Complex q = std::exp(kTwoPiI * tau.value());
    const double margin = 1e-3;
    const double rw = std::abs(std::exp(-W) * q);
    const double rz = std::abs(std::exp(Z) * q);
    if (!(rw < 1.0 - margin) || !(rz < 1.0 - margin))
        throw DomainError("zagier_F: (Z,W) outside the series convergence region");
    const Complex ez = std::exp(Z);
    const Complex ew = std::exp(W);
    const Complex emw = std::exp(-W);
    const double eps = 1e-2 * prec.q_tail_eps;

    Complex first = 0.0;
    Complex qn = 1.0;   // q^n
    Complex ewn = 1.0;  // e^{-nW}
    for (int n = 0;; ++n) {
        const Complex term = ewn * qn / (ez - qn);
        first += term;
        if (n > 0 && std::abs(term) < eps * std::max(1.0, std::abs(first))) break;
        if (n > 1000000) throw EvaluationError("zagier_F: first series did not converge");
        qn *= q;
        ewn *= emw;
    }
    Complex second = 0.0;
    Complex qm = 1.0;   // q^m
    Complex ezm = 1.0;  // e^{mZ}
    for (int m = 0;; ++m) {
        const Complex term = ezm * ew * qm / (1.0 - qm * ew);
        second += term;
        if (m > 0 && std::abs(term) < eps * std::max(1.0, std::abs(second))) break;
        if (m > 1000000) throw EvaluationError("zagier_F: second series did not converge");
        qm *= q;
        ezm *= ez;
    }
    return first - second;
}

Complex kronecker_character_shift(Complex z, Complex tau) {
    return kTwoPiI * (std::conj(z) - z) / (tau - std::conj(tau));
}

std::vector<Complex> eisenstein_kronecker_e_all(int K, Complex z, const UpperHalfPoint& tau,
                                                const Precision& prec) {
    if (K < 1) throw DomainError("eisenstein_kronecker_e: k must be >= 1");
    const TruncatedLaurent lt = laurent_r(z, tau, K - 1, prec);
    const Complex b = kronecker_character_shift(z, tau.value());
    // e^{-Bw} Taylor coefficients (-B)^i/i!.
    std::vector<Complex> ex(K + 1);
    ex[0] = 1.0;
    for (int i = 1; i <= K; ++i) ex[i] = ex[i - 1] * (-b) / static_cast<double>(i);
    std::vector<Complex> out(K);
    for (int k = 1; k <= K; ++k) {
        // coefficient of w^{k-1} in e^{-Bw} (1/w + sum r_j w^j)
        Complex c = ex[k];
        for (int j = 0; j <= k - 1; ++j) c += ex[k - 1 - j] * lt.coeff(j);
        out[k - 1] = ((k - 1) % 2 == 0 ? 1.0 : -1.0) * c;
    }
    return out;
}

Complex eisenstein_kronecker_e(int k, Complex z, const UpperHalfPoint& tau,
                               const Precision& prec) {
    return eisenstein_kronecker_e_all(k, z, tau, prec).back();
}

}  // namespace ellpl
