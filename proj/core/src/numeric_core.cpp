#include "ellpl/numeric_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ellpl {

namespace {

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// Unit roots e^{2 pi i j / M}, computed once per node count.
std::vector<Complex> unit_roots(int m) {
    std::vector<Complex> roots(m);
    for (int j = 0; j < m; ++j) roots[j] = std::polar(1.0, 2.0 * kPi * j / m);
    return roots;
}

// Row sum sum_n (v+n)^{-k} for Im v > 0 via the Lipschitz formula.
Complex lipschitz_row(int k, Complex v, double eps) {
    const Complex q = std::exp(kTwoPiI * v);
    Complex acc = 0.0;
    Complex qr = q;
    for (int r = 1; r < 100000; ++r) {
        const Complex term = std::pow(static_cast<double>(r), k - 1) * qr;
        acc += term;
        if (std::abs(term) < eps * std::abs(acc) || std::abs(term) == 0.0) break;
        qr *= q;
    }
    return std::pow(-kTwoPiI, k) / factorial(k - 1) * acc;
}

Complex full_row(int k, Complex v, double eps) {
    if (v.imag() > 0) return lipschitz_row(k, v, eps);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * lipschitz_row(k, -v, eps);
}

// Square-truncated sum over |m|,|n| <= R completed by analytic tails.
Complex completed_square_sum(int k, Complex u, Complex tau, bool omit_zero, int R, double eps) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    Complex acc = 0.0;
    for (int m = -R; m <= R; ++m) {
        const Complex v = u + static_cast<double>(m) * tau;
        Complex row = 0.0;
        for (int n = -R; n <= R; ++n) {
            if (omit_zero && m == 0 && n == 0) continue;
            row += 1.0 / ipow(v + static_cast<double>(n), k);
        }
        row += hurwitz_tail(k, v + static_cast<double>(R + 1));
        row += sign * hurwitz_tail(k, static_cast<double>(R + 1) - v);
        acc += row;
    }
    const double scale = std::max(1.0, std::abs(acc));
    for (int m = R + 1;; ++m) {
        const Complex up = full_row(k, u + static_cast<double>(m) * tau, 1e-18);
        const Complex down = full_row(k, u - static_cast<double>(m) * tau, 1e-18);
        acc += up + down;
        if (std::abs(up) + std::abs(down) < 1e-3 * eps * scale) break;
        if (m > 100 * R) throw EvaluationError("lattice_sum: outer rows failed to decay");
    }
    return acc;
}

}  // namespace

void Precision::validate() const {
    if (!(q_tail_eps > 0.0)) throw DomainError("Precision: q_tail_eps must be positive");
    if (quad_points < 16 || (quad_points & (quad_points - 1)) != 0)
        throw DomainError("Precision: quad_points must be a power of two >= 16");
    if (lattice_radius < 4) throw DomainError("Precision: lattice_radius must be >= 4");
    if (!(deriv_radius_frac > 0.0 && deriv_radius_frac < 1.0))
        throw DomainError("Precision: deriv_radius_frac must lie in (0,1)");
}

Precision Precision::nested() const {
    Precision p = *this;
    p.quad_points = std::max(16, quad_points / 4);
    return p;
}

UpperHalfPoint::UpperHalfPoint(Complex tau) : tau_(tau) {
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || !(tau.imag() > 0.0))
        throw DomainError("tau must satisfy Im(tau) > 0, got " + describe(tau));
}

Complex TruncatedLaurent::coeff(int k) const {
    const int idx = k + pole_order;
    if (idx < 0 || idx >= static_cast<int>(coefficients.size()))
        throw DomainError("TruncatedLaurent: coefficient index out of range");
    return coefficients[idx];
}

TruncatedLaurent cauchy_coefficients(const ScalarFn& f, Complex center, double radius,
                                     int pole_order, int trunc_degree, const Precision& prec) {
    prec.validate();
    if (!(radius > 0.0)) throw DomainError("cauchy_coefficients: radius must be positive");
    if (pole_order < 0 || trunc_degree < -pole_order)
        throw DomainError("cauchy_coefficients: invalid index range");
    const int m = prec.quad_points;
    const auto roots = unit_roots(m);
    const int count = pole_order + trunc_degree + 1;
    std::vector<Complex> acc(count, 0.0);
    for (int j = 0; j < m; ++j) {
        const Complex w = center + radius * roots[j];
        const Complex fv = f(w);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
            std::ostringstream os;
            os << "cauchy_coefficients: non-finite value at node " << j << " (w = " << describe(w)
               << ")";
            throw EvaluationError(os.str());
        }
        // f * (r e^{i theta})^{-k} for k = -pole_order .. trunc_degree
        const Complex step = 1.0 / (radius * roots[j]);
        Complex pw = ipow(radius * roots[j], pole_order);
        for (int idx = 0; idx < count; ++idx) {
            acc[idx] += fv * pw;
            pw *= step;
        }
    }
    TruncatedLaurent out;
    out.pole_order = pole_order;
    out.center = center;
    out.radius_used = radius;
    out.coefficients.resize(count);
    for (int idx = 0; idx < count; ++idx) out.coefficients[idx] = acc[idx] / static_cast<double>(m);
    return out;
}

CMatrix cauchy_taylor_vector(const VectorFn& f, Complex center, double radius, int trunc_degree,
                             const Precision& prec) {
    prec.validate();
    if (!(radius > 0.0)) throw DomainError("cauchy_taylor_vector: radius must be positive");
    const int m = prec.quad_points;
    const auto roots = unit_roots(m);
    CMatrix acc;
    for (int j = 0; j < m; ++j) {
        const Complex w = center + radius * roots[j];
        const CVector fv = f(w);
        if (!fv.allFinite()) {
            std::ostringstream os;
            os << "cauchy_taylor_vector: non-finite value at node " << j << " (w = " << describe(w)
               << ")";
            throw EvaluationError(os.str());
        }
        if (j == 0) acc = CMatrix::Zero(fv.size(), trunc_degree + 1);
        const Complex step = 1.0 / (radius * roots[j]);
        Complex pw = 1.0;
        for (int k = 0; k <= trunc_degree; ++k) {
            acc.col(k) += fv * pw;
            pw *= step;
        }
    }
    return acc / static_cast<double>(m);
}

Complex holomorphic_derivative(const ScalarFn& f, Complex at, int order, double singularity_distance,
                               const Precision& prec) {
    if (order < 1) throw DomainError("holomorphic_derivative: order must be >= 1");
    if (!(singularity_distance > 0.0))
        throw DomainError("holomorphic_derivative: singularity distance must be positive");
    const double r = prec.deriv_radius_frac * singularity_distance;
    const auto lc = cauchy_coefficients(f, at, r, 0, order, prec);
    return factorial(order) * lc.coeff(order);
}

CVector holomorphic_derivative(const VectorFn& f, Complex at, int order,
                               double singularity_distance, const Precision& prec) {
    if (order < 1) throw DomainError("holomorphic_derivative: order must be >= 1");
    if (!(singularity_distance > 0.0))
        throw DomainError("holomorphic_derivative: singularity distance must be positive");
    const double r = prec.deriv_radius_frac * singularity_distance;
    const CMatrix c = cauchy_taylor_vector(f, at, r, order, prec);
    return factorial(order) * c.col(order);
}

LatticeBasis reduced_basis(Complex tau) {
    Complex b1 = 1.0;
    Complex b2 = tau;
    for (int iter = 0; iter < 10000; ++iter) {
        if (std::norm(b2) < std::norm(b1)) std::swap(b1, b2);
        const double mu = std::round((b2 * std::conj(b1)).real() / std::norm(b1));
        if (mu == 0.0) break;
        b2 -= mu * b1;
    }
    return {b1, b2};
}

double lattice_distance(Complex p, Complex tau, double scale, bool exclude_zero) {
    const LatticeBasis lb = reduced_basis(tau);
    const Complex b1 = scale * lb.b1;
    const Complex b2 = scale * lb.b2;
    const double det = b1.real() * b2.imag() - b2.real() * b1.imag();
    const double x = (p.real() * b2.imag() - b2.real() * p.imag()) / det;
    const double y = (b1.real() * p.imag() - p.real() * b1.imag()) / det;
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    double best = std::numeric_limits<double>::infinity();
    for (int i = -2; i <= 3; ++i) {
        for (int j = -2; j <= 3; ++j) {
            const double cx = fx + i;
            const double cy = fy + j;
            if (exclude_zero && cx == 0.0 && cy == 0.0) continue;
            best = std::min(best, std::abs(p - cx * b1 - cy * b2));
        }
    }
    return best;
}

double shortest_vector(Complex tau) { return std::abs(reduced_basis(tau).b1); }

double tau_pole_distance(Complex u, Complex tau, double shift) {
    double best = tau.imag();
    // Candidates (u - n)/mu with mu = m - shift; large |mu| only approaches the real axis.
    for (int m = -64; m <= 64; ++m) {
        const double mu = m - shift;
        if (std::abs(mu) < 1e-12) continue;
        const double n = std::round((u - mu * tau).real());
        best = std::min(best, std::abs(mu * tau + n - u) / std::abs(mu));
    }
    return best;
}

Complex hurwitz_tail(int k, Complex a) {
    const auto& bern = bernoulli_numbers();
    Complex acc = std::pow(a, 1 - k) / static_cast<double>(k - 1) + 0.5 * std::pow(a, -k);
    const Complex inv2 = 1.0 / (a * a);
    Complex pw = std::pow(a, -k - 1);
    double rising = static_cast<double>(k);  // (k)_{2j-1}
    double last = std::numeric_limits<double>::infinity();
    for (int j = 1; 2 * j < static_cast<int>(bern.size()); ++j) {
        const Complex term = bern[2 * j] / factorial(2 * j) * rising * pw;
        const double mag = std::abs(term);
        if (mag > last) break;
        acc += term;
        if (mag < 1e-18 * std::abs(acc)) break;
        last = mag;
        pw *= inv2;
        rising *= static_cast<double>(k + 2 * j - 1) * static_cast<double>(k + 2 * j);
    }
    return acc;
}

Complex lattice_sum_offset(int k, Complex u, Complex tau, bool omit_zero, const Precision& prec) {
    prec.validate();
    if (k < 3) throw DomainError("lattice_sum: weight k must be >= 3 for absolute convergence");
    // Work in a reduced basis b1, b2 of the lattice and rescale by b1.
    const LatticeBasis lb = reduced_basis(tau);
    Complex t = lb.b2 / lb.b1;
    if (t.imag() < 0) t = -t;
    Complex w = u / lb.b1;
    const double det = t.imag();
    const double py = std::round(w.imag() / det);
    w -= py * t;
    w -= std::round(w.real());
    int R = prec.lattice_radius;
    Complex prev = completed_square_sum(k, w, t, omit_zero, R, prec.q_tail_eps);
    for (int iter = 0; iter < 12; ++iter) {
        R *= 2;
        const Complex cur = completed_square_sum(k, w, t, omit_zero, R, prec.q_tail_eps);
        if (std::abs(cur - prev) < prec.q_tail_eps * std::max(1.0, std::abs(cur)))
            return cur / ipow(lb.b1, k);
        prev = cur;
    }
    throw EvaluationError("lattice_sum: radius doubling did not saturate");
}

Complex lattice_sum(int k, double x, double y, const UpperHalfPoint& tau, const Precision& prec) {
    if (!(x >= 0.0 && x < 1.0 && y >= 0.0 && y < 1.0))
        throw DomainError("lattice_sum: offset must lie in [0,1)^2");
    const Complex t = tau.value();
    return lattice_sum_offset(k, x * t + y, t, x == 0.0 && y == 0.0, prec);
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Complex ipow(Complex z, int k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    Complex r = 1.0;
    Complex b = z;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

const std::vector<double>& bernoulli_numbers() {
    static const std::vector<double> table = [] {
        const int n = 40;
        std::vector<double> b(n + 1, 0.0);
        b[0] = 1.0;
        for (int m = 1; m <= n; ++m) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * b[k];
            b[m] = -s / (m + 1);
        }
        return b;
    }();
    return table;
}

}  // namespace ellpl
