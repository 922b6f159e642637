#include "verify/oracles.hpp"

#include <cmath>
#include <vector>

namespace ellpl::oracle {

namespace {

constexpr double kPiL = 3.14159265358979323846;

double fact(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binom(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

// B_0..B_n from the recurrence sum_{j<=m} C(m+1,j) B_j = 0.
std::vector<double> bernoulli(int n) {
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += binom(m + 1, j) * b[j];
        b[m] = -acc / (m + 1);
    }
    return b;
}

// sum_n e^{-2 pi i beta n} (v+n)^{-k} for Im v > 0, by Poisson summation.
Complex twisted_row_upper(int k, Complex v, double beta) {
    const Complex two_pi_i(0.0, 2.0 * kPiL);
    Complex acc = 0.0;
    const long r0 = static_cast<long>(std::floor(-beta)) + 1;  // first r with r + beta > 0
    for (long r = r0;; ++r) {
        const double xi = r + beta;
        if (xi <= 0.0) continue;
        const Complex term = std::pow(xi, k - 1) * std::exp(two_pi_i * xi * v);
        acc += term;
        if (std::abs(term) < 1e-20 * std::max(1.0, std::abs(acc)) && r > r0 + 2) break;
        if (r > r0 + 1000000) break;
    }
    Complex pref = 1.0;
    for (int i = 0; i < k; ++i) pref *= -two_pi_i;
    return pref / fact(k - 1) * acc;
}

Complex twisted_row(int k, Complex v, double beta) {
    if (v.imag() > 0.0) return twisted_row_upper(k, v, beta);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * twisted_row_upper(k, -v, -beta);
}

}  // namespace

Complex eta_one_eisenstein(Complex tau) {
    const double pi2 = kPiL * kPiL;
    Complex acc = pi2 / 3.0;
    for (int m = 1; m < 100000; ++m) {
        const Complex s = std::sin(kPiL * static_cast<double>(m) * tau);
        const Complex term = 2.0 * pi2 / (s * s);
        acc += term;
        if (std::abs(term) < 1e-20 * std::abs(acc)) break;
    }
    return -acc;
}

double hurwitz_zeta(int k, double a) {
    const int n_direct = 30;
    const int p = 10;
    const auto b = bernoulli(2 * p);
    double acc = 0.0;
    for (int n = 0; n < n_direct; ++n) acc += std::pow(a + n, -k);
    const double x = a + n_direct;
    acc += std::pow(x, 1 - k) / (k - 1) + 0.5 * std::pow(x, -k);
    double rising = k;  // k (k+1) ... (k + 2j - 2)
    for (int j = 1; j <= p; ++j) {
        acc += b[2 * j] / fact(2 * j) * rising * std::pow(x, -k - 2 * j + 1);
        rising *= (k + 2 * j - 1) * (k + 2 * j);
    }
    return acc;
}

double bernoulli_poly(int k, double x) {
    const auto b = bernoulli(k);
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += binom(k, j) * b[j] * std::pow(x, k - j);
    return acc;
}

Complex lattice_sum_rows(int k, double x, double y, Complex tau) {
    Complex acc = 0.0;
    // The real row: m = -x is possible only for x = 0.
    if (x == 0.0) {
        if (y == 0.0)
            acc += (k % 2 == 0) ? 2.0 * hurwitz_zeta(k, 1.0) : 0.0;
        else
            acc += hurwitz_zeta(k, y) + ((k % 2 == 0) ? 1.0 : -1.0) * hurwitz_zeta(k, 1.0 - y);
    }
    const Complex u = x * tau + y;
    for (int m = 0; m < 100000; ++m) {
        Complex rows = 0.0;
        double size = 0.0;
        for (int sgn : {1, -1}) {
            const int mm = sgn * m;
            if (x == 0.0 && mm == 0) continue;
            if (sgn == -1 && m == 0) continue;
            const Complex row = twisted_row(k, u + static_cast<double>(mm) * tau, 0.0);
            rows += row;
            size = std::max(size, std::abs(row));
        }
        acc += rows;
        if (m > 2 && size < 1e-20 * std::max(1.0, std::abs(acc))) break;
    }
    return acc;
}

Complex e_k_character(int k, double s, double t, Complex tau) {
    const Complex two_pi_i(0.0, 2.0 * kPiL);
    // m = 0 row: sum_{n != 0} e^{2 pi i n x}/n^k = -(2 pi i)^k B_k(x)/k!, x = -s mod 1.
    double x = -s - std::floor(-s);
    Complex pref = 1.0;
    for (int i = 0; i < k; ++i) pref *= two_pi_i;
    Complex acc = -pref * bernoulli_poly(k, x) / fact(k);
    for (int m = 1; m < 100000; ++m) {
        // Rows of opposite sign can cancel through the character, so stop on row size.
        double size = 0.0;
        for (int sgn : {1, -1}) {
            const double mm = sgn * m;
            const Complex row = twisted_row(k, mm * tau, s);
            acc += std::exp(two_pi_i * t * mm) * row;
            size = std::max(size, std::abs(row));
        }
        if (m > 2 && size < 1e-20 * std::max(1.0, std::abs(acc))) break;
    }
    return acc;
}

Complex central_difference(const std::function<Complex(Complex)>& f, Complex x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace ellpl::oracle
