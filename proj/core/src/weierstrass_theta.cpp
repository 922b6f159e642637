#include "ellpl/weierstrass_theta.hpp"

#include <cmath>

#include "ellpl/level_deck.hpp"

namespace ellpl {

namespace {

constexpr int kMaxReductionSteps = 10000;

// sum_{n>=1} sigma_1(n) q^n as the Lambert series sum n q^n/(1-q^n).
Complex sigma1_series(const std::vector<Complex>& qn) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < qn.size(); ++k)
        acc += static_cast<double>(k + 1) * qn[k] / (1.0 - qn[k]);
    return acc;
}

}  // namespace

TauData::TauData(const UpperHalfPoint& tau, const Precision& prec)
    : tau_(tau.value()), eps_(prec.q_tail_eps) {
    prec.validate();
    Complex cur = tau_;
    for (int it = 0;; ++it) {
        if (it > kMaxReductionSteps) throw EvaluationError("TauData: reduction did not terminate");
        const double k = std::round(cur.real());
        if (k != 0.0) {
            steps_.push_back({false, k, cur});
            cur -= k;
        }
        if (std::norm(cur) < 1.0 - 1e-14) {
            steps_.push_back({true, 0.0, cur});
            cur = -1.0 / cur;
            continue;
        }
        break;
    }
    tau_red_ = cur;
    q_ = std::exp(kTwoPiI * tau_red_);
    const double aq = std::abs(q_);
    Complex p = q_;
    Complex prod = 1.0;
    for (int n = 1; std::pow(aq, n - 0.5) > 1e-2 * eps_ || n < 2; ++n) {
        qn_.push_back(p);
        prod *= (1.0 - p);
        p *= q_;
    }
    norm_ = 1.0 / (prod * prod);

    Complex eta = -(kPi * kPi / 3.0 - 8.0 * kPi * kPi * sigma1_series(qn_));
    for (auto s = steps_.rbegin(); s != steps_.rend(); ++s) {
        if (!s->inversion) continue;
        const Complex t = s->tau_before;
        eta = (eta - kTwoPiI * t) / (t * t);
    }
    eta1_ = eta;
}

Complex TauData::theta_reduced(Complex z, Complex& log_factor) const {
    const Complex t = tau_red_;
    const double m = std::round(z.imag() / t.imag());
    Complex z0 = z - m * t;
    const double n = std::round(z0.real());
    z0 -= n;
    log_factor += kPi * kI * (m + n) - kTwoPiI * m * z0 - kPi * kI * m * m * t;
    const Complex s = std::exp(kPi * kI * z0);
    const Complex qz = s * s;
    Complex prod = (s - 1.0 / s) / kTwoPiI;
    for (const Complex& p : qn_) prod *= (1.0 - p * qz) * (1.0 - p / qz);
    return prod * norm_;
}

Complex TauData::theta(Complex z) const {
    Complex log_factor = 0.0;
    Complex mult = 1.0;
    for (const auto& s : steps_) {
        if (!s.inversion) continue;
        const Complex t = s.tau_before;
        log_factor += -kPi * kI * z * z / t;
        mult *= t;
        z /= t;
    }
    // Exponents are summed before exponentiating; separately they can overflow.
    const Complex reduced = theta_reduced(z, log_factor);
    return mult * std::exp(log_factor) * reduced;
}

Complex eta_one(const UpperHalfPoint& tau, const Precision& prec) {
    return TauData(tau, prec).eta_one();
}

Complex eta_one_derivative(const UpperHalfPoint& tau, const Precision& prec) {
    const Precision inner = prec.nested();
    ScalarFn f = [&](Complex t) { return eta_one(UpperHalfPoint(t), inner); };
    return holomorphic_derivative(f, tau.value(), 1, tau.value().imag(), prec);
}

Complex theta_elementary(Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    return TauData(tau, prec).theta(z);
}

Complex theta_transform_factor(Complex z, Complex tau, const DeckElement& deck) {
    require_sl2z(deck.gamma);
    const double c = static_cast<double>(deck.gamma.c);
    const double d = static_cast<double>(deck.gamma.d);
    const double m = static_cast<double>(deck.m);
    const double n = static_cast<double>(deck.n);
    const Complex j = c * tau + d;
    const Complex zs = z + m * tau + n;
    const Complex e = kPi * kI * c * zs * zs / j + kPi * kI * (m + n) - kTwoPiI * m * z -
                      kPi * kI * m * m * tau;
    return std::exp(e) / j;
}

Complex theta_transform(Complex z, const UpperHalfPoint& tau, const DeckElement& deck,
                        const Precision& prec) {
    return theta_transform_factor(z, tau.value(), deck) * theta_elementary(z, tau, prec);
}

std::vector<Complex> theta_taylor(Complex z, const TauData& td, int order, const Precision& prec) {
    const double radius = prec.deriv_radius_frac * shortest_vector(td.tau());
    ScalarFn f = [&](Complex h) { return td.theta(h); };
    const TruncatedLaurent lt = cauchy_coefficients(f, z, radius, 0, order, prec);
    std::vector<Complex> out(lt.coefficients);
    out[0] = td.theta(z);
    return out;
}

SigmaZetaP weierstrass_sigma_zeta_p(Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    const TauData td(tau, prec);
    if (lattice_distance(z, tau.value()) < prec.q_tail_eps)
        throw PoleError("weierstrass zeta/p: z lies on the period lattice");
    const auto c = theta_taylor(z, td, 2, prec);
    const Complex eta = td.eta_one();
    const Complex l = c[1] / c[0];
    SigmaZetaP out;
    out.sigma = std::exp(-z * z * eta / 2.0) * c[0];
    out.zeta = l - eta * z;
    out.p = l * l - 2.0 * c[2] / c[0] + eta;
    return out;
}

Complex weierstrass_zeta(Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    return weierstrass_sigma_zeta_p(z, tau, prec).zeta;
}

Complex weierstrass_p(Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    return weierstrass_sigma_zeta_p(z, tau, prec).p;
}

Complex quasi_period(int m, int n, const UpperHalfPoint& tau, const Precision& prec) {
    const Complex t = tau.value();
    const Complex z0 = 0.37 + 0.29 * t;
    const Complex eta_tau = weierstrass_zeta(z0, tau, prec) - weierstrass_zeta(z0 + t, tau, prec);
    return static_cast<double>(m) * eta_tau + static_cast<double>(n) * eta_one(tau, prec);
}

Complex dedekind_eta(const UpperHalfPoint& tau, const Precision& prec) {
    const Complex t = tau.value();
    const Complex q = std::exp(kTwoPiI * t);
    Complex prod = 1.0;
    Complex p = q;
    for (long n = 1; std::abs(p) > 1e-2 * prec.q_tail_eps; ++n) {
        if (n > 10000000) throw EvaluationError("dedekind_eta: product did not converge");
        prod *= (1.0 - p);
        p *= q;
    }
    return std::exp(kTwoPiI * t / 24.0) * prod;
}

Complex theta11(Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    const Complex t = tau.value();
    auto term = [&](long n) {
        const double h = static_cast<double>(n) + 0.5;
        return std::exp(kPi * kI * h * h * t + kTwoPiI * h * (z + 0.5));
    };
    const long center = std::lround(-z.imag() / t.imag() - 0.5);
    Complex acc = term(center);
    const double peak = std::abs(acc);
    for (long k = 1;; ++k) {
        const Complex up = term(center + k);
        const Complex down = term(center - k);
        acc += up + down;
        if (std::abs(up) + std::abs(down) < 1e-2 * prec.q_tail_eps * std::max(peak, 1e-300) &&
            k > 2)
            break;
        if (k > 10000000) throw EvaluationError("theta11: series did not converge");
    }
    return acc;
}

}  // namespace ellpl
