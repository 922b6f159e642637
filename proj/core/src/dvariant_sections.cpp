#include "ellpl/dvariant_sections.hpp"

#include <cmath>
#include <numeric>

#include "ellpl/eisenstein_modular.hpp"
#include "ellpl/jacobi_kronecker.hpp"

namespace ellpl {

namespace {

CVector z_derivative(const SectionEvaluator& s, Complex z, const UpperHalfPoint& tau,
                     const Precision& prec) {
    const Complex t = tau.value();
    const double dist = std::min(s.pole_distance(z, t), shortest_vector(t));
    VectorFn f = [&](Complex zz) { return s(zz, t); };
    return holomorphic_derivative(f, z, 1, dist, prec.nested());
}

CVector tau_derivative(const SectionEvaluator& s, Complex z, const UpperHalfPoint& tau,
                       const Precision& prec) {
    const Complex t = tau.value();
    VectorFn f = [&](Complex tt) { return s(z, tt); };
    return holomorphic_derivative(f, t, 1, s.tau_distance(z, t), prec.nested());
}

void require_length(const SectionEvaluator& s, int expected, const char* what) {
    if (s.length != expected)
        throw DomainError(std::string(what) + ": section length " + std::to_string(s.length) +
                          " does not match expected " + std::to_string(expected));
}

}  // namespace

void DVariantContext::validate() const {
    if (N < 3) throw DomainError("level N must be >= 3");
    if (D < 2) throw DomainError("D must be > 1");
    if (std::gcd(D, N) != 1) throw DomainError("gcd(D,N) must be 1");
    if (std::gcd(j0, N) != 1) throw DomainError("gcd(j0,N) must be 1");
    if (mod_rep(a, N) == 0 && mod_rep(b, N) == 0)
        throw DomainError("torsion index (a,b) must not be congruent to (0,0) mod N");
}

double DVariantContext::x() const {
    return static_cast<double>(mod_rep(static_cast<long long>(a) * j0, N)) / N;
}

double DVariantContext::y() const { return static_cast<double>(mod_rep(b, N)) / N; }

double s_D_pole_distance(int D, Complex z, Complex tau) {
    const double d = static_cast<double>(D);
    return lattice_distance(d * z, tau) / d;
}

SDExpansion s_D_expansion(int K, int D, Complex z, const TauData& td, const Precision& prec) {
    if (D < 1) throw DomainError("s_D: D must be positive");
    if (K < 0) throw DomainError("s_D: k must be >= 0");
    const Complex t = td.tau();
    if (s_D_pole_distance(D, z, t) < prec.q_tail_eps)
        throw PoleError("s_D: z lies on the D-torsion divisor (1/D)lattice");
    const double d = static_cast<double>(D);
    const double sv = shortest_vector(t);
    const double dist = std::min({sv, lattice_distance(z, t), d * sv,
                                  d * lattice_distance(d * z, t)});
    const double radius = prec.deriv_radius_frac * dist;
    ScalarFn f = [&](Complex w) {
        return d * d * jacobi_J(z, -w, td) - d * jacobi_J(d * z, -w / d, td);
    };
    const TruncatedLaurent lt = cauchy_coefficients(f, 0.0, radius, 1, K, prec);
    SDExpansion out;
    out.radius = radius;
    out.principal = lt.coeff(-1);
    out.s.resize(K + 1);
    double scale = 1.0;
    for (int k = 0; k <= K; ++k) {
        out.s[k] = lt.coeff(k);
        scale = std::max(scale, std::abs(out.s[k]) * std::pow(radius, k + 1));
    }
    if (std::abs(out.principal) > 1e-9 * scale)
        throw EvaluationError("s_D: principal parts failed to cancel, residual " +
                              std::to_string(std::abs(out.principal)));
    return out;
}

std::vector<Complex> s_D_all(int K, int D, Complex z, const UpperHalfPoint& tau,
                             const Precision& prec) {
    return s_D_expansion(K, D, z, TauData(tau, prec), prec).s;
}

Complex s_D(int k, int D, Complex z, const UpperHalfPoint& tau, const Precision& prec) {
    return s_D_all(k, D, z, tau, prec).back();
}

HeatChain heat_chain_defect(int k, int D, Complex z, const UpperHalfPoint& tau,
                            const Precision& prec, bool mismatch) {
    if (k < 0) throw DomainError("heat_chain_defect: k must be >= 0");
    const Complex t = tau.value();
    const double dz = s_D_pole_distance(D, z, t);
    if (dz < prec.q_tail_eps) throw PoleError("heat_chain_defect: z on the D-torsion divisor");
    const double dt = tau_pole_distance(static_cast<double>(D) * z, t);
    const Precision outer = prec.nested();
    ScalarFn ft = [&](Complex tt) { return s_D_all(k, D, z, UpperHalfPoint(tt), prec)[k]; };
    const int partner = mismatch ? k : k + 1;
    const TauData td(tau, prec);
    ScalarFn fz = [&](Complex zz) { return s_D_expansion(partner, D, zz, td, prec).s[partner]; };
    HeatChain out;
    out.d_tau = holomorphic_derivative(ft, t, 1, dt, outer);
    out.d_z_next = holomorphic_derivative(fz, z, 1, dz, outer);
    out.defect = out.d_tau + static_cast<double>(k + 1) / kTwoPiI * out.d_z_next;
    return out;
}

SectionEvaluator build_q(int n, int D, const Precision& prec) {
    if (n < 0) throw DomainError("build_q: n must be >= 0");
    SectionEvaluator s;
    s.length = rank_r(n);
    s.divisors = {PoleDivisor{D, 0.0, 0.0}};
    s.eval = [n, D, prec](Complex z, Complex tau) {
        const auto v = s_D_all(n, D, z, UpperHalfPoint(tau), prec);
        CVector out = CVector::Zero(rank_r(n));
        for (int k = 0; k <= n; ++k) out(basis_index(n, k, 0)) = v[k];
        return out;
    };
    return s;
}

SectionEvaluator build_p(int n, int D, const Precision& prec) {
    if (n < 0) throw DomainError("build_p: n must be >= 0");
    SectionEvaluator s;
    const int r = rank_r(n);
    s.length = 2 * r;
    s.divisors = {PoleDivisor{D, 0.0, 0.0}};
    s.eval = [n, r, D, prec](Complex z, Complex tau) {
        const auto v = s_D_all(n + 1, D, z, UpperHalfPoint(tau), prec);
        CVector out = CVector::Zero(2 * r);
        for (int k = 0; k <= n; ++k) {
            out(basis_index(n, k, 0)) = v[k];
            out(r + basis_index(n, k, 0)) = -static_cast<double>(k + 1) / kTwoPiI * v[k + 1];
        }
        return out;
    };
    return s;
}

SectionEvaluator restrict_to_relative(int n, const SectionEvaluator& s) {
    const int r = rank_r(n);
    require_length(s, 2 * r, "restrict_to_relative");
    SectionEvaluator out;
    out.length = r;
    out.divisors = s.divisors;
    out.eval = [s, r](Complex z, Complex tau) -> CVector { return s(z, tau).head(r); };
    return out;
}

SectionEvaluator drop_degree(int n, const SectionEvaluator& s) {
    if (n < 1) throw DomainError("drop_degree: n must be >= 1");
    const int r = rank_r(n);
    const int rl = rank_r(n - 1);
    if (s.length != r && s.length != 2 * r)
        throw DomainError("drop_degree: section length does not match degree");
    const int blocks = s.length / r;
    SectionEvaluator out;
    out.length = blocks * rl;
    out.divisors = s.divisors;
    out.eval = [s, n, r, rl, blocks](Complex z, Complex tau) {
        const CVector v = s(z, tau);
        CVector w(blocks * rl);
        for (int blk = 0; blk < blocks; ++blk)
            for (int idx = 0; idx < rl; ++idx) {
                const auto [i, j] = basis_pair(n - 1, idx);
                w(blk * rl + idx) = v(blk * r + basis_index(n, i, j));
            }
        return w;
    };
    return out;
}

CMatrix connection_Z(int n, Complex eta1) {
    const int r = rank_r(n);
    CMatrix z = CMatrix::Zero(r, r);
    for (int col = 0; col < r; ++col) {
        const auto [i, j] = basis_pair(n, col);
        if (i + j + 1 > n) continue;
        z(basis_index(n, i + 1, j), col) = eta1;
        z(basis_index(n, i, j + 1), col) = 1.0;
    }
    return z;
}

CMatrix connection_T(int n, Complex eta1, Complex eta1_prime) {
    const int r = rank_r(n);
    CMatrix t = CMatrix::Zero(r, r);
    for (int col = 0; col < r; ++col) {
        const auto [i, j] = basis_pair(n, col);
        const double di = i;
        const double dj = j;
        if (i > 0) {
            t(col, col) += -di * eta1 / kTwoPiI;
            t(basis_index(n, i - 1, j + 1), col) += -di / kTwoPiI;
        }
        if (j > 0) {
            t(basis_index(n, i + 1, j - 1), col) += dj * (eta1 * eta1 / kTwoPiI - eta1_prime);
            t(col, col) += dj * eta1 / kTwoPiI;
        }
    }
    return t;
}

ConnectionKind parse_connection_kind(const std::string& name) {
    if (name == "relative") return ConnectionKind::relative;
    if (name == "absolute") return ConnectionKind::absolute;
    if (name == "gauss-manin") return ConnectionKind::gauss_manin;
    throw DomainError("unknown connection kind: " + name);
}

CVector apply_connection(int n, ConnectionKind kind, const SectionEvaluator& s, Complex z,
                         const UpperHalfPoint& tau, const Precision& prec) {
    const TauData td(tau, prec);
    const Complex eta1 = td.eta_one();
    switch (kind) {
        case ConnectionKind::relative: {
            require_length(s, rank_r(n), "apply_connection(relative)");
            const CVector v = s(z, tau.value());
            return z_derivative(s, z, tau, prec) + connection_Z(n, eta1) * v;
        }
        case ConnectionKind::absolute: {
            const int r = rank_r(n);
            require_length(s, r, "apply_connection(absolute)");
            const CVector v = s(z, tau.value());
            const Complex eta1p = eta_one_derivative(tau, prec);
            CVector out(2 * r);
            out.head(r) = z_derivative(s, z, tau, prec) + connection_Z(n, eta1) * v;
            out.tail(r) = tau_derivative(s, z, tau, prec) + connection_T(n, eta1, eta1p) * v;
            return out;
        }
        case ConnectionKind::gauss_manin: {
            require_length(s, 2, "apply_connection(gauss-manin)");
            const CVector v = s(z, tau.value());
            const Complex eta1p = eta_one_derivative(tau, prec);
            const CMatrix t1 = connection_T(1, eta1, eta1p);
            const int f = basis_index(1, 1, 0);
            const int g = basis_index(1, 0, 1);
            CMatrix sub(2, 2);
            sub << t1(f, f), t1(f, g), t1(g, f), t1(g, g);
            return tau_derivative(s, z, tau, prec) + sub * v;
        }
    }
    throw DomainError("apply_connection: unknown kind");
}

CVector apply_deRham1(int n, const SectionEvaluator& s, Complex z, const UpperHalfPoint& tau,
                      const Precision& prec) {
    const int r = rank_r(n);
    require_length(s, 2 * r, "apply_deRham1");
    const TauData td(tau, prec);
    const Complex eta1 = td.eta_one();
    const Complex eta1p = eta_one_derivative(tau, prec);
    const CVector v = s(z, tau.value());
    const CVector dz = z_derivative(s, z, tau, prec);
    const CVector dt = tau_derivative(s, z, tau, prec);
    return dz.tail(r) - dt.head(r) + connection_Z(n, eta1) * v.tail(r) -
           connection_T(n, eta1, eta1p) * v.head(r);
}

SectionEvaluator torsion_translate(int n, const DVariantContext& ctx, const SectionEvaluator& s) {
    const int r = rank_r(n);
    if (s.length != r && s.length != 2 * r)
        throw DomainError("torsion_translate: section length does not match degree");
    const double x = ctx.x();
    const double y = ctx.y();
    std::vector<Complex> c(n + 1);
    c[0] = 1.0;
    for (int m = 1; m <= n; ++m) c[m] = c[m - 1] * (-kTwoPiI * x) / static_cast<double>(m);
    SectionEvaluator out;
    out.length = s.length;
    for (const auto& dv : s.divisors) out.divisors.push_back({dv.D, dv.x + x, dv.y + y});
    out.eval = [s, n, r, x, y, c](Complex z, Complex tau) {
        const CVector v = s(z + x * tau + y, tau);
        CVector w = CVector::Zero(v.size());
        const int blocks = static_cast<int>(v.size()) / r;
        for (int blk = 0; blk < blocks; ++blk)
            for (int idx = 0; idx < r; ++idx) {
                const auto [i, j] = basis_pair(n, idx);
                for (int k = 0; k <= i; ++k)
                    w(blk * r + idx) += c[i - k] * v(blk * r + basis_index(n, k, j));
            }
        return w;
    };
    return out;
}

CVector specialize_torsion(int n, const DVariantContext& ctx, const SectionEvaluator& s,
                           const UpperHalfPoint& tau, const Precision& prec) {
    const int r = rank_r(n);
    require_length(s, 2 * r, "specialize_torsion");
    const SectionEvaluator hat = torsion_translate(n, ctx, s);
    const Complex t = tau.value();
    if (hat.pole_distance(0.0, t) < prec.q_tail_eps)
        throw PoleError("specialize_torsion: torsion point lies on " + s.singular_set());
    const CVector w = hat(0.0, t);
    return ctx.x() * w.head(r) + w.tail(r);
}

CVector expected_specialization(int n, const DVariantContext& ctx, const UpperHalfPoint& tau,
                                const Precision& prec) {
    ctx.validate();
    CVector out = CVector::Zero(rank_r(n));
    const int aj = mod_rep(static_cast<long long>(ctx.a) * ctx.j0, ctx.N);
    for (int k = 1; k <= n + 1; ++k) {
        const Complex df = modular_DF(k + 1, aj, ctx.b, ctx.N, ctx.D, tau, prec).value;
        out(basis_index(n, k - 1, 0)) = bridge_factor(k) * df;
    }
    return out;
}

}  // namespace ellpl
