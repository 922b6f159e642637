#include "ellpl/level_deck.hpp"

#include <cmath>
#include <limits>

namespace ellpl {

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

DeckElement compose(const DeckElement& d1, const DeckElement& d2) {
    const IntMatrix2& g2 = d2.gamma;
    DeckElement out;
    out.m = d2.m + g2.a * d1.m + g2.c * d1.n;
    out.n = d2.n + g2.b * d1.m + g2.d * d1.n;
    out.gamma = d1.gamma * d2.gamma;
    return out;
}

DeckElement inverse(const DeckElement& d) {
    const IntMatrix2 gi = d.gamma.inverse();
    DeckElement out;
    out.gamma = gi;
    out.m = -(gi.a * d.m + gi.c * d.n);
    out.n = -(gi.b * d.m + gi.d * d.n);
    return out;
}

bool in_sl2z(const IntMatrix2& g) { return g.det() == 1; }

bool in_gamma(const IntMatrix2& g, int N) {
    if (!in_sl2z(g) || N < 1) return false;
    auto mod = [N](std::int64_t v) { return ((v % N) + N) % N; };
    return mod(g.a - 1) == 0 && mod(g.b) == 0 && mod(g.c) == 0 && mod(g.d - 1) == 0;
}

void require_sl2z(const IntMatrix2& g) {
    if (!in_sl2z(g))
        throw DomainError("matrix (" + std::to_string(g.a) + " " + std::to_string(g.b) + "; " +
                          std::to_string(g.c) + " " + std::to_string(g.d) +
                          ") is not in SL2(Z)");
}

void require_gamma(const IntMatrix2& g, int N) {
    require_sl2z(g);
    if (!in_gamma(g, N))
        throw DomainError("matrix is not congruent to the identity mod " + std::to_string(N));
}

CoveringPoint deck_act(const DeckElement& d, Complex z, const UpperHalfPoint& tau) {
    require_sl2z(d.gamma);
    const Complex t = tau.value();
    const auto& g = d.gamma;
    const Complex j = static_cast<double>(g.c) * t + static_cast<double>(g.d);
    const Complex zz = (z + static_cast<double>(d.m) * t + static_cast<double>(d.n)) / j;
    const Complex tt = (static_cast<double>(g.a) * t + static_cast<double>(g.b)) / j;
    return {zz, UpperHalfPoint(tt)};
}

Complex poincare_factor(std::int64_t m, std::int64_t n, std::int64_t mp, std::int64_t np,
                        const IntMatrix2& g, Complex z, Complex w, Complex tau) {
    const double c = static_cast<double>(g.c);
    const Complex j = c * tau + static_cast<double>(g.d);
    const Complex zs = z + static_cast<double>(m) * tau + static_cast<double>(n);
    const Complex ws = w + static_cast<double>(mp) * tau + static_cast<double>(np);
    const Complex e = -kTwoPiI * c / j * zs * ws + kTwoPiI * static_cast<double>(mp) * z +
                      kTwoPiI * static_cast<double>(m) * w +
                      kTwoPiI * static_cast<double>(m * mp) * tau;
    return std::exp(e);
}

Complex a_coefficient(int r, const DeckElement& d, Complex z, Complex tau) {
    if (r < 0) return 0.0;
    const auto& g = d.gamma;
    const double c = static_cast<double>(g.c);
    const double dd = static_cast<double>(g.d);
    const Complex x = kTwoPiI *
                      (dd * static_cast<double>(d.m) - c * z - c * static_cast<double>(d.n)) /
                      (c * tau + dd);
    return ipow(x, r) / factorial(r);
}

int rank_r(int n) { return (n + 1) * (n + 2) / 2; }

int basis_index(int n, int i, int j) {
    if (i < 0 || j < 0 || i + j > n) throw DomainError("basis_index: (i,j) out of range");
    // Blocks j' < j have sizes n+1, n, ..., n-j+2.
    return j * (n + 1) - j * (j - 1) / 2 + i;
}

std::pair<int, int> basis_pair(int n, int s) {
    if (s < 0 || s >= rank_r(n)) throw DomainError("basis_pair: index out of range");
    int j = 0;
    while (s >= n + 1 - j) {
        s -= n + 1 - j;
        ++j;
    }
    return {s, j};
}

CMatrix automorphy_A1(const DeckElement& d, Complex z, Complex tau) {
    const auto& g = d.gamma;
    const double c = static_cast<double>(g.c);
    const double dd = static_cast<double>(g.d);
    const Complex j = c * tau + dd;
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = 1.0;
    a(1, 0) = kTwoPiI * (dd * static_cast<double>(d.m) - c * z - c * static_cast<double>(d.n));
    a(1, 1) = j;
    a(2, 2) = 1.0 / j;
    return a;
}

CMatrix automorphy_An(int n, const DeckElement& d, Complex z, Complex tau) {
    if (n < 0) throw DomainError("automorphy_An: n must be >= 0");
    const int r = rank_r(n);
    const Complex jac = static_cast<double>(d.gamma.c) * tau + static_cast<double>(d.gamma.d);
    std::vector<Complex> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = a_coefficient(k, d, z, tau);
    CMatrix out = CMatrix::Zero(r, r);
    for (int col = 0; col < r; ++col) {
        const auto [i, j] = basis_pair(n, col);
        for (int ip = i; ip + j <= n; ++ip)
            out(basis_index(n, ip, j), col) = a[ip - i] * ipow(jac, ip - j);
    }
    return out;
}

TensorKind parse_tensor_kind(const std::string& name) {
    if (name == "plain") return TensorKind::plain;
    if (name == "relative-1form") return TensorKind::relative_1form;
    if (name == "absolute-1form") return TensorKind::absolute_1form;
    if (name == "absolute-2form") return TensorKind::absolute_2form;
    throw DomainError("unknown tensor kind: " + name);
}

int tensor_length(int n, TensorKind kind) {
    return kind == TensorKind::absolute_1form ? 2 * rank_r(n) : rank_r(n);
}

CMatrix automorphy_tensor(int n, const DeckElement& d, Complex z, Complex tau, TensorKind kind) {
    const CMatrix an = automorphy_An(n, d, z, tau);
    const auto& g = d.gamma;
    const double c = static_cast<double>(g.c);
    const Complex jac = c * tau + static_cast<double>(g.d);
    switch (kind) {
        case TensorKind::plain:
            return an;
        case TensorKind::relative_1form:
            return jac * an;
        case TensorKind::absolute_2form:
            return jac * jac * jac * an;
        case TensorKind::absolute_1form: {
            const int r = rank_r(n);
            const Complex lower = (c * z + c * static_cast<double>(d.n) -
                                   static_cast<double>(g.d) * static_cast<double>(d.m)) *
                                  jac;
            CMatrix out = CMatrix::Zero(2 * r, 2 * r);
            out.topLeftCorner(r, r) = jac * an;
            out.bottomLeftCorner(r, r) = lower * an;
            out.bottomRightCorner(r, r) = jac * jac * an;
            return out;
        }
    }
    throw DomainError("automorphy_tensor: unknown kind");
}

double PoleDivisor::z_distance(Complex z, Complex tau) const {
    const double d = static_cast<double>(D);
    return lattice_distance(d * (z + x * tau + y), tau) / d;
}

double PoleDivisor::tau_distance(Complex z, Complex tau) const {
    const double d = static_cast<double>(D);
    // D(z + x tau' + y) = m tau' + n  <=>  D(z+y) = (m - D x) tau' + n.
    return tau_pole_distance(d * (z + y), tau, d * x);
}

std::string PoleDivisor::describe() const {
    std::string out = "(1/" + std::to_string(D) + ")lattice";
    if (x != 0.0 || y != 0.0)
        out += " - (" + std::to_string(x) + " tau + " + std::to_string(y) + ")";
    return out;
}

CVector SectionEvaluator::operator()(Complex z, Complex tau) const {
    CVector v = eval(z, tau);
    if (v.size() != length)
        throw DomainError("section evaluator returned length " + std::to_string(v.size()) +
                          ", declared " + std::to_string(length));
    return v;
}

double SectionEvaluator::pole_distance(Complex z, Complex tau) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& dv : divisors) best = std::min(best, dv.z_distance(z, tau));
    return best;
}

double SectionEvaluator::tau_distance(Complex z, Complex tau) const {
    double best = tau.imag();
    for (const auto& dv : divisors) best = std::min(best, dv.tau_distance(z, tau));
    return best;
}

std::string SectionEvaluator::singular_set() const {
    if (divisors.empty()) return "none";
    std::string out;
    for (const auto& dv : divisors) out += (out.empty() ? "" : ", ") + dv.describe();
    return out;
}

double section_transform_defect(int n, TensorKind kind, const SectionEvaluator& s,
                                const DeckElement& d, Complex z, const UpperHalfPoint& tau) {
    if (s.length != tensor_length(n, kind))
        throw DomainError("section_transform_defect: section length does not match the matrix");
    const CoveringPoint moved = deck_act(d, z, tau);
    const CVector here = s(z, tau.value());
    const CVector there = s(moved.z, moved.tau.value());
    const CMatrix m = automorphy_tensor(n, d, z, tau.value(), kind);
    const CVector diff = there - m * here;
    return diff.cwiseAbs().maxCoeff() / (1.0 + here.cwiseAbs().maxCoeff());
}

IntMatrix2 random_gamma(int N, std::mt19937_64& rng, int max_len) {
    if (N < 1) throw DomainError("random_gamma: N must be positive");
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, 3);
    const std::int64_t n = N;
    const IntMatrix2 gens[4] = {{1, n, 0, 1}, {1, -n, 0, 1}, {1, 0, n, 1}, {1, 0, -n, 1}};
    IntMatrix2 g;
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k) g = g * gens[gen_dist(rng)];
    return g;
}

DeckElement random_deck(int N, std::mt19937_64& rng, int shift_bound, int max_len) {
    std::uniform_int_distribution<int> shift(-shift_bound, shift_bound);
    DeckElement d;
    d.m = shift(rng);
    d.n = shift(rng);
    d.gamma = random_gamma(N, rng, max_len);
    return d;
}

}  // namespace ellpl
