#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ellpl/numeric_core.hpp"

namespace ellpl {

// Integer 2x2 matrix (a b; c d).
struct IntMatrix2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    IntMatrix2 operator*(const IntMatrix2& o) const;
    bool operator==(const IntMatrix2& o) const = default;
    IntMatrix2 transpose() const { return {a, c, b, d}; }
    // Inverse of a determinant-one matrix.
    IntMatrix2 inverse() const { return {d, -b, -c, a}; }
    static IntMatrix2 identity() { return {}; }
};

// Element ((m,n), gamma) of Z^2 x| Gamma(N).
struct DeckElement {
    std::int64_t m = 0, n = 0;
    IntMatrix2 gamma;

    bool operator==(const DeckElement& o) const = default;
    static DeckElement identity() { return {}; }
    static DeckElement shift(std::int64_t m, std::int64_t n) { return {m, n, {}}; }
};

// d1 o d2 = ((m2,n2) + gamma2^T (m1,n1), gamma1 gamma2); acts as d1 . (d2 . x).
DeckElement compose(const DeckElement& d1, const DeckElement& d2);
DeckElement inverse(const DeckElement& d);

bool in_sl2z(const IntMatrix2& g);
bool in_gamma(const IntMatrix2& g, int N);
// Throws DomainError when g is not in SL2(Z).
void require_sl2z(const IntMatrix2& g);
// Throws DomainError when g is not in Gamma(N).
void require_gamma(const IntMatrix2& g, int N);

struct CoveringPoint {
    Complex z;
    UpperHalfPoint tau;
};

// ((z+m tau+n)/(c tau+d), (a tau+b)/(c tau+d)).
CoveringPoint deck_act(const DeckElement& d, Complex z, const UpperHalfPoint& tau);

// exp[-2 pi i c/(c tau+d) (z+m tau+n)(w+m' tau+n') + 2 pi i m' z + 2 pi i m w + 2 pi i m m' tau].
Complex poincare_factor(std::int64_t m, std::int64_t n, std::int64_t mp, std::int64_t np,
                        const IntMatrix2& gamma, Complex z, Complex w, Complex tau);

// a_r = (2 pi i (dm - cz - cn)/(c tau+d))^r / r!, zero for r < 0.
Complex a_coefficient(int r, const DeckElement& d, Complex z, Complex tau);

// Basis e^{n-i-j} f^i g^j/(n-i-j)!, ordered j ascending outer, i ascending inner.
int rank_r(int n);
int basis_index(int n, int i, int j);
std::pair<int, int> basis_pair(int n, int s);

CMatrix automorphy_A1(const DeckElement& d, Complex z, Complex tau);
CMatrix automorphy_An(int n, const DeckElement& d, Complex z, Complex tau);

enum class TensorKind { plain, relative_1form, absolute_1form, absolute_2form };
TensorKind parse_tensor_kind(const std::string& name);
int tensor_length(int n, TensorKind kind);
CMatrix automorphy_tensor(int n, const DeckElement& d, Complex z, Complex tau, TensorKind kind);

// Poles at z with z + x tau + y in (1/D)(Z tau + Z).
struct PoleDivisor {
    int D = 1;
    double x = 0.0;
    double y = 0.0;

    double z_distance(Complex z, Complex tau) const;
    // Distance in tau at fixed z before the divisor reaches z.
    double tau_distance(Complex z, Complex tau) const;
    std::string describe() const;
};

// Vector-valued section on C x H in the fixed trivialization.
struct SectionEvaluator {
    int length = 0;
    std::function<CVector(Complex z, Complex tau)> eval;
    std::vector<PoleDivisor> divisors;

    CVector operator()(Complex z, Complex tau) const;
    // Infinite when the section has no poles.
    double pole_distance(Complex z, Complex tau) const;
    // Capped by Im tau.
    double tau_distance(Complex z, Complex tau) const;
    std::string singular_set() const;
};

// ||S(d.x) - M(d,x) S(x)||_inf / (1 + ||S(x)||_inf).
double section_transform_defect(int n, TensorKind kind, const SectionEvaluator& s,
                                const DeckElement& d, Complex z, const UpperHalfPoint& tau);

// Word of length <= max_len in I + N E12, I + N E21 and their inverses.
IntMatrix2 random_gamma(int N, std::mt19937_64& rng, int max_len = 6);
DeckElement random_deck(int N, std::mt19937_64& rng, int shift_bound, int max_len = 6);

}  // namespace ellpl
