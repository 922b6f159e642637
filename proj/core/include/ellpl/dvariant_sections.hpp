#pragma once

#include <string>
#include <vector>

#include "ellpl/level_deck.hpp"
#include "ellpl/numeric_core.hpp"
#include "ellpl/weierstrass_theta.hpp"

namespace ellpl {

struct DVariantContext {
    int D = 2;
    int N = 3;
    int a = 1;
    int b = 0;
    int j0 = 1;

    // gcd(D,N) = 1, gcd(j0,N) = 1 and (a,b) not both zero mod N.
    void validate() const;
    // Translation point x tau + y with x = (a j0 mod N)/N, y = (b mod N)/N.
    double x() const;
    double y() const;
};

struct SDExpansion {
    std::vector<Complex> s;  // s^D_0 .. s^D_K
    Complex principal;       // residual w^{-1} coefficient
    double radius = 0.0;
};

// Taylor data of D^2 J(z,-w,tau) - D J(Dz,-w/D,tau) at w = 0.
SDExpansion s_D_expansion(int K, int D, Complex z, const TauData& td, const Precision& prec);
std::vector<Complex> s_D_all(int K, int D, Complex z, const UpperHalfPoint& tau,
                             const Precision& prec = {});
Complex s_D(int k, int D, Complex z, const UpperHalfPoint& tau, const Precision& prec = {});
// Distance from z to (1/D)(Z tau + Z).
double s_D_pole_distance(int D, Complex z, Complex tau);

struct HeatChain {
    Complex defect;
    Complex d_tau;     // d/dtau s_k
    Complex d_z_next;  // d/dz of the partner (s_{k+1}, or s_k with mismatch)
};
// d/dtau s_k + (k+1)/(2 pi i) d/dz s_{k+1}.
HeatChain heat_chain_defect(int k, int D, Complex z, const UpperHalfPoint& tau,
                            const Precision& prec = {}, bool mismatch = false);

// (s_0, .., s_n, 0, .., 0) of length r(n).
SectionEvaluator build_q(int n, int D, const Precision& prec = {});
// q_n layout, then -(k+1)/(2 pi i) s_{k+1} at slot (k,0) of the second half.
SectionEvaluator build_p(int n, int D, const Precision& prec = {});
// First half of an absolute section.
SectionEvaluator restrict_to_relative(int n, const SectionEvaluator& s);
// e^{n-i-j} f^i g^j/(n-i-j)! -> e^{n-1-i-j} f^i g^j/(n-1-i-j)!, degree n to n-1.
SectionEvaluator drop_degree(int n, const SectionEvaluator& s);

// Connection matrices on the basis of degree n: dz part Z, dtau part T.
CMatrix connection_Z(int n, Complex eta1);
CMatrix connection_T(int n, Complex eta1, Complex eta1_prime);

enum class ConnectionKind { relative, absolute, gauss_manin };
ConnectionKind parse_connection_kind(const std::string& name);

// relative: dz v + Z v (length r(n)); absolute: (dz v + Z v, dtau v + T v) (length 2 r(n));
// gauss_manin: dtau (chi, xi) + T_1 restricted to (f, g) (length 2).
CVector apply_connection(int n, ConnectionKind kind, const SectionEvaluator& s, Complex z,
                         const UpperHalfPoint& tau, const Precision& prec = {});

// dz g - dtau f + Z g - T f for s = (f, g) of length 2 r(n).
CVector apply_deRham1(int n, const SectionEvaluator& s, Complex z, const UpperHalfPoint& tau,
                      const Precision& prec = {});

// l^_{i,j}(z) = sum_{k<=i} (-2 pi i x)^{i-k}/(i-k)! l_{k,j}(z + x tau + y), blockwise.
SectionEvaluator torsion_translate(int n, const DVariantContext& ctx, const SectionEvaluator& s);

// x l^(0) + lambda^(0) for s = (l, lambda) of length 2 r(n).
CVector specialize_torsion(int n, const DVariantContext& ctx, const SectionEvaluator& s,
                           const UpperHalfPoint& tau, const Precision& prec = {});

// Closed form of the specialization of p_n^D: entry (k-1,0) is
// (-1)^k (2 pi i)^k/(k-1)! DF^(k+1)_{a j0, b}, other entries zero.
CVector expected_specialization(int n, const DVariantContext& ctx, const UpperHalfPoint& tau,
                                const Precision& prec = {});

}  // namespace ellpl
