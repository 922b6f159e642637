#include "ellpl/eisenstein_modular.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "ellpl/jacobi_kronecker.hpp"
#include "ellpl/weierstrass_theta.hpp"

namespace ellpl {

namespace {

using CacheKey = std::tuple<int, int, double, double, double, int, int, double>;

std::mutex g_cache_mutex;
std::map<CacheKey, std::vector<Complex>> g_cache;
constexpr std::size_t kMaxCacheEntries = 512;

// Table E^(k)_{x/N,y/N}, index x*N + y.
std::vector<Complex> e_table(int k, int N, const UpperHalfPoint& tau, const Precision& prec) {
    const Complex t = tau.value();
    const CacheKey key{k,        N, t.real(), t.imag(), prec.q_tail_eps, prec.quad_points,
                       prec.lattice_radius, prec.deriv_radius_frac};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    std::vector<Complex> table(static_cast<std::size_t>(N) * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) table[x * N + y] = eisenstein_E(k, x, y, N, tau, prec);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache.size() >= kMaxCacheEntries) g_cache.clear();
    g_cache.emplace(key, table);
    return table;
}

void require_torsion(int a, int b, int N) {
    if (N < 1) throw DomainError("level N must be positive");
    if (mod_rep(a, N) == 0 && mod_rep(b, N) == 0)
        throw DomainError("torsion index (a,b) must not be congruent to (0,0) mod N");
}

}  // namespace

std::string route_name(Route r) {
    switch (r) {
        case Route::lattice:
            return "lattice";
        case Route::wp:
            return "wp";
        case Route::kronecker:
            return "kronecker";
    }
    return "unknown";
}

int mod_rep(long long v, int N) { return static_cast<int>(((v % N) + N) % N); }

Complex eisenstein_E(int k, int x, int y, int N, const UpperHalfPoint& tau,
                     const Precision& prec) {
    if (N < 1) throw DomainError("eisenstein_E: level N must be positive");
    if (k == 1) throw DomainError("eisenstein_E: weight 1 has no lattice route; use modular_F");
    if (k < 1) throw DomainError("eisenstein_E: weight must be >= 2");
    const int xr = mod_rep(x, N);
    const int yr = mod_rep(y, N);
    const Complex t = tau.value();
    if (k == 2) {
        if (xr == 0 && yr == 0) return 0.0;
        const Complex u = (static_cast<double>(xr) * t + static_cast<double>(yr)) / double(N);
        return weierstrass_p(u, tau, prec) / (kTwoPiI * kTwoPiI);
    }
    const Complex s = lattice_sum(k, static_cast<double>(xr) / N, static_cast<double>(yr) / N,
                                  tau, prec);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(k - 1) / ipow(kTwoPiI, k) * s;
}

Complex bridge_factor(int k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * ipow(kTwoPiI, k) / factorial(k - 1);
}

ModularValue modular_F(int k, int a, int b, int N, const UpperHalfPoint& tau,
                       const Precision& prec) {
    require_torsion(a, b, N);
    if (k < 1) throw DomainError("modular_F: weight must be >= 1");
    ModularValue out;
    out.weight = k;
    out.level = N;
    out.a = mod_rep(a, N);
    out.b = mod_rep(b, N);
    const Complex t = tau.value();
    if (k == 1) {
        const Complex z = (static_cast<double>(out.a) * t + static_cast<double>(out.b)) / double(N);
        out.value = -eisenstein_kronecker_e(1, z, tau, prec) / kTwoPiI;
        out.route = Route::kronecker;
        return out;
    }
    const auto table = e_table(k, N, tau, prec);
    Complex acc = 0.0;
    for (int x = 0; x < N; ++x) {
        for (int y = 0; y < N; ++y) {
            const int e = mod_rep(static_cast<long long>(x) * out.b - static_cast<long long>(y) * out.a, N);
            acc += std::polar(1.0, 2.0 * kPi * e / N) * table[x * N + y];
        }
    }
    out.value = acc / std::pow(static_cast<double>(N), k);
    out.route = (k == 2) ? Route::wp : Route::lattice;
    return out;
}

ModularValue modular_DF(int k, int a, int b, int N, int D, const UpperHalfPoint& tau,
                        const Precision& prec) {
    if (D < 1) throw DomainError("modular_DF: D must be positive");
    if (std::gcd(D, N) != 1) throw DomainError("modular_DF: gcd(D,N) must be 1");
    const ModularValue f1 = modular_F(k, a, b, N, tau, prec);
    const ModularValue f2 = modular_F(k, static_cast<long long>(D) * a % N,
                                      static_cast<long long>(D) * b % N, N, tau, prec);
    ModularValue out = f1;
    const double dd = static_cast<double>(D);
    out.value = dd * dd * f1.value - std::pow(dd, 2 - k) * f2.value;
    return out;
}

void clear_eisenstein_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

}  // namespace ellpl
