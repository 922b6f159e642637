#pragma once

#include <string>

#include "ellpl/numeric_core.hpp"

namespace ellpl {

enum class Route { lattice, wp, kronecker };
std::string route_name(Route r);

// A value of a level-N modular form tagged with its data.
struct ModularValue {
    Complex value;
    int weight = 0;
    int level = 0;
    int a = 0;
    int b = 0;
    int component = 1;
    Route route = Route::lattice;
};

int mod_rep(long long v, int N);

// E^(k)_{x/N,y/N}(tau) for k >= 3; the tilde-normalized value for k = 2, zero at (0,0).
Complex eisenstein_E(int k, int x, int y, int N, const UpperHalfPoint& tau,
                     const Precision& prec = {});

// N^{-k} sum_{x,y} zeta_N^{xb-ya} E^(k)_{x/N,y/N}; k = 1 through e_1.
ModularValue modular_F(int k, int a, int b, int N, const UpperHalfPoint& tau,
                       const Precision& prec = {});

// D^2 F^(k)_{a,b} - D^{2-k} F^(k)_{Da,Db}.
ModularValue modular_DF(int k, int a, int b, int N, int D, const UpperHalfPoint& tau,
                        const Precision& prec = {});

// (-1)^k (2 pi i)^k/(k-1)! ; e_k(a tau/N + b/N) = bridge_factor(k) F^(k)_{a,b}.
Complex bridge_factor(int k);

// Drops the cached E^(k) tables.
void clear_eisenstein_cache();

}  // namespace ellpl
