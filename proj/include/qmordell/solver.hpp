// Constant solving by triangular coefficient matching.
//
// Plain family: w := 1 - F_k(.;p) / z_p^k is a combination of x_p^j,
// j = 1 .. jmax with jmax = #{ j : 1 <= j < (p+1)k/8 }. Since x_p = q(1+...),
// the matrix of the system in the coefficients of q^1..q^jmax is unit lower
// triangular; forward substitution is exact. Afterwards the full residual is
// checked below `depth` and reported, never assumed.
//
// Tilde family: the same at the other cusp; xtilde_p = q^{-a}(1+...) at
// argument multiple a, so the triangular structure runs top-down in j
// (most negative exponent first). The Corollary relation
// ctilde_j = 2^{-24j/(p+1)} (-1)^j c_j is checked against the plain solve.
//
// Classical family: z = phi^2, correction range 1 <= j <= (k-1)/4 inclusive.
#pragma once

#include "qmordell/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmordell {

struct SolveResult {
    std::string p_label;  // "3", "7", "11", "23" or "classical"
    long p = 0;           // 0 for classical
    long k = 0;
    bool tilde = false;
    long arg_mult = 1;
    std::vector<std::pair<long, Rational>> constants;  // (j, c_j), j ascending
    long verified_depth = 0;
    bool residual_ok = false;
    bool relation_ok = true;  // tilde solves only; true otherwise
};

// k(p+1)/2 (rounded up) + 16: heuristic residual depth, not a proof bound
long sturm_depth(long p, long k);
long default_solve_depth(long p, long k);  // 2 * sturm_depth

// number of unknowns for each family
long correction_count(long p, long k);            // #{j : 1 <= j < (p+1)k/8}
long classical_correction_count(long k);          // #{j : 1 <= j <= (k-1)/4}

SolveResult solve_constants(long p, long k, long depth);
SolveResult solve_constants_tilde(long p, long k, long depth);
SolveResult solve_classical(long k, long depth);

// brute-force representation counts (the oracles for z / ztilde coefficients):
// rep_count: #{(a,b) in Z^2 : a^2 + p b^2 = n}
// tri_count: #{(a,b) >= 0  : a(a+1)/2 + p b(b+1)/2 = n}
long rep_count(long p, long long n);
long tri_count(long p, long long n);

}  // namespace qmordell
