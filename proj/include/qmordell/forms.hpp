// Builders for every modular object the identities use, as exact q-expansions:
//
//   eta products        eta_m := q^{m/24} prod_{n>=1} (1 - q^{mn}); quotients
//                       prod_m eta_m^{r_m} must have integral leading power
//                       L = sum_m m r_m / 24 (else: rejected).
//   theta               phi(q) = sum_{n in Z} q^{n^2},
//                       psi(q) = sum_{n>=0} q^{n(n+1)/2}
//   z_p                 theta series of x^2 + p y^2 = phi(q) phi(q^p)
//   ztilde_p            q^{(p+1)/8} psi(q) psi(q^p); for p in {3,11} the
//                       leading power is half-integral, so the builder only
//                       accepts even argument multiples (q -> q^2 absorbs it)
//   x_p, xtilde_p       the cusp correctors (eta quotients, valuation +1 / -1)
//   E_{2k}              classical Eisenstein series, and for odd weight the
//   E0_k, Einf_k        weight-k level-4p series attached to (.|p) expanded at
//                       the cusps 0 and infinity (two independent routes each)
//   G, Gtilde           E-combinations that live on level p resp. 4p
//   F_k(tau; p)         the normalized combination whose z_p^k - F is cuspidal
//   Ftilde_k(tau; p)    the tilde-side analogue (negative leading exponents)
//   classical F_k, x    the four-squares-family objects (p = 1 column)
//   lambert_expand      generic sum_j j^w chi(j) N(q^j) / (1 - s q^{dj})
//
// Everything returns a QSeries with coefficients known strictly below `depth`.
#pragma once

#include "qmordell/exactnum.hpp"
#include "qmordell/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmordell {

// p values the z_p machinery accepts
bool is_supported_p(long p);
void require_supported_p(long p);

// ---------------------------------------------------------------- eta

struct EtaQuotient {
    // argument multiplier m -> exponent r_m; entries may be negative
    std::map<long, long> exponents;

    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<std::pair<const long, long>> e) : exponents(e) {}

    EtaQuotient& with(long m, long r);     // accumulate r into exponents[m]
    EtaQuotient scaled(long a) const;      // q -> q^a
    Rational leading_power_24() const;     // the exact L = sum_m m r_m / 24
    long leading_power() const;            // validated integral L
};

// prod_{n>=1} (1 - q^{mn}) truncated below depth (no q^{m/24} prefactor)
QSeries eta_product_part(long m, long depth);
// full quotient including q^L; throws "fractional leading power" if L is not integral
QSeries eta_quotient(const EtaQuotient& eq, long depth);

// ---------------------------------------------------------------- theta

QSeries phi(long depth);
QSeries psi(long depth);

// lattice route: count m^2 + p n^2 = N directly
QSeries z_p(long p, long depth);
// product route: phi(q) phi(q^p); equal to z_p, kept separate as a cross-check
QSeries z_p_theta(long p, long depth);
QSeries z_pow(long p, long k, long depth);

// q^{k(p+1)a/8} (psi(q^a) psi(q^{pa}))^k; a = arg_mult
QSeries z_tilde_pow(long p, long k, long arg_mult, long depth);
QSeries z_tilde_p(long p, long arg_mult, long depth);

EtaQuotient x_p_quotient(long p);
EtaQuotient x_tilde_quotient(long p);
EtaQuotient classical_x_quotient();
QSeries x_p(long p, long depth);
QSeries x_tilde_p(long p, long arg_mult, long depth);
QSeries classical_x(long depth);

// ---------------------------------------------------------------- eisenstein

// E_{2k} = 1 - (4k/B_{2k}) sum_j sigma_{2k-1}(j) q^j, k >= 1
QSeries eisenstein_E(long two_k, long depth);

// weight k odd, character (.|p): expansions at the two cusps.
//   Einf_k = 1 - (2k/B_{k,p}) sum_j (j|p) j^{k-1} q^j / (1 - q^j)
//   E0_k   = delta_{k,1} - (2k/B_{k,p}) sum_j j^{k-1} (sum_l (l|p) q^{jl}) / (1 - q^{pj})
// The σ-weighted Fourier route is the primary implementation; the _direct
// versions expand the double Lambert sums literally and exist as oracles.
QSeries eisenstein_Einf(long k, long p, long depth);
QSeries eisenstein_E0(long k, long p, long depth);
QSeries eisenstein_Einf_direct(long k, long p, long depth);
QSeries eisenstein_E0_direct(long k, long p, long depth);

// G_{2k}(tau) = E_{2k}(tau) + (-p)^k E_{2k}(p tau), 2k >= 4 or (2k = 2 via the
// weight-2 combination, which is already level p)
QSeries G_even(long two_k, long p, long depth);
// G_{2k+1} = Einf + (-p)^k E0, Gtilde_{2k+1} = Einf - (-p)^k E0 (weight 2k+1)
QSeries G_odd(long k, long p, long depth);        // k = 2k'+1 odd weight
QSeries G_tilde_odd(long k, long p, long depth);

// F_k(tau; p): Eisenstein part of z_p^k, any k >= 1, p in {3,7,11,23}
QSeries F_series(long k, long p, long depth);
// Ftilde_k: Eisenstein part of ztilde_p^k at argument multiple a
QSeries F_tilde_series(long k, long p, long arg_mult, long depth);

// classical column: F_k with z^k the 2k-squares theta (p = 1)
QSeries classical_z_pow(long k, long depth);  // phi(q)^{2k}... see impl note
QSeries classical_F(long k, long depth);

// ---------------------------------------------------------------- lambert

struct LambertTerm {
    long exponent;  // e_i in q^{e_i j}
    int sign;       // +1 / -1
};

// sum_{j>=1} j^weight chi(j) (sum_i sign_i q^{e_i j}) / (1 - s_j q^{dj})
// with s_j = denominator_sign, unless parity is set, in which case
// s_j = (-1)^{parity + j} (the 1 - (-1)^{k+j} q^j denominators).
struct LambertSpec {
    unsigned weight = 0;
    long character_modulus = 0;  // 0: no character; else (j | p)
    std::vector<LambertTerm> numerator = {{1, +1}};
    long denominator_scale = 1;
    int denominator_sign = +1;
    std::optional<int> parity;
};

QSeries lambert_expand(const LambertSpec& spec, long depth);

// ---------------------------------------------------------------- registry

// A buildable series reference: the identity catalog and the CLI `expand`
// command both speak SeriesSpec.
struct SeriesSpec {
    enum class Kind {
        Phi, Psi,
        ZPow, ZTildePow, XP, XTilde,
        ClassicalZPow, ClassicalX, ClassicalF,
        EisensteinE, EisensteinE0, EisensteinEinf,
        GEven, GOdd, GTildeOdd,
        F, FTilde,
        Eta, Lambert,
    };

    Kind kind = Kind::Phi;
    long p = 0;
    long k = 1;
    long arg_mult = 1;          // q -> q^{arg_mult}
    bool alternated = false;    // then q -> -q, applied last
    EtaQuotient eta;            // Kind::Eta
    LambertSpec lambert;        // Kind::Lambert

    static SeriesSpec z(long p, long k = 1, long a = 1);
    static SeriesSpec z_tilde(long p, long k, long a);
    static SeriesSpec eta_q(EtaQuotient eq, long a = 1);
    static SeriesSpec lam(LambertSpec ls, long a = 1);
    static SeriesSpec F(long p, long k, long a = 1);
    static SeriesSpec F_tilde(long p, long k, long a);
};

QSeries build_series(const SeriesSpec& spec, long depth);

// named CLI access: "phi","psi","zp","ztp","xp","xtp","E","E0","Einf",
// "G","Gt","F","Ft","eta1","cF","cx","czp" — see cli.cpp
SeriesSpec series_by_name(const std::string& name, long p, long k, long arg_mult);

}  // namespace qmordell
