// Eisenstein series and the F-combinations.
//
// Fourier expansions (primary implementations):
//   E_{2k}      = 1 - (4k/B_{2k}) sum_n sigma_{2k-1}(n) q^n
//   Einf_k      = 1 - (2k/B_{k,p}) sum_n sigmainf_k(n) q^n      (k odd)
//   E0_k        = delta_{k,1} - (2k/B_{k,p}) sum_n sigma0_k(n) q^n
// The _direct variants expand the defining Lambert sums instead and exist as
// independent cross-checks.
//
// Combinations (weight w, argument scalings written @a for q -> q^a):
//   G_w   (w even) = E_w + (-p)^{w/2} E_w@p
//   G_w   (w odd)  = Einf_w + (-p)^{(w-1)/2} E0_w
//   Gt_w  (w odd)  = Einf_w - (-p)^{(w-1)/2} E0_w
//
//   F_w, p in {3,11},  w odd: (G_w + 2^w G_w@4) / ((2^w + 1)(1 + [w = 1]))
//     -- the denominator's first factor must be 2^w + 1: the alternative
//        2^{w-1} + 1 fails the k = 1 normalization (constant term 3/2
//        instead of 1) and breaks the half-argument expansion, so every
//        catalog identity would miss at q^0
//   F_w, p in {7,23},  w odd: (G_w - 2 G_w@2 + 2^w G_w@4) / ((2^w - 1)(1 + [w = 1]))
//   F_w   (w even):          (G_w - 2 G_w@2 + 2^w G_w@4) / ((2^w - 1)(1 + (-p)^{w/2}))
//
//   Ft_w, p in {3,11}, w odd, at argument a (a even; the definition involves
//   a half-argument term G_w(tau/2), so only even multiples live on the
//   integer grid):
//     Ft_w@a = ((2^w - 2) Gt_w@a - 2^w G_w@2a + 2 G_w@(a/2)) / (2^{2w}(2^w + 1)(1 + [w = 1]))
//   Ft_w, p in {7,23}, w odd: (G_w@a - G_w@2a) / (2^w (2^w - 1)(1 + [w = 1]))
//   Ft_w  (w even):           (G_w@a - G_w@2a) / (2^w (2^w - 1)(1 + (-p)^{w/2}))
//
// Classical column (z = phi^2):
//   F_1      = 1 + 4 sum_j q^j / (1 + q^{2j})
//   F_{2k}   = 1 - (4k(-1)^k / ((2^{2k}-1) B_{2k})) sum_j j^{2k-1} q^j / (1 - (-1)^{k+j} q^j)
//   F_{2k+1} = 1 + (4(-1)^k / E_{2k}) sum_j ( (2j)^{2k} q^j/(1+q^{2j})
//                                            - (-1)^{k+j} (2j-1)^{2k} q^{2j-1}/(1-q^{2j-1}) )
#include "qmordell/forms.hpp"

namespace qmordell {

namespace {

Rational eis_prefactor(long k, long p) {
    // -2k / B_{k,p}; B_{k,p} = 0 off the parity class k = (p-1)/2 mod 2
    const Rational B = gen_bernoulli(static_cast<unsigned>(k), p);
    if (B.is_zero())
        throw std::domain_error("undefined normalization: B_{k,p} vanishes (k is in the wrong parity class mod 2 for this p)");
    return Rational(-2 * k) / B;
}

QSeries scaled(const QSeries& s, long a, long depth) {
    // build_series-style argument scaling helper: s must be built to ceil(depth/a)
    return substitute_power(s, a).truncated(depth);
}

}  // namespace

QSeries eisenstein_E(long two_k, long depth) {
    if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("eisenstein_E: weight must be even and >= 2");
    if (depth < 1) throw std::invalid_argument("eisenstein_E: depth must be >= 1");
    const long k = two_k / 2;
    const Rational c = Rational(-4 * k) / bernoulli(static_cast<unsigned>(two_k));
    std::vector<Rational> coef(static_cast<size_t>(depth), Rational(0));
    coef[0] = Rational(1);
    for (long n = 1; n < depth; ++n)
        coef[static_cast<size_t>(n)] = c * Rational(sigma(static_cast<unsigned>(two_k - 1), n));
    return QSeries::from_coefficients(0, std::move(coef));
}

QSeries eisenstein_Einf(long k, long p, long depth) {
    require_supported_p(p);
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("eisenstein_Einf: weight must be odd and >= 1");
    const Rational c = eis_prefactor(k, p);
    std::vector<Rational> coef(static_cast<size_t>(depth), Rational(0));
    coef[0] = Rational(1);
    for (long n = 1; n < depth; ++n)
        coef[static_cast<size_t>(n)] = c * Rational(sigma_cuspinf(static_cast<unsigned>(k), p, n));
    return QSeries::from_coefficients(0, std::move(coef));
}

QSeries eisenstein_E0(long k, long p, long depth) {
    require_supported_p(p);
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("eisenstein_E0: weight must be odd and >= 1");
    const Rational c = eis_prefactor(k, p);
    std::vector<Rational> coef(static_cast<size_t>(depth), Rational(0));
    coef[0] = Rational(k == 1 ? 1 : 0);
    for (long n = 1; n < depth; ++n)
        coef[static_cast<size_t>(n)] = c * Rational(sigma_cusp0(static_cast<unsigned>(k), p, n));
    return QSeries::from_coefficients(0, std::move(coef));
}

QSeries eisenstein_Einf_direct(long k, long p, long depth) {
    require_supported_p(p);
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("eisenstein_Einf_direct: weight must be odd and >= 1");
    LambertSpec ls;
    ls.weight = static_cast<unsigned>(k - 1);
    ls.character_modulus = p;
    return QSeries::one(depth) + eis_prefactor(k, p) * lambert_expand(ls, depth);
}

QSeries eisenstein_E0_direct(long k, long p, long depth) {
    require_supported_p(p);
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("eisenstein_E0_direct: weight must be odd and >= 1");
    const LegendreCharacter chi(p);
    LambertSpec ls;
    ls.weight = static_cast<unsigned>(k - 1);
    ls.numerator.clear();
    for (long l = 1; l < p; ++l)
        if (chi(l) != 0) ls.numerator.push_back({l, chi(l)});
    ls.denominator_scale = p;
    QSeries s = eis_prefactor(k, p) * lambert_expand(ls, depth);
    if (k == 1) s += QSeries::one(depth);
    return s;
}

QSeries G_even(long two_k, long p, long depth) {
    require_supported_p(p);
    if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("G_even: weight must be even and >= 2");
    const QSeries E = eisenstein_E(two_k, depth);
    const QSeries Ep = scaled(eisenstein_E(two_k, (depth + p - 1) / p), p, depth);
    const Rational sign = rat_pow(Rational(-p), two_k / 2);
    return E + sign * Ep;
}

QSeries G_odd(long k, long p, long depth) {
    const Rational sign = rat_pow(Rational(-p), (k - 1) / 2);
    return eisenstein_Einf(k, p, depth) + sign * eisenstein_E0(k, p, depth);
}

QSeries G_tilde_odd(long k, long p, long depth) {
    const Rational sign = rat_pow(Rational(-p), (k - 1) / 2);
    return eisenstein_Einf(k, p, depth) - sign * eisenstein_E0(k, p, depth);
}

QSeries F_series(long k, long p, long depth) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("F_series: k must be >= 1");
    const Rational two_k = rat_pow(Rational(2), k);
    if (k % 2 == 0) {
        const QSeries G = G_even(k, p, depth);
        const QSeries G2 = scaled(G_even(k, p, (depth + 1) / 2), 2, depth);
        const QSeries G4 = scaled(G_even(k, p, (depth + 3) / 4), 4, depth);
        const Rational den = (two_k - 1) * (Rational(1) + rat_pow(Rational(-p), k / 2));
        return (G - Rational(2) * G2 + two_k * G4) * (Rational(1) / den);
    }
    const Rational delta(k == 1 ? 2 : 1);
    if (p == 3 || p == 11) {
        const QSeries G = G_odd(k, p, depth);
        const QSeries G4 = scaled(G_odd(k, p, (depth + 3) / 4), 4, depth);
        return (G + two_k * G4) * (Rational(1) / ((two_k + 1) * delta));
    }
    const QSeries G = G_odd(k, p, depth);
    const QSeries G2 = scaled(G_odd(k, p, (depth + 1) / 2), 2, depth);
    const QSeries G4 = scaled(G_odd(k, p, (depth + 3) / 4), 4, depth);
    return (G - Rational(2) * G2 + two_k * G4) * (Rational(1) / ((two_k - 1) * delta));
}

QSeries F_tilde_series(long k, long p, long arg_mult, long depth) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("F_tilde_series: k must be >= 1");
    if (arg_mult < 1) throw std::invalid_argument("F_tilde_series: arg_mult must be >= 1");
    const Rational two_k = rat_pow(Rational(2), k);
    const long a = arg_mult;
    auto G_at = [&](long mult) {
        return scaled(k % 2 == 0 ? G_even(k, p, (depth + mult - 1) / mult)
                                 : G_odd(k, p, (depth + mult - 1) / mult),
                      mult, depth);
    };
    if (k % 2 == 0) {
        const Rational den = two_k * (two_k - 1) * (Rational(1) + rat_pow(Rational(-p), k / 2));
        return (G_at(a) - G_at(2 * a)) * (Rational(1) / den);
    }
    const Rational delta(k == 1 ? 2 : 1);
    if (p == 7 || p == 23) {
        const Rational den = two_k * (two_k - 1) * delta;
        return (G_at(a) - G_at(2 * a)) * (Rational(1) / den);
    }
    // p = 3 or 11: the definition contains G(tau/2), so the series only lives
    // on the integer grid at even argument multiples
    if (a % 2 != 0)
        throw std::domain_error("F_tilde_series: half-integer argument for p = 3 or 11; use arg_mult = 2");
    const QSeries Gt_a = scaled(G_tilde_odd(k, p, (depth + a - 1) / a), a, depth);
    const Rational den = rat_pow(Rational(2), 2 * k) * (two_k + 1) * delta;
    return ((two_k - 2) * Gt_a - two_k * G_at(2 * a) + Rational(2) * G_at(a / 2)) *
           (Rational(1) / den);
}

QSeries classical_F(long k, long depth) {
    if (k < 1) throw std::invalid_argument("classical_F: k must be >= 1");
    if (depth < 1) throw std::invalid_argument("classical_F: depth must be >= 1");
    if (k == 1) {
        // 1 + 4 sum_j q^j / (1 + q^{2j})
        LambertSpec ls;
        ls.denominator_scale = 2;
        ls.denominator_sign = -1;
        return QSeries::one(depth) + Rational(4) * lambert_expand(ls, depth);
    }
    if (k % 2 == 0) {
        const long h = k / 2;  // weight index: F_{2h}
        LambertSpec ls;
        ls.weight = static_cast<unsigned>(k - 1);
        ls.parity = static_cast<int>(h % 2);
        const Rational c = Rational(-4 * h) * Rational(h % 2 == 0 ? 1 : -1) /
                           ((rat_pow(Rational(2), k) - 1) * bernoulli(static_cast<unsigned>(k)));
        return QSeries::one(depth) + c * lambert_expand(ls, depth);
    }
    // k = 2h+1, h >= 1:
    //   1 + (4(-1)^h / E_{2h}) sum_j ( (2j)^{2h} q^j/(1+q^{2j})
    //                                 - (-1)^{h+j} (2j-1)^{2h} q^{2j-1}/(1-q^{2j-1}) )
    const long h = (k - 1) / 2;
    std::vector<Rational> coef(static_cast<size_t>(depth), Rational(0));
    for (long j = 1; j < depth; ++j) {
        // (2j)^{2h} q^j / (1 + q^{2j}): exponents j(2r+1), alternating signs
        const Integer w1 = int_pow(Integer(2 * j), static_cast<unsigned long>(2 * h));
        long sign = 1;
        for (long e = j; e < depth; e += 2 * j) {
            coef[static_cast<size_t>(e)] += Rational(sign > 0 ? w1 : -w1);
            sign = -sign;
        }
        // -(-1)^{h+j} (2j-1)^{2h} q^{2j-1} / (1 - q^{2j-1}): all multiples of 2j-1
        const long m = 2 * j - 1;
        if (m < depth) {
            const Integer w2 = int_pow(Integer(m), static_cast<unsigned long>(2 * h));
            const bool minus = (h + j) % 2 == 0;  // -(-1)^{h+j}
            for (long e = m; e < depth; e += m)
                coef[static_cast<size_t>(e)] += Rational(minus ? -w2 : w2);
        }
    }
    const Rational pref = Rational(4) * Rational(h % 2 == 0 ? 1 : -1) /
                          euler_number(static_cast<unsigned>(2 * h));
    QSeries s = pref * QSeries::from_coefficients(0, std::move(coef));
    return QSeries::one(depth) + s;
}

}  // namespace qmordell
