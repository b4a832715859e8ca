// Theta series and the representation-number generating functions.
//
//   phi(q) = sum_{n in Z} q^{n^2}            (coefficient 1, then 2,0,0,2,...)
//   psi(q) = sum_{n >= 0} q^{n(n+1)/2}
//   z_p    = sum_{m,n} q^{m^2 + p n^2}       (= phi(q) phi(q^p))
//   ztilde_p = q^{(p+1)/8} psi(q) psi(q^p)
//
// z_p is built by direct lattice summation (the defining double sum); the
// phi-product route is kept as an independent construction for cross-checks.
// ztilde_p^k at argument multiple a is q^{k(p+1)a/8} (psi(q^a) psi(q^{pa}))^k;
// the prefactor exponent must be integral, which for p = 3 or 11 and odd k
// forces a even (use arg_mult = 2, i.e. work at 2*tau).
#include "qmordell/forms.hpp"

namespace qmordell {

QSeries phi(long depth) {
    if (depth < 1) throw std::invalid_argument("phi: depth must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(depth), Rational(0));
    c[0] = Rational(1);
    for (long n = 1; n * n < depth; ++n) c[static_cast<size_t>(n * n)] = Rational(2);
    return QSeries::from_coefficients(0, std::move(c));
}

QSeries psi(long depth) {
    if (depth < 1) throw std::invalid_argument("psi: depth must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(depth), Rational(0));
    for (long n = 0; n * (n + 1) / 2 < depth; ++n) c[static_cast<size_t>(n * (n + 1) / 2)] = Rational(1);
    return QSeries::from_coefficients(0, std::move(c));
}

QSeries z_p(long p, long depth) {
    require_supported_p(p);
    if (depth < 1) throw std::invalid_argument("z_p: depth must be >= 1");
    std::vector<Rational> c(static_cast<size_t>(depth), Rational(0));
    for (long m = 0; m * m < depth; ++m) {
        const long wm = m == 0 ? 1 : 2;
        for (long n = 0; m * m + p * n * n < depth; ++n) {
            const long wn = n == 0 ? 1 : 2;
            c[static_cast<size_t>(m * m + p * n * n)] += Rational(wm * wn);
        }
    }
    return QSeries::from_coefficients(0, std::move(c));
}

QSeries z_p_theta(long p, long depth) {
    require_supported_p(p);
    return phi(depth) * substitute_power(phi((depth + p - 1) / p), p).truncated(depth);
}

QSeries z_pow(long p, long k, long depth) {
    if (k < 1) throw std::invalid_argument("z_pow: k must be >= 1");
    return pow(z_p(p, depth), k);
}

QSeries z_tilde_pow(long p, long k, long arg_mult, long depth) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("z_tilde_pow: k must be >= 1");
    if (arg_mult < 1) throw std::invalid_argument("z_tilde_pow: arg_mult must be >= 1");
    if ((k * (p + 1) * arg_mult) % 8 != 0)
        throw std::domain_error("z_tilde_pow: half-integer leading power at this argument; use arg_mult = 2");
    const long lead = k * (p + 1) * arg_mult / 8;
    const long part_depth = std::max(depth - lead, 1L);
    const QSeries part = psi((part_depth + arg_mult - 1) / arg_mult);
    const QSeries part_p = psi((part_depth + p * arg_mult - 1) / (p * arg_mult));
    QSeries base = substitute_power(part, arg_mult).truncated(part_depth) *
                   substitute_power(part_p, p * arg_mult).truncated(part_depth);
    return pow(base, k).shifted(lead).truncated(depth);
}

QSeries z_tilde_p(long p, long arg_mult, long depth) { return z_tilde_pow(p, 1, arg_mult, depth); }

// x_p = (eta_1 eta_4 eta_p eta_4p)^{24/(p+1)} / (eta_2 eta_2p)^{48/(p+1)}
EtaQuotient x_p_quotient(long p) {
    require_supported_p(p);
    const long e = 24 / (p + 1);
    EtaQuotient q;
    q.with(1, e).with(4, e).with(p, e).with(4 * p, e).with(2, -2 * e).with(2 * p, -2 * e);
    return q;
}

// xtilde_p = (eta_1 eta_p / (eta_2 eta_2p))^{24/(p+1)}
EtaQuotient x_tilde_quotient(long p) {
    require_supported_p(p);
    const long e = 24 / (p + 1);
    EtaQuotient q;
    q.with(1, e).with(p, e).with(2, -e).with(2 * p, -e);
    return q;
}

// classical x with valuation +1 (the solver-side normalization):
// eta_1^24 eta_4^24 / eta_2^48
EtaQuotient classical_x_quotient() {
    EtaQuotient q;
    q.with(1, 24).with(4, 24).with(2, -48);
    return q;
}

QSeries x_p(long p, long depth) { return eta_quotient(x_p_quotient(p), depth); }

QSeries x_tilde_p(long p, long arg_mult, long depth) {
    if (arg_mult < 1) throw std::invalid_argument("x_tilde_p: arg_mult must be >= 1");
    return eta_quotient(x_tilde_quotient(p).scaled(arg_mult), depth);
}

QSeries classical_x(long depth) { return eta_quotient(classical_x_quotient(), depth); }

QSeries classical_z_pow(long k, long depth) {
    if (k < 1) throw std::invalid_argument("classical_z_pow: k must be >= 1");
    return pow(phi(depth), 2 * k);
}

}  // namespace qmordell
