#include "qmordell/solver.hpp"

#include "qmordell/forms.hpp"

#include <cmath>
#include <sstream>

namespace qmordell {

long sturm_depth(long p, long k) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("sturm_depth: k must be >= 1");
    return (k * (p + 1) + 1) / 2 + 16;
}

long default_solve_depth(long p, long k) { return 2 * sturm_depth(p, k); }

long correction_count(long p, long k) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("correction_count: k must be >= 1");
    return ((p + 1) * k - 1) / 8;  // strict upper bound (p+1)k/8
}

long classical_correction_count(long k) {
    if (k < 1) throw std::invalid_argument("classical_correction_count: k must be >= 1");
    return (k - 1) / 4;  // inclusive upper bound (k-1)/4
}

namespace {

[[noreturn]] void insufficient_depth(long depth, long needed) {
    std::ostringstream os;
    os << "insufficient depth " << depth << ": need at least " << needed
       << " to determine the constants and check anything beyond them";
    throw std::domain_error(os.str());
}

// shared triangular solve: given w (the cusp part of 1 - F/z^k) and the
// corrector x (valuation +1, unit leading coefficient, in the plain case),
// peel constants bottom-up. `depth` bounds the exponents checked.
struct TriangularOutcome {
    std::vector<std::pair<long, Rational>> constants;
    bool residual_ok;
};

TriangularOutcome peel_forward(QSeries w, const QSeries& x, long jmax, long depth) {
    TriangularOutcome out;
    QSeries xj = QSeries::one(x.order());
    for (long j = 1; j <= jmax; ++j) {
        xj *= x;  // = x^j, valuation j
        const Rational c = w.coefficient(j);
        out.constants.emplace_back(j, c);
        if (!c.is_zero()) w -= c * xj;
    }
    out.residual_ok = true;
    for (long n = std::min(w.valuation(), 0L); n < depth && out.residual_ok; ++n)
        out.residual_ok = w.coefficient(n).is_zero();
    return out;
}

}  // namespace

SolveResult solve_constants(long p, long k, long depth) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("solve_constants: k must be >= 1");
    const long jmax = correction_count(p, k);
    if (depth < jmax + 2) insufficient_depth(depth, jmax + 2);

    const QSeries zk = z_pow(p, k, depth);
    const QSeries F = F_series(k, p, depth);
    const QSeries w = QSeries::one(depth) - F * invert(zk);
    // x^jmax must still reach `depth`: x has window [1, depth), x^j window
    // [j, depth + j - 1) — always deep enough
    const QSeries x = x_p(p, depth);
    auto [constants, residual_ok] = peel_forward(w, x, jmax, depth);

    SolveResult r;
    r.p_label = std::to_string(p);
    r.p = p;
    r.k = k;
    r.constants = std::move(constants);
    r.verified_depth = depth;
    r.residual_ok = residual_ok;
    return r;
}

SolveResult solve_constants_tilde(long p, long k, long depth) {
    require_supported_p(p);
    if (k < 1) throw std::invalid_argument("solve_constants_tilde: k must be >= 1");
    const long a = (p == 3 || p == 11) ? 2 : 1;  // grid integrality
    const long jmax = correction_count(p, k);
    if (depth < a * jmax + 2) insufficient_depth(depth, a * jmax + 2);

    const long v0 = k * (p + 1) * a / 8;  // valuation of ztilde^k at argument a
    // every product below must keep a window reaching `depth`; the inversion
    // costs 2*v0 of window and each xtilde^j another a*j
    const long build_depth = depth + 2 * v0 + a * jmax + 2;

    const QSeries ztk = z_tilde_pow(p, k, a, build_depth);
    const QSeries Ft = F_tilde_series(k, p, a, build_depth);
    QSeries w = QSeries::one(build_depth - 2 * v0) - Ft * invert(ztk);
    const QSeries xt = x_tilde_p(p, a, build_depth);

    // xtilde^j has valuation -a*j: peel top-down from j = jmax
    std::vector<QSeries> xt_pow(static_cast<size_t>(jmax) + 1);
    if (jmax >= 1) {
        xt_pow[1] = xt;
        for (long j = 2; j <= jmax; ++j) xt_pow[static_cast<size_t>(j)] = xt_pow[static_cast<size_t>(j - 1)] * xt;
    }
    std::vector<std::pair<long, Rational>> constants(static_cast<size_t>(jmax), {0, Rational(0)});
    for (long j = jmax; j >= 1; --j) {
        const Rational c = w.coefficient(-a * j);
        constants[static_cast<size_t>(j - 1)] = {j, c};
        if (!c.is_zero()) w -= c * xt_pow[static_cast<size_t>(j)];
    }
    bool residual_ok = true;
    for (long n = std::min(w.valuation(), -a * jmax); n < depth && residual_ok; ++n)
        residual_ok = w.coefficient(n).is_zero();

    SolveResult r;
    r.p_label = std::to_string(p);
    r.p = p;
    r.k = k;
    r.tilde = true;
    r.arg_mult = a;
    r.constants = std::move(constants);
    r.verified_depth = depth;
    r.residual_ok = residual_ok;

    // Corollary relation against the plain constants
    const SolveResult plain = solve_constants(p, k, depth);
    r.relation_ok = plain.residual_ok;
    for (long j = 1; j <= jmax && r.relation_ok; ++j) {
        const Rational expected = rat_pow(Rational(1, 2), 24 * j / (p + 1)) *
                                  Rational(j % 2 == 0 ? 1 : -1) *
                                  plain.constants[static_cast<size_t>(j - 1)].second;
        r.relation_ok = expected == r.constants[static_cast<size_t>(j - 1)].second;
    }
    return r;
}

SolveResult solve_classical(long k, long depth) {
    if (k < 1) throw std::invalid_argument("solve_classical: k must be >= 1");
    const long jmax = classical_correction_count(k);
    if (depth < jmax + 2) insufficient_depth(depth, jmax + 2);

    const QSeries zk = classical_z_pow(k, depth);
    const QSeries F = classical_F(k, depth);
    const QSeries w = QSeries::one(depth) - F * invert(zk);
    const QSeries x = classical_x(depth);
    auto [constants, residual_ok] = peel_forward(w, x, jmax, depth);

    SolveResult r;
    r.p_label = "classical";
    r.k = k;
    r.constants = std::move(constants);
    r.verified_depth = depth;
    r.residual_ok = residual_ok;
    return r;
}

long rep_count(long p, long long n) {
    if (n < 0) throw std::invalid_argument("rep_count: n must be >= 0");
    if (n == 0) return 1;
    long count = 0;
    for (long long b = 0; p * b * b <= n; ++b) {
        const long long rest = n - p * b * b;
        const long long a = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(rest))));
        for (long long aa = std::max(0LL, a - 2); aa <= a + 2; ++aa) {
            if (aa * aa == rest) {
                count += (aa == 0 ? 1 : 2) * (b == 0 ? 1 : 2);
                break;
            }
        }
    }
    return count;
}

long tri_count(long p, long long n) {
    if (n < 0) throw std::invalid_argument("tri_count: n must be >= 0");
    long count = 0;
    for (long long b = 0;; ++b) {
        const long long tb = b * (b + 1) / 2;
        if (p * tb > n) break;
        const long long rest = n - p * tb;
        // a(a+1)/2 = rest  <=>  (2a+1)^2 = 8 rest + 1
        const long long s = 8 * rest + 1;
        const long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(s))));
        for (long long rr = std::max(1LL, r - 2); rr <= r + 2; ++rr) {
            if (rr * rr == s && rr % 2 == 1) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace qmordell
