// The identity catalog as data, plus the verification driver.
//
// Shorthands for the Lambert sums that appear on the right-hand sides:
//   Lw(w, e, d)        sum_j j^w q^{ej} / (1 - q^{dj})
//   Lchi(w, p, e, d)   sum_j (j|p) j^w q^{ej} / (1 - q^{dj})
//   Lpat(w, pat, d)    sum_j j^w (sum_i sign_i q^{e_i j}) / (1 - q^{dj})
// and Et({m:r,...}, a) for eta quotients at argument multiple a.
//
// The twenty example records keep their terms fully distributed (multipliers
// pushed onto the individual Lambert sums); the lemma/remark records encode
// the q -> -q expansions, and footnote-b is the eta identity
// b(q) + 12 b(q^2) + 64 b(q^4) + b(-q) = 0 with b = eta_1^6 eta_3^6.
#include "qmordell/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qmordell {

namespace {

SeriesSpec Lw(unsigned w, long e, long d) {
    LambertSpec ls;
    ls.weight = w;
    ls.numerator = {{e, +1}};
    ls.denominator_scale = d;
    return SeriesSpec::lam(ls);
}

SeriesSpec Lchi(unsigned w, long p, long e, long d) {
    LambertSpec ls;
    ls.weight = w;
    ls.character_modulus = p;
    ls.numerator = {{e, +1}};
    ls.denominator_scale = d;
    return SeriesSpec::lam(ls);
}

SeriesSpec Lpat(unsigned w, std::vector<LambertTerm> pattern, long d) {
    LambertSpec ls;
    ls.weight = w;
    ls.numerator = std::move(pattern);
    ls.denominator_scale = d;
    return SeriesSpec::lam(ls);
}

SeriesSpec Et(std::initializer_list<std::pair<const long, long>> e, long a = 1) {
    return SeriesSpec::eta_q(EtaQuotient(e), a);
}

Rational R(long num, long den = 1) { return Rational(num, den); }

using Fam = IdentityRecord::Family;

IdentityRecord example_record(std::string id, SeriesSpec lhs, Combination rhs,
                              IdentityRecord::FRef fref) {
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.family = Fam::Example;
    rec.lhs.constant = R(0);
    rec.lhs.add(R(1), std::move(lhs));
    rec.rhs = std::move(rhs);
    rec.default_depth = 300;
    rec.f_ref = fref;
    return rec;
}

// lhs = X(-q), rhs = c1 X + c2 X@2 + c4 X@4 for the half-argument lemmas
IdentityRecord half_lemma(std::string id, SeriesSpec base, const Rational& c1,
                          const Rational& c2, const Rational& c4) {
    IdentityRecord rec;
    rec.id = std::move(id);
    rec.family = Fam::Lemma;
    SeriesSpec lhs = base;
    lhs.alternated = true;
    rec.lhs.add(R(1), lhs);
    SeriesSpec at2 = base, at4 = base;
    at2.arg_mult = 2;
    at4.arg_mult = 4;
    rec.rhs.add(c1, base).add(c2, at2).add(c4, at4);
    rec.default_depth = 500;
    return rec;
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> cat;

    // ----------------------------------------------------------- k = 1 family
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(2), Lchi(0, 3, 1, 1)).add(R(4), Lchi(0, 3, 4, 4));
        cat.push_back(example_record("s3k1", SeriesSpec::z(3, 1), rhs, {3, 1, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1), Lchi(0, 3, 1, 1)).add(R(-1), Lchi(0, 3, 4, 4));
        cat.push_back(example_record("t3k1", SeriesSpec::z_tilde(3, 1, 2), rhs, {3, 1, true, 2}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(2), Lchi(0, 7, 1, 1)).add(R(-4), Lchi(0, 7, 2, 2)).add(R(4), Lchi(0, 7, 4, 4));
        cat.push_back(example_record("s7k1", SeriesSpec::z(7, 1), rhs, {7, 1, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1), Lchi(0, 7, 1, 1)).add(R(-1), Lchi(0, 7, 2, 2));
        cat.push_back(example_record("t7k1", SeriesSpec::z_tilde(7, 1, 1), rhs, {7, 1, true, 1}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(2, 3), Lchi(0, 11, 1, 1)).add(R(4, 3), Lchi(0, 11, 4, 4)).add(R(4, 3), Et({{2, 1}, {22, 1}}));
        cat.push_back(example_record("s11k1", SeriesSpec::z(11, 1), rhs, {11, 1, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1, 3), Lchi(0, 11, 1, 1)).add(R(-1, 3), Lchi(0, 11, 4, 4)).add(R(-1, 3), Et({{2, 1}, {22, 1}}));
        cat.push_back(example_record("t11k1", SeriesSpec::z_tilde(11, 1, 2), rhs, {11, 1, true, 2}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(2, 3), Lchi(0, 23, 1, 1))
            .add(R(-4, 3), Lchi(0, 23, 2, 2))
            .add(R(4, 3), Lchi(0, 23, 4, 4))
            .add(R(4, 3), Et({{2, 3}, {46, 3}, {1, -1}, {4, -1}, {23, -1}, {92, -1}}))
            .add(R(-4, 3), Et({{2, 1}, {46, 1}}));
        cat.push_back(example_record("s23k1", SeriesSpec::z(23, 1), rhs, {23, 1, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1, 3), Lchi(0, 23, 1, 1))
            .add(R(-1, 3), Lchi(0, 23, 2, 2))
            .add(R(-1, 3), Et({{1, 1}, {23, 1}}))
            .add(R(-2, 3), Et({{2, 1}, {46, 1}}));
        cat.push_back(example_record("t23k1", SeriesSpec::z_tilde(23, 1, 1), rhs, {23, 1, true, 1}));
    }

    // ----------------------------------------------------------- p = 3 family
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(4), Lw(1, 1, 1))
            .add(R(-8), Lw(1, 2, 2))
            .add(R(-12), Lw(1, 3, 3))
            .add(R(16), Lw(1, 4, 4))
            .add(R(24), Lw(1, 6, 6))
            .add(R(-48), Lw(1, 12, 12));
        cat.push_back(example_record("s3k2", SeriesSpec::z(3, 2), rhs, {3, 2, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1), Lw(1, 1, 1)).add(R(-1), Lw(1, 2, 2)).add(R(-3), Lw(1, 3, 3)).add(R(3), Lw(1, 6, 6));
        cat.push_back(example_record("t3k2", SeriesSpec::z_tilde(3, 2, 1), rhs, {3, 2, true, 1}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(3), Lpat(2, {{1, +1}, {2, -1}}, 3))
            .add(R(24), Lpat(2, {{4, +1}, {8, -1}}, 12))
            .add(R(-1), Lchi(2, 3, 1, 1))
            .add(R(-8), Lchi(2, 3, 4, 4))
            .add(R(4), Et({{2, 3}, {6, 3}}));
        cat.push_back(example_record("s3k3", SeriesSpec::z(3, 3), rhs, {3, 3, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(3, 32), Lpat(2, {{1, +1}, {2, -1}}, 3))
            .add(R(-9, 32), Lpat(2, {{2, +1}, {4, -1}}, 6))
            .add(R(-3, 8), Lpat(2, {{4, +1}, {8, -1}}, 12))
            .add(R(-1, 32), Lchi(2, 3, 1, 1))
            .add(R(-3, 32), Lchi(2, 3, 2, 2))
            .add(R(1, 8), Lchi(2, 3, 4, 4))
            .add(R(-1, 16), Et({{2, 3}, {6, 3}}));
        cat.push_back(example_record("t3k3", SeriesSpec::z_tilde(3, 3, 2), rhs, {3, 3, true, 2}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(8, 5), Lw(3, 1, 1))
            .add(R(-16, 5), Lw(3, 2, 2))
            .add(R(72, 5), Lw(3, 3, 3))
            .add(R(128, 5), Lw(3, 4, 4))
            .add(R(-144, 5), Lw(3, 6, 6))
            .add(R(1152, 5), Lw(3, 12, 12))
            .add(R(32, 5), Et({{2, 8}, {6, 8}, {1, -2}, {3, -2}, {4, -2}, {12, -2}}));
        cat.push_back(example_record("s3k4", SeriesSpec::z(3, 4), rhs, {3, 4, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1, 10), Lw(3, 1, 1))
            .add(R(-1, 10), Lw(3, 2, 2))
            .add(R(9, 10), Lw(3, 3, 3))
            .add(R(-9, 10), Lw(3, 6, 6))
            .add(R(-1, 10), Et({{1, 2}, {2, 2}, {3, 2}, {6, 2}}));
        cat.push_back(example_record("t3k4", SeriesSpec::z_tilde(3, 4, 1), rhs, {3, 4, true, 1}));
    }
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(4, 13), Lw(5, 1, 1))
            .add(R(-8, 13), Lw(5, 2, 2))
            .add(R(-108, 13), Lw(5, 3, 3))
            .add(R(256, 13), Lw(5, 4, 4))
            .add(R(216, 13), Lw(5, 6, 6))
            .add(R(-6912, 13), Lw(5, 12, 12))
            .add(R(152, 13), Et({{2, 18}, {6, 18}, {1, -6}, {3, -6}, {4, -6}, {12, -6}}))
            .add(R(-256, 13), Et({{2, 6}, {6, 6}}));
        cat.push_back(example_record("s3k6", SeriesSpec::z(3, 6), rhs, {3, 6, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1, 208), Lw(5, 1, 1))
            .add(R(-1, 208), Lw(5, 2, 2))
            .add(R(-27, 208), Lw(5, 3, 3))
            .add(R(27, 208), Lw(5, 6, 6))
            .add(R(-1, 208), Et({{1, 6}, {3, 6}}))
            .add(R(-19, 104), Et({{2, 6}, {6, 6}}));
        cat.push_back(example_record("t3k6", SeriesSpec::z_tilde(3, 6, 1), rhs, {3, 6, true, 1}));
    }

    // ----------------------------------------------------------- p = 7 family
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(4, 3), Lw(1, 1, 1))
            .add(R(-8, 3), Lw(1, 2, 2))
            .add(R(16, 3), Lw(1, 4, 4))
            .add(R(-28, 3), Lw(1, 7, 7))
            .add(R(56, 3), Lw(1, 14, 14))
            .add(R(-112, 3), Lw(1, 28, 28))
            .add(R(8, 3), Et({{2, 4}, {14, 4}, {1, -1}, {4, -1}, {7, -1}, {28, -1}}));
        cat.push_back(example_record("s7k2", SeriesSpec::z(7, 2), rhs, {7, 2, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(1, 3), Lw(1, 1, 1))
            .add(R(-1, 3), Lw(1, 2, 2))
            .add(R(-7, 3), Lw(1, 7, 7))
            .add(R(7, 3), Lw(1, 14, 14))
            .add(R(-1, 3), Et({{1, 1}, {2, 1}, {7, 1}, {14, 1}}));
        cat.push_back(example_record("t7k2", SeriesSpec::z_tilde(7, 2, 1), rhs, {7, 2, true, 1}));
    }
    const std::vector<LambertTerm> chi7_pattern = {{1, +1}, {2, +1}, {3, -1}, {4, +1}, {5, -1}, {6, -1}};
    auto scale_pattern = [](const std::vector<LambertTerm>& pat, long m) {
        std::vector<LambertTerm> r = pat;
        for (auto& t : r) t.exponent *= m;
        return r;
    };
    {
        Combination rhs;
        rhs.constant = R(1);
        rhs.add(R(7, 8), Lpat(2, chi7_pattern, 7))
            .add(R(-7, 4), Lpat(2, scale_pattern(chi7_pattern, 2), 14))
            .add(R(7), Lpat(2, scale_pattern(chi7_pattern, 4), 28))
            .add(R(-1, 8), Lchi(2, 7, 1, 1))
            .add(R(1, 4), Lchi(2, 7, 2, 2))
            .add(R(-1), Lchi(2, 7, 4, 4))
            .add(R(21, 4), Et({{2, 9}, {14, 9}, {1, -3}, {4, -3}, {7, -3}, {28, -3}}))
            .add(R(-6), Et({{2, 3}, {14, 3}}));
        cat.push_back(example_record("s7k3", SeriesSpec::z(7, 3), rhs, {7, 3, false, 1}));
    }
    {
        Combination rhs;
        rhs.add(R(7, 64), Lpat(2, chi7_pattern, 7))
            .add(R(-7, 64), Lpat(2, scale_pattern(chi7_pattern, 2), 14))
            .add(R(-1, 64), Lchi(2, 7, 1, 1))
            .add(R(1, 64), Lchi(2, 7, 2, 2))
            .add(R(-3, 32), Et({{1, 3}, {7, 3}}))
            .add(R(-21, 32), Et({{2, 3}, {14, 3}}));
        cat.push_back(example_record("t7k3", SeriesSpec::z_tilde(7, 3, 1), rhs, {7, 3, true, 1}));
    }

    // ----------------------------------------------------------- lemma family
    for (long k = 1; k <= 3; ++k) {
        SeriesSpec E;
        E.kind = SeriesSpec::Kind::EisensteinE;
        E.k = 2 * k;
        const Rational two_2k = rat_pow(Rational(2), 2 * k);
        cat.push_back(half_lemma("lemma-E2kvan-k" + std::to_string(k), E,
                                 R(-1), two_2k + 2, -two_2k));
    }
    for (long p : {3L, 11L}) {
        for (long k = 0; k <= 2; ++k) {
            const long w = 2 * k + 1;
            const Rational two_w = rat_pow(Rational(2), w);
            SeriesSpec E0;
            E0.kind = SeriesSpec::Kind::EisensteinE0;
            E0.p = p;
            E0.k = w;
            cat.push_back(half_lemma("lemma-E2khalf-p" + std::to_string(p) + "-k" + std::to_string(k),
                                     E0, R(-1), two_w - 2, two_w));
            SeriesSpec Einf = E0;
            Einf.kind = SeriesSpec::Kind::EisensteinEinf;
            cat.push_back(half_lemma("lemma-E2k3-p" + std::to_string(p) + "-k" + std::to_string(k),
                                     Einf, R(-1), Rational(2) - two_w, two_w));
        }
    }
    for (long p : {7L, 23L}) {
        for (long k = 0; k <= 2; ++k) {
            const long w = 2 * k + 1;
            const Rational two_w = rat_pow(Rational(2), w);
            SeriesSpec E0;
            E0.kind = SeriesSpec::Kind::EisensteinE0;
            E0.p = p;
            E0.k = w;
            cat.push_back(half_lemma("lemma-E0half-p" + std::to_string(p) + "-k" + std::to_string(k),
                                     E0, R(-1), two_w + 2, -two_w));
            SeriesSpec Einf = E0;
            Einf.kind = SeriesSpec::Kind::EisensteinEinf;
            cat.push_back(half_lemma("lemma-E7half-p" + std::to_string(p) + "-k" + std::to_string(k),
                                     Einf, R(-1), two_w + 2, -two_w));
        }
    }

    // remark: G_{2k+1}(tau + 1/2) in terms of G and Gtilde, p = 3 or 11
    for (long p : {3L, 11L}) {
        for (long k = 0; k <= 2; ++k) {
            const long w = 2 * k + 1;
            const Rational two_w = rat_pow(Rational(2), w);
            IdentityRecord rec;
            rec.id = "remark-Ghalf-p" + std::to_string(p) + "-k" + std::to_string(k);
            rec.family = Fam::Remark;
            SeriesSpec G;
            G.kind = SeriesSpec::Kind::GOdd;
            G.p = p;
            G.k = w;
            SeriesSpec G_alt = G;
            G_alt.alternated = true;
            SeriesSpec Gt2 = G;
            Gt2.kind = SeriesSpec::Kind::GTildeOdd;
            Gt2.arg_mult = 2;
            SeriesSpec G4 = G;
            G4.arg_mult = 4;
            rec.lhs.add(R(1), G_alt);
            rec.rhs.add(R(-1), G).add(Rational(2) - two_w, Gt2).add(two_w, G4);
            rec.default_depth = 500;
            cat.push_back(rec);
        }
    }

    // footnote: b(q) + 12 b(q^2) + 64 b(q^4) + b(-q) = 0, b = eta_1^6 eta_3^6
    {
        IdentityRecord rec;
        rec.id = "footnote-b";
        rec.family = Fam::Footnote;
        SeriesSpec b = Et({{1, 6}, {3, 6}});
        SeriesSpec b2 = Et({{1, 6}, {3, 6}}, 2);
        SeriesSpec b4 = Et({{1, 6}, {3, 6}}, 4);
        SeriesSpec b_alt = b;
        b_alt.alternated = true;
        rec.lhs.add(R(1), b).add(R(12), b2).add(R(64), b4).add(R(1), b_alt);
        rec.rhs.constant = R(0);
        rec.default_depth = 400;
        cat.push_back(rec);
    }

    return cat;
}

}  // namespace

const std::vector<IdentityRecord>& identity_catalog() {
    static const std::vector<IdentityRecord> cat = build_catalog();
    return cat;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& rec : identity_catalog())
        if (rec.id == id) return rec;
    throw std::invalid_argument("unknown identity: " + id);
}

QSeries eval_combination(const Combination& c, long depth) {
    QSeries acc = c.constant.is_zero() ? QSeries::zero(depth)
                                       : QSeries::monomial(c.constant, 0, depth);
    for (const auto& [mult, spec] : c.terms) acc += mult * build_series(spec, depth);
    return acc;
}

Combination eisenstein_part(const IdentityRecord& rec) {
    Combination c;
    c.constant = rec.rhs.constant;
    for (const auto& [mult, spec] : rec.rhs.terms)
        if (spec.kind != SeriesSpec::Kind::Eta) c.add(mult, spec);
    return c;
}

VerifyReport verify_record(const IdentityRecord& rec, long depth) {
    if (depth <= 0) throw std::domain_error("insufficient depth: verification depth must be positive");
    VerifyReport rep;
    rep.id = rec.id;
    rep.depth = depth;
    const QSeries lhs = eval_combination(rec.lhs, depth);
    const QSeries rhs = eval_combination(rec.rhs, depth);
    const auto diff = first_difference(lhs, rhs, depth);
    rep.pass = !diff.has_value();
    if (diff) {
        rep.first_mismatch = *diff;
        rep.lhs_at_mismatch = lhs.coefficient(*diff).str();
        rep.rhs_at_mismatch = rhs.coefficient(*diff).str();
    }
    return rep;
}

VerifyReport verify_identity(const std::string& id, long depth) {
    return verify_record(find_identity(id), depth);
}

VerifySummary verify_all(std::optional<long> depth) {
    if (depth && *depth <= 0) throw std::domain_error("insufficient depth: verification depth must be positive");
    VerifySummary s;
    for (const auto& rec : identity_catalog()) {
        const VerifyReport rep = verify_record(rec, depth ? *depth : rec.default_depth);
        switch (rec.family) {
            case Fam::Example:
                ++s.examples_total;
                if (rep.pass) ++s.examples_passed;
                break;
            case Fam::Lemma:
                ++s.lemma_total;
                if (rep.pass) ++s.lemma_passed;
                break;
            default:
                ++s.other_total;
                if (rep.pass) ++s.other_passed;
                break;
        }
        s.reports.push_back(rep);
    }
    s.all_pass = s.examples_passed == s.examples_total && s.lemma_passed == s.lemma_total &&
                 s.other_passed == s.other_total;
    return s;
}

}  // namespace qmordell
