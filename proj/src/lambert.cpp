// Generic Lambert-type sums
//
//   sum_{j>=1} j^w chi(j) (sum_i sign_i q^{e_i j}) / (1 - s_j q^{dj}),
//
// expanded by the double loop over j and the geometric series in the
// denominator: the (j, i, r) term contributes chi(j) sign_i s_j^r j^w at
// exponent j(e_i + d r). Every numerator exponent e_i must be >= 1, so the
// inner loops terminate as soon as j e_i >= depth.
#include "qmordell/forms.hpp"

namespace qmordell {

QSeries lambert_expand(const LambertSpec& spec, long depth) {
    if (depth < 1) throw std::invalid_argument("lambert_expand: depth must be >= 1");
    if (spec.denominator_scale < 1) throw std::invalid_argument("lambert_expand: denominator scale must be >= 1");
    if (spec.denominator_sign != 1 && spec.denominator_sign != -1)
        throw std::invalid_argument("lambert_expand: denominator sign must be +1 or -1");
    if (spec.numerator.empty()) throw std::invalid_argument("lambert_expand: empty numerator");
    long e_min = spec.numerator.front().exponent;
    for (const auto& t : spec.numerator) {
        if (t.exponent < 1) throw std::invalid_argument("lambert_expand: numerator exponents must be >= 1");
        if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("lambert_expand: numerator signs must be +1 or -1");
        e_min = std::min(e_min, t.exponent);
    }
    std::optional<LegendreCharacter> chi;
    if (spec.character_modulus != 0) chi.emplace(spec.character_modulus);

    std::vector<Rational> coef(static_cast<size_t>(depth), Rational(0));
    const long d = spec.denominator_scale;
    for (long j = 1; j * e_min < depth; ++j) {
        int cj = chi ? (*chi)(j) : 1;
        if (cj == 0) continue;
        int sj = spec.denominator_sign;
        if (spec.parity) sj = (*spec.parity + j) % 2 == 0 ? 1 : -1;
        const Integer jw = int_pow(Integer(j), spec.weight);
        for (const auto& t : spec.numerator) {
            // exponents j(e + d r) for r = 0, 1, ...; term sign = sign_i * s_j^r
            int term_sign = cj * t.sign;
            for (long e = j * t.exponent; e < depth; e += j * d) {
                coef[static_cast<size_t>(e)] += Rational(term_sign > 0 ? jw : -jw);
                term_sign *= sj;
            }
        }
    }
    return QSeries::from_coefficients(0, std::move(coef));
}

}  // namespace qmordell
