// Dedekind eta machinery. eta_m = q^{m/24} prod_{n>=1} (1 - q^{mn}); a
// quotient prod eta_m^{r_m} therefore carries the prefactor q^L with
// L = sum_m m r_m / 24, which must be an integer for the quotient to live on
// the integer exponent grid (every object in the catalog does).
//
// The product part is expanded by naive polynomial multiplication: factors
// with mn >= depth are congruent to 1 and are skipped, so the loop is finite.
// The tests cross-check against Euler's pentagonal number theorem.
#include "qmordell/forms.hpp"

namespace qmordell {

bool is_supported_p(long p) { return p == 3 || p == 7 || p == 11 || p == 23; }

void require_supported_p(long p) {
    if (!is_supported_p(p)) throw std::invalid_argument("p must be one of 3,7,11,23");
}

EtaQuotient& EtaQuotient::with(long m, long r) {
    exponents[m] += r;
    if (exponents[m] == 0) exponents.erase(m);
    return *this;
}

EtaQuotient EtaQuotient::scaled(long a) const {
    if (a < 1) throw std::invalid_argument("EtaQuotient::scaled: multiplier must be >= 1");
    EtaQuotient r;
    for (const auto& [m, e] : exponents) r.exponents[m * a] = e;
    return r;
}

Rational EtaQuotient::leading_power_24() const {
    Rational s(0);
    for (const auto& [m, e] : exponents) s += Rational(m * e, 24);
    return s;
}

long EtaQuotient::leading_power() const {
    const Rational L = leading_power_24();
    if (!L.is_integer())
        throw std::domain_error("eta quotient has fractional leading power " + L.str() +
                                "; it does not live on the integer exponent grid");
    return static_cast<long>(L.num().get_si());
}

QSeries eta_product_part(long m, long depth) {
    if (m < 1) throw std::invalid_argument("eta_product_part: multiplier must be >= 1");
    if (depth < 1) throw std::invalid_argument("eta_product_part: depth must be >= 1");
    QSeries acc = QSeries::one(depth);
    for (long n = 1; m * n < depth; ++n)
        acc *= QSeries::one(depth) - QSeries::monomial(Rational(1), m * n, depth);
    return acc;
}

QSeries eta_quotient(const EtaQuotient& eq, long depth) {
    const long L = eq.leading_power();  // validates integrality
    // expand the product parts to enough terms that after the q^L shift the
    // window still reaches `depth`
    const long part_depth = std::max(depth - L, 1L);
    QSeries acc = QSeries::one(part_depth);
    for (const auto& [m, e] : eq.exponents) {
        if (e == 0) continue;
        acc *= pow(eta_product_part(m, part_depth), e);
    }
    return acc.shifted(L).truncated(depth);
}

}  // namespace qmordell
