// Truncated power series arithmetic. The only subtle parts are the window
// (truncation-order) rules, which must never claim more precision than the
// inputs support, and zero handling: the zero series has an empty coefficient
// window with valuation() == order().
#include "qmordell/qseries.hpp"

#include <sstream>

namespace qmordell {

namespace {
const Rational rational_zero(0);

[[noreturn]] void insufficient_precision(long n, long order) {
    std::ostringstream os;
    os << "insufficient precision: coefficient of q^" << n
       << " requested, series truncated at order " << order;
    throw std::out_of_range(os.str());
}
}  // namespace

void QSeries::normalize_() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = order_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
}

QSeries QSeries::zero(long order) {
    QSeries s;
    s.val_ = order;
    s.order_ = order;
    return s;
}

QSeries QSeries::one(long order) { return monomial(Rational(1), 0, order); }

QSeries QSeries::monomial(const Rational& c, long exponent, long order) {
    if (exponent >= order) throw std::invalid_argument("QSeries::monomial: exponent >= order");
    if (c.is_zero()) return zero(order);
    QSeries s;
    s.val_ = exponent;
    s.order_ = order;
    s.c_.assign(static_cast<size_t>(order - exponent), rational_zero);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::from_coefficients(long valuation, std::vector<Rational> coeffs) {
    return from_coefficients(valuation, std::move(coeffs), valuation + static_cast<long>(coeffs.size()));
}

QSeries QSeries::from_coefficients(long valuation, std::vector<Rational> coeffs, long order) {
    const long end = valuation + static_cast<long>(coeffs.size());
    if (order < end) throw std::invalid_argument("QSeries::from_coefficients: order below supplied coefficients");
    QSeries s;
    s.val_ = valuation;
    s.order_ = order;
    s.c_ = std::move(coeffs);
    s.c_.resize(static_cast<size_t>(order - valuation), rational_zero);
    s.normalize_();
    return s;
}

const Rational& QSeries::coefficient(long n) const {
    if (n >= order_) insufficient_precision(n, order_);
    if (n < val_) return rational_zero;
    return c_[static_cast<size_t>(n - val_)];
}

QSeries QSeries::truncated(long new_order) const {
    if (new_order > order_) insufficient_precision(new_order - 1, order_);
    QSeries s;
    s.order_ = new_order;
    if (new_order <= val_) {
        s.val_ = new_order;
        return s;
    }
    s.val_ = val_;
    s.c_.assign(c_.begin(), c_.begin() + static_cast<long>(new_order - val_));
    s.normalize_();
    return s;
}

QSeries QSeries::shifted(long e) const {
    QSeries s(*this);
    s.val_ += e;
    s.order_ += e;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    const long order = std::min(order_, o.order_);
    const long val = std::min(std::min(val_, o.val_), order);
    std::vector<Rational> c(static_cast<size_t>(order - val), rational_zero);
    for (long n = val; n < order; ++n) {
        Rational v(0);
        if (n >= val_ && n < order_) v += c_[static_cast<size_t>(n - val_)];
        if (n >= o.val_ && n < o.order_) v += o.c_[static_cast<size_t>(n - o.val_)];
        c[static_cast<size_t>(n - val)] = std::move(v);
    }
    val_ = val;
    order_ = order;
    c_ = std::move(c);
    normalize_();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator-(const QSeries& a) {
    QSeries s(a);
    for (auto& c : s.c_) c = -c;
    return s;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    // window rule: order = min(a.order + b.val, b.order + a.val); for the zero
    // series val == order makes the same formula correct
    const long order = std::min(order_ + o.val_, o.order_ + val_);
    const long val = val_ + o.val_;
    if (c_.empty() || o.c_.empty()) {
        *this = zero(order);
        return *this;
    }
    std::vector<Rational> c(static_cast<size_t>(order - val), rational_zero);
    const long n = static_cast<long>(c.size());
    for (long i = 0; i < static_cast<long>(c_.size()) && i < n; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        const long jmax = std::min(static_cast<long>(o.c_.size()), n - i);
        for (long j = 0; j < jmax; ++j) {
            if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
            c[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    val_ = val;
    order_ = order;
    c_ = std::move(c);
    normalize_();
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        *this = zero(order_);
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

QSeries invert(const QSeries& a) {
    if (a.is_zero()) throw std::domain_error("QSeries: non-invertible (series is zero to its truncation order)");
    const long n = a.order() - a.valuation();  // known length
    const Rational& u0 = a.coefficient(a.valuation());
    std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
    b[0] = Rational(1) / u0;
    for (long k = 1; k < n; ++k) {
        Rational s(0);
        for (long i = 1; i <= k; ++i) {
            const Rational& ui = a.coefficient(a.valuation() + i);
            if (!ui.is_zero() && !b[static_cast<size_t>(k - i)].is_zero())
                s += ui * b[static_cast<size_t>(k - i)];
        }
        b[static_cast<size_t>(k)] = -s / u0;
    }
    return QSeries::from_coefficients(-a.valuation(), std::move(b));
}

QSeries pow(const QSeries& a, long e) {
    if (e < 0) return pow(invert(a), -e);
    if (e == 0) return QSeries::one(std::max(a.order() - a.valuation(), 1L));
    QSeries acc = a;
    long msb = 63;
    while (!((e >> msb) & 1)) --msb;
    for (long bit = msb - 1; bit >= 0; --bit) {
        acc *= acc;
        if ((e >> bit) & 1) acc *= a;
    }
    return acc;
}

QSeries substitute_power(const QSeries& a, long m) {
    if (m < 1) throw std::invalid_argument("substitute_power: multiplier must be >= 1");
    if (m == 1) return a;
    if (a.is_zero()) return QSeries::zero(m * a.order());
    std::vector<Rational> c(static_cast<size_t>(m * (a.order() - a.valuation())), Rational(0));
    for (long i = 0; i < a.order() - a.valuation(); ++i)
        c[static_cast<size_t>(m * i)] = a.coefficient(a.valuation() + i);
    return QSeries::from_coefficients(m * a.valuation(), std::move(c), m * a.order());
}

QSeries alternate(const QSeries& a) {
    if (a.is_zero()) return a;
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(a.order() - a.valuation()));
    for (long n = a.valuation(); n < a.order(); ++n) {
        // (n % 2) in C++ is negative for negative odd n; parity test is safe
        const Rational& x = a.coefficient(n);
        c.push_back(n % 2 == 0 ? x : -x);
    }
    return QSeries::from_coefficients(a.valuation(), std::move(c));
}

bool equal_to_order(const QSeries& a, const QSeries& b, long n) {
    return !first_difference(a, b, n).has_value();
}

std::optional<long> first_difference(const QSeries& a, const QSeries& b, long n) {
    if (n > a.order()) insufficient_precision(n - 1, a.order());
    if (n > b.order()) insufficient_precision(n - 1, b.order());
    for (long e = std::min(a.valuation(), b.valuation()); e < n; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return e;
    return std::nullopt;
}

std::string to_display_string(const QSeries& a, long max_terms) {
    std::ostringstream os;
    long printed = 0;
    bool first = true;
    for (long n = a.valuation(); n < a.order() && printed < max_terms; ++n) {
        const Rational& c = a.coefficient(n);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational abs = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = abs == Rational(1);
        if (n == 0) {
            os << abs.str();
        } else {
            if (!unit) os << abs.str() << "*";
            os << "q";
            if (n != 1) os << "^" << n;
        }
        ++printed;
    }
    if (first) os << "0";
    else if (printed == max_terms) os << " + ...";
    os << " + O(q^" << a.order() << ")";
    return os.str();
}

}  // namespace qmordell
