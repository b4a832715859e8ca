// Truncated formal power series (Laurent tails allowed) in q with exact
// rational coefficients.
//
// A QSeries knows its coefficients on the exponent window
//
//     valuation() <= n < order()
//
// and knows nothing at or beyond order(). Asking for an unknown coefficient
// throws ("insufficient precision") instead of returning a guess; every
// operation propagates the window conservatively:
//
//     (a+b).order  = min(a.order, b.order)
//     (a*b).order  = min(a.order + b.val, b.order + a.val)
//     invert(a)    : valuation -v, order  a.order - 2 a.val
//
// so a correct result window never overstates what is actually known. The
// identically-zero series carries valuation() == order() (an empty window);
// its valuation is a bookkeeping value, not an assertion that a unit term
// exists. Negative valuations are first-class: the tilde-side correctors
// start at q^{-j}.
#pragma once

#include "qmordell/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmordell {

class QSeries {
public:
    QSeries() : val_(0), order_(0) {}

    static QSeries zero(long order);
    static QSeries one(long order);
    static QSeries monomial(const Rational& c, long exponent, long order);
    // coefficients for exponents valuation, valuation+1, ...; order defaults
    // to valuation + coeffs.size(), or may be given explicitly (>= that) to
    // assert trailing zeros are known
    static QSeries from_coefficients(long valuation, std::vector<Rational> coeffs);
    static QSeries from_coefficients(long valuation, std::vector<Rational> coeffs, long order);

    long valuation() const { return val_; }
    long order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    // exact coefficient of q^n; throws std::out_of_range for n >= order()
    const Rational& coefficient(long n) const;

    // shrink the window (new_order <= order required)
    QSeries truncated(long new_order) const;
    // multiply by q^e
    QSeries shifted(long e) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o) ;
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend QSeries operator-(const QSeries& a);

    // exact object equality: same window and same coefficients
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.val_ == b.val_ && a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

private:
    void normalize_();  // strip leading zeros; keep size == order_ - val_

    long val_;
    long order_;
    std::vector<Rational> c_;  // c_[i] is the coefficient of q^{val_ + i}
};

// multiplicative inverse; the series must be nonzero within its window
QSeries invert(const QSeries& a);

// a^e; e < 0 goes through invert, a^0 is 1 on a window of matching width
QSeries pow(const QSeries& a, long e);

// q -> q^m for m >= 1 (tau -> m tau); the window scales to [m val, m order)
QSeries substitute_power(const QSeries& a, long m);

// q -> -q (tau -> tau + 1/2): negates odd-exponent coefficients
QSeries alternate(const QSeries& a);

// compare all coefficients with exponent < n; both windows must reach n
bool equal_to_order(const QSeries& a, const QSeries& b, long n);
// smallest exponent < n where they differ, or nullopt
std::optional<long> first_difference(const QSeries& a, const QSeries& b, long n);

// "q^-1 - 2 + 5q + O(q^3)" style, for the text CLI and error messages
std::string to_display_string(const QSeries& a, long max_terms = 12);

}  // namespace qmordell
