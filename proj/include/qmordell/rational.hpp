// Exact scalar arithmetic. Rational wraps GMP's mpq_class and guarantees the
// canonical form (lowest terms, positive denominator) on every value that can
// be observed. Integer is an alias for mpz_class. Nothing in the library ever
// touches floating point.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qmordell {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // implicit on purpose: lets 2*r, r+1 read naturally
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) { canon_(); }
    Rational(long num, long den) : v_(num, den) { canon_(); }

    // accepts "-3", "22/7"; whitespace and a denominator of zero are rejected
    static Rational from_string(const std::string& s);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "num" when the denominator is 1, otherwise "num/den"
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    void canon_() {
        if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// b^e for integer e (e < 0 inverts, b == 0 then rejected)
Rational rat_pow(const Rational& b, long e);

Integer int_pow(const Integer& b, unsigned long e);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace qmordell
