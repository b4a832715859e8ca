// Scalar number theory used by the series builders: Bernoulli and Euler
// numbers, generalized Bernoulli numbers attached to the quadratic character
// mod p, the Legendre symbol, and the divisor sums
//
//   sigma_k(n)          = sum_{d|n} d^k                      (sigma_0(n)=0 for n<=0)
//   sigma0_{k}(n)       = sum_{d|n} (n/d | p) d^{k-1}        k odd, "cusp 0" weight
//   sigmainf_{k}(n)     = sum_{d|n} (d | p)   d^{k-1}        k odd, "cusp infinity" weight
//
// Conventions: B_1 = -1/2 (the u/(e^u - 1) expansion); Euler numbers from
// 1/cosh(u), so E_0 = 1, E_2 = -1, E_4 = 5, odd indices rejected; the
// generalized Bernoulli numbers come from the expansion
//
//   sum_{j=1}^{p-1} (j|p) x e^{jx} / (e^{px} - 1) = sum_k B_{k,p} x^k / k!
//
// All of these are memoized; the tables are guarded by a mutex so the
// functions are safe to call from concurrent tests.
#pragma once

#include "qmordell/rational.hpp"

#include <vector>

namespace qmordell {

// Legendre symbol (j | p) in {-1, 0, +1} for odd prime p, any integer j
int legendre(const Integer& j, long p);
int legendre(long j, long p);

// table-backed character chi_p(j) = (j | p); validates that p is an odd prime
class LegendreCharacter {
public:
    explicit LegendreCharacter(long p);
    long modulus() const { return p_; }
    int operator()(long j) const;

private:
    long p_;
    std::vector<int> table_;  // table_[j mod p]
};

Rational bernoulli(unsigned n);
Rational euler_number(unsigned n);  // n must be even
Rational gen_bernoulli(unsigned k, long p);

Integer sigma(unsigned k, long long n);
Integer sigma_cusp0(unsigned k, long p, long long n);    // k odd
Integer sigma_cuspinf(unsigned k, long p, long long n);  // k odd

}  // namespace qmordell
