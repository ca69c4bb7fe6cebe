#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catlattice {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sgn(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline Int gcd3(const Int& a, const Int& b, const Int& c) {
  using boost::multiprecision::gcd;
  return gcd(gcd(a, b), c);
}

/// Quotient rounded toward negative infinity (cpp_int division truncates).
Int floor_div(const Int& a, const Int& b);

/// Remainder in [0, |b|).
Int floor_mod(const Int& a, const Int& b);

/// b^e for e >= 0.
Int pow_int(const Int& base, long long e);

/// Trial-division factorization of x > 0 into (prime, exponent) pairs,
/// primes ascending. Intended for desk-scale inputs.
std::vector<std::pair<Int, int>> factorize(const Int& x);

/// Distinct primes dividing x (x != 0); sign ignored.
std::vector<Int> prime_divisors(const Int& x);

/// Square-free part with the sign of x preserved; 0 maps to 0.
Int squarefree_part(const Int& x);

/// Inverse of a modulo n (n >= 1); throws PreconditionError if gcd(a,n) != 1.
Int mod_inverse(const Int& a, const Int& n);

/// Divisors of m > 0 in ascending order.
std::vector<long long> divisors(long long m);

/// Moebius function of m > 0.
int mobius(long long m);

/// Generalized binomial coefficient C(c, j) for integer c (may be negative), j >= 0.
Int binomial(const Int& c, long long j);

}  // namespace catlattice
