#include "catlattice/numeric.hpp"

#include "catlattice/exceptions.hpp"

namespace catlattice {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

Int pow_int(const Int& base, long long e) {
  if (e < 0) throw PreconditionError("pow_int: negative exponent");
  Int result = 1;
  Int acc = base;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) result *= acc;
    if (k > 1) acc *= acc;
  }
  return result;
}

std::vector<std::pair<Int, int>> factorize(const Int& x) {
  if (x <= 0) throw PreconditionError("factorize: argument must be positive");
  std::vector<std::pair<Int, int>> factors;
  Int rest = x;
  auto strip = [&](const Int& p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int p = 5; p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  return factors;
}

std::vector<Int> prime_divisors(const Int& x) {
  Int v = abs(x);
  if (v == 0) throw PreconditionError("prime_divisors: argument must be non-zero");
  std::vector<Int> primes;
  for (const auto& [p, e] : factorize(v)) primes.push_back(p);
  return primes;
}

Int squarefree_part(const Int& x) {
  if (x == 0) return 0;
  Int out = 1;
  for (const auto& [p, e] : factorize(abs(x)))
    if (e % 2 == 1) out *= p;
  return x < 0 ? Int(-out) : out;
}

Int mod_inverse(const Int& a, const Int& n) {
  if (n < 1) throw PreconditionError("mod_inverse: modulus must be >= 1");
  // extended Euclid on (a mod n, n)
  Int r0 = floor_mod(a, n), r1 = n;
  Int s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw PreconditionError("mod_inverse: arguments are not coprime");
  return floor_mod(s0, n);
}

std::vector<long long> divisors(long long m) {
  if (m <= 0) throw PreconditionError("divisors: argument must be positive");
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(long long m) {
  if (m <= 0) throw PreconditionError("mobius: argument must be positive");
  int result = 1;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

Int binomial(const Int& c, long long j) {
  if (j < 0) throw PreconditionError("binomial: lower index must be >= 0");
  Int num = 1, den = 1;
  for (long long i = 0; i < j; ++i) {
    num *= c - i;
    den *= i + 1;
  }
  if (num % den != 0) throw InternalError("binomial: non-integer result");
  return num / den;
}

}  // namespace catlattice
