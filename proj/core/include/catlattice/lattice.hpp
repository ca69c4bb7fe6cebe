#pragma once

#include <map>
#include <string>
#include <vector>

#include "catlattice/mat2.hpp"
#include "catlattice/polynomial.hpp"

namespace catlattice {

/// 2x2 matrix over Z_n, entries reduced to [0, n).
struct Mat2Zn {
  Int n;
  Int a{0}, b{0}, c{0}, d{0};

  static Mat2Zn identity(const Int& n);
  Int det_mod() const;
  bool invertible() const;
  /// Inverse in Mat(2, Z_n)^x; requires invertible().
  Mat2Zn inverse() const;

  friend bool operator==(const Mat2Zn&, const Mat2Zn&) = default;
};

Mat2Zn operator*(const Mat2Zn& l, const Mat2Zn& r);

/// Entrywise reduction mod n, n >= 2.
Mat2Zn reduce(const Mat2Z& m, const Int& n);

std::string to_text(const Mat2Zn& m);

/// Maximum lattice modulus the enumeration operations accept. Defaults to
/// 4096; the environment variable CATLATTICE_BUDGET overrides it.
long long enumeration_budget();

/// Least m >= 1 with M^m = 1 mod n when M is invertible mod n, otherwise 0.
/// Iteration is capped at 6n * omega(n) steps; exceeding the cap throws
/// InternalError (cannot happen for hyperbolic automorphisms, where the
/// order is at most 3n).
long long ord(const Mat2Z& m, long long n);

/// Full cycle/pretail census of the action of M on the n x n lattice.
struct OrbitCensus {
  long long n = 0;
  std::map<long long, long long> cycle_counts;  // length -> number of cycles
  long long ord = 0;                            // 0 when not invertible mod n
  long long per = 1;                            // lcm of cycle lengths
  bool invertible = false;
  long long periodic_point_total = 0;
  IntPolynomial zn_poly;  // prod (1 - t^len)^{count}
};

/// Walks all n^2 lattice points. Requires 2 <= n <= budget (override with
/// budget_override > 0).
OrbitCensus orbit_census(const Mat2Z& m, long long n, long long budget_override = 0);

/// Number of lattice points fixed by M^power mod n, via the Smith normal form
/// of M^power - 1: the count is gcd(d1, n) * gcd(d2, n) with gcd(0, n) = n.
Int fixed_count_mod(const Mat2Z& m, long long power, const Int& n);

/// Minimal period of the residues (a_m^(n) mod n) of the lattice fixed point
/// counts; always divides ord(M, n). Requires M invertible mod n. (The
/// integer count sequence itself has minimal period exactly ord(M, n), so
/// the residue sequence is the one carrying finer information.)
long long minimal_count_period(const Mat2Z& m, long long n);

/// Canonical encoding of the functional graph of M on the n x n lattice:
/// equal encodings iff the directed pseudo-graphs are isomorphic.
struct FunctionalGraphCanon {
  std::string encoding;
  friend bool operator==(const FunctionalGraphCanon&, const FunctionalGraphCanon&) = default;
};

FunctionalGraphCanon canonical_graph(const Mat2Z& m, long long n, long long budget_override = 0);

bool same_local_statistics(const Mat2Z& m1, const Mat2Z& m2, long long n);

/// Exponent of (1 - t^len) in the factored lattice zeta polynomial, maximized
/// over all moduli 1..n_max.
std::map<long long, long long> direct_limit_exponents(const Mat2Z& m, long long n_max,
                                                      long long budget_override = 0);

/// prod_len (1 - t^len)^{max exponent over n <= n_max}; the factorwise least
/// common multiple of the lattice zeta polynomials Z_1, ..., Z_{n_max}.
IntPolynomial direct_limit_lcm(const Mat2Z& m, long long n_max, long long budget_override = 0);

}  // namespace catlattice
