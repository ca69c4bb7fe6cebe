#pragma once

#include <vector>

#include "catlattice/mat2.hpp"
#include "catlattice/numeric.hpp"

namespace catlattice {

struct FixedCount {
  Int value;      // |det(M^m - 1)|, the number of isolated fixed points of M^m
  bool subtorus;  // value = 0: the fixed set is a subtorus, nothing isolated
};

/// Fixed points of M^m on the torus, m >= 1, computed through the power
/// recursion det(M^m - 1) = -p_{m+1} + D p_{m-1} + D^m + 1 (and 1 - T^m for
/// singular M).
FixedCount fixed_count(const Mat2Z& m, long long power);

/// Result of Moebius inversion c_m = (1/m) sum_{d|m} mu(m/d) a_d.
struct OrbitCounts {
  std::vector<Rational> values;              // values[i] = c_{i+1}, exact
  std::vector<long long> non_integral;       // 1-based indices with fractional c_m
  bool integral() const { return non_integral.empty(); }
  /// Integer view; requires integral().
  std::vector<Int> as_integers() const;
};

/// a is indexed from 1 (a[0] = a_1).
OrbitCounts orbit_counts_from_fixed(const std::vector<Int>& a);

/// Inverse direction, a_m = sum_{d|m} d c_d.
std::vector<Int> fixed_from_orbit(const std::vector<Int>& c);

struct Realizability {
  bool realizable;
  long long first_failure;  // smallest failing index, 0 when realizable
};

/// A non-negative count sequence is exactly realizable by some dynamical
/// system iff every derived c_m is a non-negative integer.
Realizability is_exactly_realizable(const std::vector<Int>& a);

/// Fixed and orbit counts for m = 1..k of one matrix.
struct CountsTable {
  std::vector<Int> a;               // fixed point counts, index m-1
  std::vector<Int> c;               // orbit counts, index m-1
  std::vector<bool> subtorus_flags; // a_m = 0 markers
};

CountsTable counts_table(const Mat2Z& m, long long k);

}  // namespace catlattice
