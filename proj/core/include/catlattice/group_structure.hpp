#pragma once

#include <vector>

#include "catlattice/mat2.hpp"

namespace catlattice {

/// Finite Abelian group described by its multiset of prime-power elementary
/// divisors, sorted ascending; empty for the trivial group.
struct AbelianType {
  std::vector<Int> elementary_divisors;
  Int order{1};
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

/// g(p^r) for r = 0..r_max: the number of fixed points of M^power on the
/// p^r-division lattice. Non-decreasing, stabilizes at the p-part of the
/// torus fixed point count. Requires M hyperbolic.
std::vector<Int> fix_group_order_chain(const Mat2Z& m, long long power, const Int& p,
                                       long long r_max);

/// Reconstructs the group of fixed points of M^power from the lattice counts
/// alone: the multiplicity of p^r is the p-adic valuation of
/// g(p^r)^2 / (g(p^{r-1}) g(p^{r+1})). Requires M hyperbolic.
AbelianType elementary_divisors_from_counts(const Mat2Z& m, long long power);

/// Same group read off the Smith normal form of M^power - 1.
AbelianType elementary_divisors_oracle(const Mat2Z& m, long long power);

}  // namespace catlattice
