#pragma once

#include <utility>
#include <vector>

#include "catlattice/numeric.hpp"

namespace catlattice {

/// The power-recursion sequence p_m attached to a determinant/trace pair:
/// p_0 = 0, p_1 = 1, p_{m+1} = T p_m - D p_{m-1}, extended to negative
/// indices via p_{m-1} = (T p_m - p_{m+1})/D when D != 0. For D = 0 only
/// indices m >= 1 exist and p_m = T^{m-1}.
struct PSequence {
  Int det;
  Int trace;
  long long lo;
  long long hi;
  std::vector<Rational> values;  // values[i] = p_{lo + i}

  const Rational& at(long long m) const;
};

/// Materializes p_m for m in [m_lo, m_hi]. Requires m_lo <= m_hi, and
/// m_lo >= 1 when D = 0.
PSequence p_sequence(const Int& det, const Int& trace, long long m_lo, long long m_hi);

/// (p_e, p_{e-1}) as exact integers. Valid for e >= 0 with any D, and for
/// e < 0 when |D| = 1 (the indices where the sequence stays integral).
std::pair<Int, Int> p_pair_int(const Int& det, const Int& trace, long long e);

}  // namespace catlattice
