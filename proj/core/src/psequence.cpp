#include "catlattice/psequence.hpp"

#include <algorithm>

#include "catlattice/exceptions.hpp"

namespace catlattice {

const Rational& PSequence::at(long long m) const {
  if (m < lo || m > hi) throw PreconditionError("PSequence::at: index not materialized");
  return values[static_cast<std::size_t>(m - lo)];
}

PSequence p_sequence(const Int& det, const Int& trace, long long m_lo, long long m_hi) {
  if (m_lo > m_hi) throw PreconditionError("p_sequence: empty index range");
  if (det == 0 && m_lo < 1)
    throw PreconditionError("p_sequence: indices below 1 are undefined for det = 0");

  PSequence seq{det, trace, m_lo, m_hi, {}};
  seq.values.resize(static_cast<std::size_t>(m_hi - m_lo + 1));
  auto put = [&](long long m, const Rational& v) {
    if (m >= m_lo && m <= m_hi) seq.values[static_cast<std::size_t>(m - m_lo)] = v;
  };

  if (det == 0) {
    for (long long m = m_lo; m <= m_hi; ++m) put(m, Rational(pow_int(trace, m - 1)));
    return seq;
  }

  // anchor at p_0 = 0, p_1 = 1 and run the recursion outward in both directions
  Rational prev = 0, cur = 1;  // p_0, p_1
  put(0, prev);
  put(1, cur);
  for (long long m = 1; m < m_hi; ++m) {
    Rational next = Rational(trace) * cur - Rational(det) * prev;
    prev = cur;
    cur = next;
    put(m + 1, cur);
  }
  prev = 1;  // p_1
  cur = 0;   // p_0
  for (long long m = 0; m > m_lo; --m) {
    Rational below = (Rational(trace) * cur - prev) / Rational(det);
    prev = cur;
    cur = below;
    put(m - 1, cur);
  }
  return seq;
}

std::pair<Int, Int> p_pair_int(const Int& det, const Int& trace, long long e) {
  if (e == 0) {
    // p_{-1} = -1/D is integral only for |D| = 1
    if (det != 1 && det != -1)
      throw PreconditionError("p_pair_int: index 0 requires determinant +-1");
    return {0, det == 1 ? Int(-1) : Int(1)};
  }
  if (e > 0) {
    if (det == 0) {
      // p_m = T^{m-1} for m >= 1, p_0 = 0
      return {pow_int(trace, e - 1), e == 1 ? Int(0) : pow_int(trace, e - 2)};
    }
    Int prev = 0, cur = 1;  // p_0, p_1
    for (long long m = 1; m < e; ++m) {
      Int next = trace * cur - det * prev;
      prev = cur;
      cur = next;
    }
    return {cur, prev};
  }
  if (det != 1 && det != -1)
    throw PreconditionError("p_pair_int: negative index requires determinant +-1");
  Int above = 1, cur = 0;  // p_1, p_0
  for (long long m = 0; m > e; --m) {
    Int below = (trace * cur - above) / det;  // exact: det = +-1
    above = cur;
    cur = below;
  }
  // now cur = p_e, above = p_{e+1}; need p_{e-1} = (T p_e - p_{e+1})/det
  Int below = (trace * cur - above) / det;
  return {cur, below};
}

}  // namespace catlattice
