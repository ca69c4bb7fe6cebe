#include "catlattice/counts.hpp"

#include "catlattice/exceptions.hpp"

namespace catlattice {

FixedCount fixed_count(const Mat2Z& m, long long power) {
  if (power < 1) throw PreconditionError("fixed_count: power must be >= 1");
  const Int d = m.det();
  const Int t = m.trace();
  Int det_shifted;
  if (d == 0) {
    det_shifted = 1 - pow_int(t, power);
  } else {
    Int below = 0, at = 1;  // p_0, p_1
    for (long long i = 1; i < power; ++i) {
      Int next = t * at - d * below;
      below = at;
      at = next;
    }
    Int above = t * at - d * below;  // p_{m+1}
    det_shifted = -above + d * below + pow_int(d, power) + 1;
  }
  return {abs(det_shifted), det_shifted == 0};
}

std::vector<Int> OrbitCounts::as_integers() const {
  if (!integral()) throw PreconditionError("OrbitCounts: sequence has fractional entries");
  std::vector<Int> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(numerator(v));
  return out;
}

OrbitCounts orbit_counts_from_fixed(const std::vector<Int>& a) {
  OrbitCounts out;
  out.values.reserve(a.size());
  for (long long m = 1; m <= static_cast<long long>(a.size()); ++m) {
    Int sum = 0;
    for (long long d : divisors(m))
      sum += mobius(m / d) * a[static_cast<std::size_t>(d - 1)];
    Rational c(sum, m);
    if (denominator(c) != 1) out.non_integral.push_back(m);
    out.values.push_back(std::move(c));
  }
  return out;
}

std::vector<Int> fixed_from_orbit(const std::vector<Int>& c) {
  std::vector<Int> a;
  a.reserve(c.size());
  for (long long m = 1; m <= static_cast<long long>(c.size()); ++m) {
    Int sum = 0;
    for (long long d : divisors(m)) sum += d * c[static_cast<std::size_t>(d - 1)];
    a.push_back(std::move(sum));
  }
  return a;
}

Realizability is_exactly_realizable(const std::vector<Int>& a) {
  for (const Int& v : a)
    if (v < 0) throw PreconditionError("is_exactly_realizable: counts must be >= 0");
  OrbitCounts c = orbit_counts_from_fixed(a);
  for (long long m = 1; m <= static_cast<long long>(c.values.size()); ++m) {
    const Rational& v = c.values[static_cast<std::size_t>(m - 1)];
    if (denominator(v) != 1 || v < 0) return {false, m};
  }
  return {true, 0};
}

CountsTable counts_table(const Mat2Z& m, long long k) {
  if (k < 1) throw PreconditionError("counts_table: need at least one index");
  CountsTable table;
  table.a.reserve(static_cast<std::size_t>(k));
  table.subtorus_flags.reserve(static_cast<std::size_t>(k));
  for (long long i = 1; i <= k; ++i) {
    FixedCount fc = fixed_count(m, i);
    table.a.push_back(fc.value);
    table.subtorus_flags.push_back(fc.subtorus);
  }
  OrbitCounts oc = orbit_counts_from_fixed(table.a);
  if (!oc.integral())
    throw InternalError("counts_table: matrix counts produced fractional orbit counts");
  table.c = oc.as_integers();
  return table;
}

}  // namespace catlattice
