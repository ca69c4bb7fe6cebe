#include "catlattice/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "catlattice/exceptions.hpp"
#include "catlattice/smith.hpp"

namespace catlattice {

Mat2Zn Mat2Zn::identity(const Int& n) { return {n, 1 % n, 0, 0, 1 % n}; }

Int Mat2Zn::det_mod() const { return floor_mod(a * d - b * c, n); }

bool Mat2Zn::invertible() const {
  using boost::multiprecision::gcd;
  return gcd(det_mod(), n) == 1;
}

Mat2Zn Mat2Zn::inverse() const {
  if (!invertible()) throw PreconditionError("Mat2Zn::inverse: matrix not invertible mod n");
  const Int inv_det = mod_inverse(det_mod(), n);
  return {n, floor_mod(inv_det * d, n), floor_mod(-inv_det * b, n),
          floor_mod(-inv_det * c, n), floor_mod(inv_det * a, n)};
}

Mat2Zn operator*(const Mat2Zn& l, const Mat2Zn& r) {
  if (l.n != r.n) throw PreconditionError("Mat2Zn: mixed moduli");
  return {l.n, floor_mod(l.a * r.a + l.b * r.c, l.n), floor_mod(l.a * r.b + l.b * r.d, l.n),
          floor_mod(l.c * r.a + l.d * r.c, l.n), floor_mod(l.c * r.b + l.d * r.d, l.n)};
}

Mat2Zn reduce(const Mat2Z& m, const Int& n) {
  if (n < 2) throw PreconditionError("reduce: modulus must be >= 2");
  return {n, floor_mod(m.a, n), floor_mod(m.b, n), floor_mod(m.c, n), floor_mod(m.d, n)};
}

std::string to_text(const Mat2Zn& m) {
  return m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str();
}

long long enumeration_budget() {
  static const long long value = [] {
    if (const char* env = std::getenv("CATLATTICE_BUDGET")) {
      char* end = nullptr;
      long long parsed = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && parsed >= 2) return parsed;
    }
    return 4096LL;
  }();
  return value;
}

namespace {

void check_budget(long long n, long long budget_override) {
  const long long budget = budget_override > 0 ? budget_override : enumeration_budget();
  if (n > budget)
    throw BudgetError("lattice modulus " + std::to_string(n) +
                      " exceeds the enumeration budget " + std::to_string(budget));
}

long long count_distinct_prime_factors(long long n) {
  long long count = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

}  // namespace

long long ord(const Mat2Z& m, long long n) {
  if (n < 2) throw PreconditionError("ord: modulus must be >= 2");
  const Mat2Zn reduced = reduce(m, n);
  if (!reduced.invertible()) return 0;
  const Mat2Zn id = Mat2Zn::identity(n);
  const long long cap = 6 * n * count_distinct_prime_factors(n);
  Mat2Zn acc = reduced;
  for (long long k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = acc * reduced;
  }
  throw InternalError("ord: order exceeds the 6n*omega(n) iteration cap");
}

OrbitCensus orbit_census(const Mat2Z& m, long long n, long long budget_override) {
  if (n < 2) throw PreconditionError("orbit_census: modulus must be >= 2");
  check_budget(n, budget_override);

  const Mat2Zn r = reduce(m, Int(n));
  const long long a = r.a.convert_to<long long>();
  const long long b = r.b.convert_to<long long>();
  const long long c = r.c.convert_to<long long>();
  const long long d = r.d.convert_to<long long>();
  const long long total = n * n;
  auto step = [&](long long i) {
    const long long x = i % n, y = i / n;
    return (a * x + b * y) % n + n * ((c * x + d * y) % n);
  };

  OrbitCensus census;
  census.n = n;
  census.invertible = r.invertible();

  std::vector<bool> on_cycle;
  if (census.invertible) {
    on_cycle.assign(static_cast<std::size_t>(total), true);
  } else {
    // peel nodes of in-degree zero; what survives lies on cycles
    std::vector<std::int32_t> indeg(static_cast<std::size_t>(total), 0);
    for (long long i = 0; i < total; ++i) ++indeg[static_cast<std::size_t>(step(i))];
    std::vector<long long> queue;
    for (long long i = 0; i < total; ++i)
      if (indeg[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
    while (!queue.empty()) {
      const long long i = queue.back();
      queue.pop_back();
      const long long j = step(i);
      if (--indeg[static_cast<std::size_t>(j)] == 0) queue.push_back(j);
    }
    on_cycle.resize(static_cast<std::size_t>(total));
    for (long long i = 0; i < total; ++i)
      on_cycle[static_cast<std::size_t>(i)] = indeg[static_cast<std::size_t>(i)] > 0;
  }

  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  for (long long start = 0; start < total; ++start) {
    if (!on_cycle[static_cast<std::size_t>(start)] || visited[static_cast<std::size_t>(start)])
      continue;
    long long len = 0;
    long long i = start;
    do {
      visited[static_cast<std::size_t>(i)] = true;
      i = step(i);
      ++len;
    } while (i != start);
    ++census.cycle_counts[len];
  }

  census.per = 1;
  census.periodic_point_total = 0;
  IntPolynomial poly = IntPolynomial::one();
  for (const auto& [len, count] : census.cycle_counts) {
    census.per = std::lcm(census.per, len);
    census.periodic_point_total += len * count;
    poly.mul_one_minus_power(len, Int(count));
  }
  census.zn_poly = std::move(poly);
  census.ord = census.invertible ? census.per : 0;
  return census;
}

Int fixed_count_mod(const Mat2Z& m, long long power, const Int& n) {
  using boost::multiprecision::gcd;
  if (power < 1) throw PreconditionError("fixed_count_mod: power must be >= 1");
  if (n < 2) throw PreconditionError("fixed_count_mod: modulus must be >= 2");
  // reduce first: the kernel count only depends on M^power mod n
  Mat2Zn acc = Mat2Zn::identity(n);
  const Mat2Zn base = reduce(m, n);
  for (long long i = 0; i < power; ++i) acc = acc * base;
  const Mat2Z shifted{acc.a - 1, acc.b, acc.c, acc.d - 1};
  const SmithForm2 s = smith_form(shifted);
  const Int g1 = s.d1 == 0 ? n : gcd(s.d1, n);
  const Int g2 = s.d2 == 0 ? n : gcd(s.d2, n);
  return g1 * g2;
}

long long minimal_count_period(const Mat2Z& m, long long n) {
  if (n < 2) throw PreconditionError("minimal_count_period: modulus must be >= 2");
  const Mat2Zn base = reduce(m, Int(n));
  if (!base.invertible())
    throw PreconditionError("minimal_count_period: matrix not invertible mod n");
  const long long full = ord(m, n);

  std::vector<Int> residues;  // a_m^(n) mod n for m = 1..full
  residues.reserve(static_cast<std::size_t>(full));
  using boost::multiprecision::gcd;
  Mat2Zn acc = base;
  for (long long i = 1; i <= full; ++i) {
    const Mat2Z shifted{acc.a - 1, acc.b, acc.c, acc.d - 1};
    const SmithForm2 s = smith_form(shifted);
    const Int g1 = s.d1 == 0 ? Int(n) : gcd(s.d1, Int(n));
    const Int g2 = s.d2 == 0 ? Int(n) : gcd(s.d2, Int(n));
    residues.push_back(floor_mod(g1 * g2, Int(n)));
    acc = acc * base;
  }

  for (long long q : divisors(full)) {
    bool periodic = true;
    for (long long i = 0; i < full && periodic; ++i)
      periodic = residues[static_cast<std::size_t>(i)] ==
                 residues[static_cast<std::size_t>((i + q) % full)];
    if (periodic) return q;
  }
  throw InternalError("minimal_count_period: no divisor of ord is a period");
}

std::map<long long, long long> direct_limit_exponents(const Mat2Z& m, long long n_max,
                                                      long long budget_override) {
  if (n_max < 1) throw PreconditionError("direct_limit_exponents: need n_max >= 1");
  std::map<long long, long long> exponents;
  exponents[1] = 1;  // the one-point lattice contributes Z_1 = 1 - t
  for (long long n = 2; n <= n_max; ++n) {
    const OrbitCensus census = orbit_census(m, n, budget_override);
    for (const auto& [len, count] : census.cycle_counts) {
      auto [it, inserted] = exponents.emplace(len, count);
      if (!inserted && it->second < count) it->second = count;
    }
  }
  return exponents;
}

IntPolynomial direct_limit_lcm(const Mat2Z& m, long long n_max, long long budget_override) {
  IntPolynomial poly = IntPolynomial::one();
  for (const auto& [len, count] : direct_limit_exponents(m, n_max, budget_override))
    poly.mul_one_minus_power(len, Int(count));
  return poly;
}

}  // namespace catlattice
