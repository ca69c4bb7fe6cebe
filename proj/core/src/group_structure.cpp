#include "catlattice/group_structure.hpp"

#include <algorithm>

#include "catlattice/counts.hpp"
#include "catlattice/exceptions.hpp"
#include "catlattice/lattice.hpp"
#include "catlattice/smith.hpp"

namespace catlattice {

namespace {

void require_hyperbolic(const Mat2Z& m, const char* who) {
  if (!eigen_data(m).hyperbolic)
    throw PreconditionError(std::string(who) + ": matrix must be hyperbolic");
}

long long p_valuation(Int v, const Int& p) {
  long long e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<Int> fix_group_order_chain(const Mat2Z& m, long long power, const Int& p,
                                       long long r_max) {
  require_hyperbolic(m, "fix_group_order_chain");
  if (power < 1) throw PreconditionError("fix_group_order_chain: power must be >= 1");
  if (r_max < 0) throw PreconditionError("fix_group_order_chain: r_max must be >= 0");
  std::vector<Int> chain;
  chain.reserve(static_cast<std::size_t>(r_max) + 1);
  chain.push_back(1);  // the one-point lattice
  Int modulus = 1;
  for (long long r = 1; r <= r_max; ++r) {
    modulus *= p;
    chain.push_back(fixed_count_mod(m, power, modulus));
  }
  return chain;
}

AbelianType elementary_divisors_from_counts(const Mat2Z& m, long long power) {
  require_hyperbolic(m, "elementary_divisors_from_counts");
  const Int total = fixed_count(m, power).value;
  if (total == 0)
    throw InternalError("elementary_divisors_from_counts: hyperbolic matrix with zero count");

  AbelianType type;
  type.order = 1;
  for (const auto& [p, e] : factorize(total)) {
    const Int p_part = pow_int(p, e);
    // g(p^{r-1}), g(p^r), g(p^{r+1}) sliding window
    Int below = 1;
    Int modulus = p;
    Int at = fixed_count_mod(m, power, modulus);
    for (long long r = 1;; ++r) {
      modulus *= p;
      const Int above = fixed_count_mod(m, power, modulus);
      const long long mult = 2 * p_valuation(at, p) - p_valuation(below, p) - p_valuation(above, p);
      const Int divisor = pow_int(p, r);
      for (long long k = 0; k < mult; ++k) {
        type.elementary_divisors.push_back(divisor);
        type.order *= divisor;
      }
      if (above == at && at == p_part) break;
      below = at;
      at = above;
    }
  }
  std::sort(type.elementary_divisors.begin(), type.elementary_divisors.end());
  return type;
}

AbelianType elementary_divisors_oracle(const Mat2Z& m, long long power) {
  require_hyperbolic(m, "elementary_divisors_oracle");
  const SmithForm2 s = smith_form(catlattice::power(m, power) - Mat2Z::identity());
  AbelianType type;
  type.order = 1;
  for (const Int& d : {s.d1, s.d2}) {
    if (d <= 1) continue;
    for (const auto& [p, e] : factorize(d)) {
      const Int pe = pow_int(p, e);
      type.elementary_divisors.push_back(pe);
      type.order *= pe;
    }
  }
  std::sort(type.elementary_divisors.begin(), type.elementary_divisors.end());
  return type;
}

}  // namespace catlattice
