#pragma once

#include <string>
#include <vector>

#include "catlattice/mat2.hpp"
#include "catlattice/polynomial.hpp"

namespace catlattice {

enum class ZetaCase {
  hyperbolic_gl2,
  singular,
  scalar_like,
  upper_triangular,
  series_only,
};

std::string to_string(ZetaCase c);

/// Dynamical zeta function of the isolated fixed point counts as a ratio of
/// integer polynomials. For series_only no closed form is attached and the
/// polynomials are empty.
struct RationalZeta {
  IntPolynomial numerator;
  IntPolynomial denominator;
  ZetaCase case_tag = ZetaCase::series_only;
  bool has_closed_form() const { return case_tag != ZetaCase::series_only; }
};

/// Closed form where one is known:
///  - singular M: (1 - sgn(T) t)/(1 - |T| t), with T = 0 giving 1/(1-t) and
///    T = 1 giving 1 (fixed subtori);
///  - equal-diagonal triangular M (incl. k*identity): (1-kt)^2/((1-t)(1-k^2 t));
///  - non-singular triangular M: (1-da t)(1-dd t)/((1-dt)(1-dD t)), d = sgn(D);
///  - hyperbolic M with det = +-1: (1-st)(1-sDt)/(1 - |T|t + Dt^2), s = sgn(T).
/// Everything else is series_only.
RationalZeta zeta_closed_form(const Mat2Z& m);

/// Taylor coefficients of exp(sum_{m<=k} a_m t^m / m) up to degree k.
/// Exact rational arithmetic internally; the results are asserted integral.
std::vector<Int> zeta_series(const Mat2Z& m, long long k);

/// prod_{m<=k} (1 - t^m)^{c_m} truncated at degree k; c may contain negative
/// entries (the factor is then expanded as a power series).
IntPolynomial euler_product_inverse(const std::vector<Int>& c, long long k);

/// Smallest modulus among the denominator roots, to about 1e-12 absolute.
/// Requires a non-constant denominator.
double radius_of_convergence(const RationalZeta& z);

}  // namespace catlattice
