#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "catlattice/numeric.hpp"

namespace catlattice {

/// 2x2 integer matrix with exact arbitrary-precision entries.
struct Mat2Z {
  Int a{0}, b{0}, c{0}, d{0};

  static Mat2Z identity() { return {1, 0, 0, 1}; }

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  Mat2Z transpose() const { return {a, c, b, d}; }
  /// adj(M), so that M * adj(M) = det(M) * 1.
  Mat2Z adjugate() const { return {d, -b, -c, a}; }
  std::array<Int, 2> apply(const Int& x, const Int& y) const {
    return {a * x + b * y, c * x + d * y};
  }

  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r);
Mat2Z operator+(const Mat2Z& l, const Mat2Z& r);
Mat2Z operator-(const Mat2Z& l, const Mat2Z& r);
Mat2Z operator-(const Mat2Z& m);
Mat2Z operator*(const Int& k, const Mat2Z& m);

/// gcd(b, c, d-a) >= 0, with gcd(0,0,0) = 0. Zero exactly for scalar matrices.
Int mgcd(const Mat2Z& m);

struct InvariantTriple {
  Int det;
  Int trace;
  Int mgcd;
  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

InvariantTriple invariant_triple(const Mat2Z& m);

struct EigenData {
  Int discriminant;             // T^2 - 4D
  bool hyperbolic;              // no eigenvalue on the unit circle
  Int squarefree_discriminant;  // square-free part, sign preserved
};

/// Characteristic-polynomial discriminant and the exact-integer hyperbolicity
/// test: hyperbolic iff charpoly(1) != 0, charpoly(-1) != 0 and not
/// (discriminant < 0 with det = 1).
EigenData eigen_data(const Mat2Z& m);

/// Exact integer inverse; requires det(M) = +-1.
Mat2Z inverse(const Mat2Z& m);

/// M^e via the trace/determinant power recursion. e < 0 requires det = +-1.
Mat2Z power(const Mat2Z& m, long long e);

/// Accepts "a,b;c,d" (optional whitespace) or {"a":..,"b":..,"c":..,"d":..}.
Mat2Z parse_mat2(const std::string& text);

/// Canonical text form "a,b;c,d".
std::string to_text(const Mat2Z& m);

std::ostream& operator<<(std::ostream& os, const Mat2Z& m);

}  // namespace catlattice
