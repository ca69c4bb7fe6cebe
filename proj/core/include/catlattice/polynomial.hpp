#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catlattice/numeric.hpp"

namespace catlattice {

/// Dense integer polynomial, coefficients lowest degree first, normalized so
/// the highest-degree coefficient is non-zero (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial constant(Int c);
  static IntPolynomial one() { return constant(1); }
  /// 1 - t^k
  static IntPolynomial one_minus_power(long long k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const Int& coeff(long long i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Drops all terms of degree > k.
  IntPolynomial truncated(long long k) const;

  /// Multiplies by (1 - t^m)^e in place, e >= 0; exact when trunc < 0,
  /// otherwise truncated at degree trunc.
  void mul_one_minus_power(long long m, const Int& e, long long trunc = -1);

  /// Exact quotient if rhs divides *this over the integers.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& rhs) const;
  bool divisible_by(const IntPolynomial& rhs) const { return divide_exact(rhs).has_value(); }

  std::string str() const;  // human-readable, for diagnostics

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace catlattice
