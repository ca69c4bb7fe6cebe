#pragma once

#include <array>
#include <optional>

#include "catlattice/lattice.hpp"
#include "catlattice/mat2.hpp"

namespace catlattice {

/// The binary quadratic form Q(alpha, gamma) = c a^2 + (d-a) ag - b g^2
/// attached to a matrix; det(A) = Q(alpha, gamma) for any A whose first
/// column is (alpha, gamma) and second column M * (alpha, gamma).
struct QuadraticForm {
  Int q_alpha;  // = c
  Int q_mix;    // = d - a
  Int q_gamma;  // = -b
  Int discriminant;  // q_mix^2 - 4 q_alpha q_gamma = T^2 - 4D
  Int content;       // gcd of coefficients = mgcd of the source matrix

  Int eval(const Int& alpha, const Int& gamma) const {
    return q_alpha * alpha * alpha + q_mix * alpha * gamma + q_gamma * gamma * gamma;
  }
  bool primitive() const { return content == 1; }
  /// Coefficients divided by the content; requires content != 0.
  QuadraticForm primitive_part() const;
};

QuadraticForm quadratic_form(const Mat2Z& m);

struct PrimitiveRep {
  Int alpha;
  Int gamma;
  Int value;  // Q(alpha, gamma), coprime to the requested modulus
};

/// A primitive representation of a value coprime to n >= 2, for a primitive
/// form. alpha is the product of the primes dividing n but not b = -q_gamma,
/// gamma the product of the primes dividing n and b but not c = q_alpha;
/// a bounded search backs the construction up.
PrimitiveRep primitive_representation(const QuadraticForm& q, const Int& n);

/// Companion matrix [[0, -det], [1, trace]] of the characteristic polynomial.
Mat2Z companion(const Mat2Z& m);

/// Witness of X * source * X^{-1} = target over Z_n.
struct ConjugacyCertificate {
  Int n;
  Mat2Zn x;
  Mat2Z source;
  Mat2Z target;
  bool verified = false;
};

/// Independent re-check of a certificate: X invertible mod n and
/// X * source = target * X mod n.
bool verify_certificate(const ConjugacyCertificate& cert);

/// Conjugates the companion matrix to M over Z_n. Requires mu = mgcd(M) != 0
/// and gcd(mu, n) = 1. The returned certificate has source = companion(M),
/// target = M.
ConjugacyCertificate conjugator_to_companion(const Mat2Z& m, const Int& n);

struct NormalForm {
  Mat2Z matrix;  // [[a, bc/r], [r, d]] with r = mgcd
  ConjugacyCertificate certificate;  // source = M, target = the normal form
};

/// Mod-n normal form [[a, bc/r], [r, d]]; works for every n >= 2 because the
/// traceless part of M has matrix gcd 1. Requires mgcd(M) != 0.
NormalForm normal_form_mod(const Mat2Z& m, const Int& n);

/// True iff det, trace and mgcd all agree; equivalent to the reductions being
/// conjugate in Mat(2, Z_n)^x for every n >= 2.
bool decide_all_n_conjugacy(const Mat2Z& m1, const Mat2Z& m2);

/// Certified conjugator X with X M X^{-1} = M' mod n, composed from the two
/// normal forms and the unimodular upper-triangular bridge between them.
/// Requires decide_all_n_conjugacy(m1, m2).
ConjugacyCertificate build_conjugator(const Mat2Z& m1, const Mat2Z& m2, const Int& n);

/// 3x3 integer matrix with exact entries; just enough for mgcd_transform.
struct Mat3Z {
  std::array<std::array<Int, 3>, 3> e{};

  static Mat3Z identity();
  Int det() const;
  std::array<Int, 3> apply(const std::array<Int, 3>& v) const;
  friend Mat3Z operator*(const Mat3Z& l, const Mat3Z& r);
  friend bool operator==(const Mat3Z&, const Mat3Z&) = default;
};

/// The unimodular 3x3 matrix carrying (b, c, d-a) of M to that of A M A^{-1};
/// has determinant 1. Requires det(A) = +-1.
Mat3Z mgcd_transform(const Mat2Z& a);

/// Exhaustive search for X mod n with X M = M' X and X invertible (optionally
/// det X = 1 mod n); lexicographic over the entries (a, b, c, d), smallest
/// witness first. Requires n <= 16.
std::optional<Mat2Zn> brute_force_conjugator(const Mat2Z& m1, const Mat2Z& m2, long long n,
                                             bool restrict_det_one);

}  // namespace catlattice
