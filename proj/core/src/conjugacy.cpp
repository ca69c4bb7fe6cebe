#include "catlattice/conjugacy.hpp"

#include "catlattice/exceptions.hpp"

namespace catlattice {

using boost::multiprecision::gcd;

QuadraticForm QuadraticForm::primitive_part() const {
  if (content == 0)
    throw PreconditionError("QuadraticForm: zero form has no primitive part");
  return {q_alpha / content, q_mix / content, q_gamma / content,
          discriminant / (content * content), 1};
}

QuadraticForm quadratic_form(const Mat2Z& m) {
  QuadraticForm q;
  q.q_alpha = m.c;
  q.q_mix = m.d - m.a;
  q.q_gamma = -m.b;
  q.discriminant = q.q_mix * q.q_mix - 4 * q.q_alpha * q.q_gamma;
  q.content = mgcd(m);
  return q;
}

PrimitiveRep primitive_representation(const QuadraticForm& q, const Int& n) {
  if (!q.primitive())
    throw PreconditionError("primitive_representation: form must be primitive");
  if (n < 2) throw PreconditionError("primitive_representation: modulus must be >= 2");

  const Int b = -q.q_gamma;
  const Int c = q.q_alpha;
  Int alpha = 1, gamma = 1;
  for (const Int& p : prime_divisors(n)) {
    if (b % p != 0)
      alpha *= p;
    else if (c % p != 0)
      gamma *= p;
  }
  Int value = q.eval(alpha, gamma);
  if (gcd(value, n) == 1 && gcd(alpha, gamma) == 1) return {alpha, gamma, value};

  // the construction above is guaranteed for primitive forms; keep a bounded
  // search as a safety net
  const Int bound = 8 * n;
  for (Int g = 0; g <= bound; ++g)
    for (Int a = -bound; a <= bound; ++a) {
      if (gcd(a, g) != 1) continue;
      Int v = q.eval(a, g);
      if (v != 0 && gcd(v, n) == 1) return {a, g, v};
    }
  throw InternalError("primitive_representation: no representation found");
}

Mat2Z companion(const Mat2Z& m) { return {0, -m.det(), 1, m.trace()}; }

bool verify_certificate(const ConjugacyCertificate& cert) {
  if (!cert.x.invertible()) return false;
  const Mat2Zn lhs = cert.x * reduce(cert.source, cert.n);
  const Mat2Zn rhs = reduce(cert.target, cert.n) * cert.x;
  return lhs == rhs;
}

ConjugacyCertificate conjugator_to_companion(const Mat2Z& m, const Int& n) {
  if (n < 2) throw PreconditionError("conjugator_to_companion: modulus must be >= 2");
  const Int mu = mgcd(m);
  if (mu == 0)
    throw PreconditionError("conjugator_to_companion: scalar matrix has no companion conjugacy");
  if (gcd(mu, n) != 1)
    throw PreconditionError("conjugator_to_companion: mgcd must be coprime to the modulus");

  const QuadraticForm q = quadratic_form(m);
  const PrimitiveRep rep = primitive_representation(q.primitive_part(), n);
  const auto second = m.apply(rep.alpha, rep.gamma);
  // M A = A C holds exactly over the integers for this column choice
  const Mat2Z a{rep.alpha, second[0], rep.gamma, second[1]};

  ConjugacyCertificate cert;
  cert.n = n;
  cert.x = reduce(a, n);
  cert.source = companion(m);
  cert.target = m;
  cert.verified = verify_certificate(cert);
  if (!cert.verified)
    throw InternalError("conjugator_to_companion: constructed certificate failed verification");
  return cert;
}

NormalForm normal_form_mod(const Mat2Z& m, const Int& n) {
  if (n < 2) throw PreconditionError("normal_form_mod: modulus must be >= 2");
  const Int r = mgcd(m);
  if (r == 0) throw PreconditionError("normal_form_mod: scalar matrix has no normal form");

  const Mat2Z nf{m.a, (m.b * m.c) / r, r, m.d};
  // M = a 1 + r N with mgcd(N) = 1; conjugating N to its companion carries
  // M to the normal form.
  const Mat2Z traceless{0, m.b / r, m.c / r, (m.d - m.a) / r};
  const ConjugacyCertificate inner = conjugator_to_companion(traceless, n);

  ConjugacyCertificate cert;
  cert.n = n;
  cert.x = inner.x.inverse();
  cert.source = m;
  cert.target = nf;
  cert.verified = verify_certificate(cert);
  if (!cert.verified)
    throw InternalError("normal_form_mod: constructed certificate failed verification");
  return {nf, cert};
}

bool decide_all_n_conjugacy(const Mat2Z& m1, const Mat2Z& m2) {
  return invariant_triple(m1) == invariant_triple(m2);
}

ConjugacyCertificate build_conjugator(const Mat2Z& m1, const Mat2Z& m2, const Int& n) {
  if (n < 2) throw PreconditionError("build_conjugator: modulus must be >= 2");
  if (!decide_all_n_conjugacy(m1, m2))
    throw PreconditionError("build_conjugator: matrices differ in det, trace or mgcd");

  ConjugacyCertificate cert;
  cert.n = n;
  cert.source = m1;
  cert.target = m2;

  const Int r = mgcd(m1);
  if (r == 0) {
    // equal scalar matrices
    cert.x = Mat2Zn::identity(n);
    cert.verified = verify_certificate(cert);
    return cert;
  }

  const NormalForm nf1 = normal_form_mod(m1, n);
  const NormalForm nf2 = normal_form_mod(m2, n);
  // bridge [[1, (d-d')/r], [0, 1]]; integrality of (d-d')/r is guaranteed
  // by the shared invariant triple
  const Int diff = m1.d - m2.d;
  if (diff % r != 0)
    throw InternalError("build_conjugator: mgcd does not divide the d-entry difference");
  const Mat2Z bridge{1, diff / r, 0, 1};

  const Mat2Zn x = nf2.certificate.x.inverse() * reduce(bridge, n) * nf1.certificate.x;
  cert.x = x;
  cert.verified = verify_certificate(cert);
  if (!cert.verified)
    throw InternalError("build_conjugator: composed certificate failed verification");
  return cert;
}

Mat3Z Mat3Z::identity() {
  Mat3Z m;
  for (int i = 0; i < 3; ++i) m.e[i][i] = 1;
  return m;
}

Int Mat3Z::det() const {
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
         e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

std::array<Int, 3> Mat3Z::apply(const std::array<Int, 3>& v) const {
  std::array<Int, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += e[i][j] * v[j];
  return out;
}

Mat3Z operator*(const Mat3Z& l, const Mat3Z& r) {
  Mat3Z out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int sum = 0;
      for (int k = 0; k < 3; ++k) sum += l.e[i][k] * r.e[k][j];
      out.e[i][j] = sum;
    }
  return out;
}

Mat3Z mgcd_transform(const Mat2Z& a) {
  const Int det = a.det();
  if (det != 1 && det != -1)
    throw PreconditionError("mgcd_transform: determinant must be +-1");
  const Int &al = a.a, &be = a.b, &ga = a.c, &de = a.d;
  Mat3Z n;
  n.e[0] = {al * al, -be * be, al * be};
  n.e[1] = {-ga * ga, de * de, -ga * de};
  n.e[2] = {2 * al * ga, -2 * be * de, be * ga + al * de};
  if (det == -1)
    for (auto& row : n.e)
      for (auto& v : row) v = -v;
  return n;
}

std::optional<Mat2Zn> brute_force_conjugator(const Mat2Z& m1, const Mat2Z& m2, long long n,
                                             bool restrict_det_one) {
  if (n < 2) throw PreconditionError("brute_force_conjugator: modulus must be >= 2");
  if (n > 16)
    throw PreconditionError("brute_force_conjugator: search space n^4 limited to n <= 16");
  const Mat2Zn r1 = reduce(m1, Int(n));
  const Mat2Zn r2 = reduce(m2, Int(n));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long d = 0; d < n; ++d) {
          Mat2Zn x{Int(n), a, b, c, d};
          if (!x.invertible()) continue;
          if (restrict_det_one && x.det_mod() != 1) continue;
          if (x * r1 == r2 * x) return x;
        }
  return std::nullopt;
}

}  // namespace catlattice
