#include "catlattice/zeta.hpp"

#include <cmath>
#include <complex>

#include "catlattice/counts.hpp"
#include "catlattice/exceptions.hpp"

namespace catlattice {

std::string to_string(ZetaCase c) {
  switch (c) {
    case ZetaCase::hyperbolic_gl2: return "hyperbolic-gl2";
    case ZetaCase::singular: return "singular";
    case ZetaCase::scalar_like: return "scalar-like";
    case ZetaCase::upper_triangular: return "upper-triangular";
    case ZetaCase::series_only: return "series-only";
  }
  throw InternalError("to_string: unknown zeta case");
}

namespace {

IntPolynomial linear(const Int& c0, const Int& c1) {
  return IntPolynomial({c0, c1});
}

}  // namespace

RationalZeta zeta_closed_form(const Mat2Z& m) {
  const Int d = m.det();
  const Int t = m.trace();

  if (d == 0) {
    if (t == 0) return {IntPolynomial::one(), linear(1, -1), ZetaCase::singular};
    if (t == 1) return {IntPolynomial::one(), IntPolynomial::one(), ZetaCase::singular};
    return {linear(1, -sgn(t)), linear(1, -abs(t)), ZetaCase::singular};
  }

  const bool triangular = m.b == 0 || m.c == 0;
  if (triangular && m.a == m.d) {
    const Int& k = m.a;
    IntPolynomial num = linear(1, -k) * linear(1, -k);
    IntPolynomial den = linear(1, -1) * linear(1, -k * k);
    return {std::move(num), std::move(den), ZetaCase::scalar_like};
  }
  if (triangular) {
    const Int delta(sgn(d));
    IntPolynomial num = linear(1, -delta * m.a) * linear(1, -delta * m.d);
    IntPolynomial den = linear(1, -delta) * linear(1, -delta * d);
    return {std::move(num), std::move(den), ZetaCase::upper_triangular};
  }
  if ((d == 1 || d == -1) && eigen_data(m).hyperbolic) {
    // hyperbolic with |det| = 1 never has trace 0
    const Int sigma(sgn(t));
    IntPolynomial num = linear(1, -sigma) * linear(1, -sigma * d);
    IntPolynomial den({Int(1), -abs(t), d});
    return {std::move(num), std::move(den), ZetaCase::hyperbolic_gl2};
  }
  return {IntPolynomial(), IntPolynomial(), ZetaCase::series_only};
}

std::vector<Int> zeta_series(const Mat2Z& m, long long k) {
  if (k < 1) throw PreconditionError("zeta_series: order must be >= 1");
  std::vector<Int> a;
  a.reserve(static_cast<std::size_t>(k));
  for (long long i = 1; i <= k; ++i) a.push_back(fixed_count(m, i).value);

  // g = exp(f) with f' g = g', i.e. n g_n = sum_{j=1}^{n} a_j g_{n-j}
  std::vector<Rational> g(static_cast<std::size_t>(k) + 1);
  g[0] = 1;
  for (long long n = 1; n <= k; ++n) {
    Rational sum = 0;
    for (long long j = 1; j <= n; ++j)
      sum += Rational(a[static_cast<std::size_t>(j - 1)]) * g[static_cast<std::size_t>(n - j)];
    g[static_cast<std::size_t>(n)] = sum / n;
  }
  std::vector<Int> out;
  out.reserve(g.size());
  for (const auto& v : g) {
    if (denominator(v) != 1)
      throw InternalError("zeta_series: non-integer Taylor coefficient");
    out.push_back(numerator(v));
  }
  return out;
}

IntPolynomial euler_product_inverse(const std::vector<Int>& c, long long k) {
  if (k < 1) throw PreconditionError("euler_product_inverse: order must be >= 1");
  IntPolynomial p = IntPolynomial::one();
  const long long top = std::min<long long>(k, static_cast<long long>(c.size()));
  for (long long m = 1; m <= top; ++m)
    p.mul_one_minus_power(m, c[static_cast<std::size_t>(m - 1)], k);
  return p.truncated(k);
}

namespace {

using Complex = std::complex<double>;

double min_root_modulus_quadratic(double c0, double c1, double c2) {
  // c2 t^2 + c1 t + c0 = 0
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  Complex r1, r2;
  if (disc >= 0) {
    const double s = std::sqrt(disc);
    // numerically stable split
    const double q = -0.5 * (c1 + (c1 >= 0 ? s : -s));
    if (q == 0.0) return std::sqrt(std::abs(c0 / c2));  // c1 = 0, roots +-sqrt(-c0/c2)
    r1 = Complex(q / c2, 0);
    r2 = Complex(c0 / q, 0);
  } else {
    const double re = -c1 / (2 * c2);
    const double im = std::sqrt(-disc) / (2 * c2);
    r1 = Complex(re, im);
    r2 = Complex(re, -im);
  }
  return std::min(std::abs(r1), std::abs(r2));
}

double min_root_modulus_general(const std::vector<double>& coef) {
  // Durand-Kerner iteration on the monic version
  const std::size_t deg = coef.size() - 1;
  std::vector<Complex> monic(coef.size());
  for (std::size_t i = 0; i < coef.size(); ++i) monic[i] = coef[i] / coef.back();
  std::vector<Complex> roots(deg);
  const Complex seed(0.4, 0.9);
  Complex acc(1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    acc *= seed;
    roots[i] = acc;
  }
  auto eval = [&](Complex x) {
    Complex v = 0;
    for (std::size_t i = coef.size(); i-- > 0;) v = v * x + monic[i];
    return v;
  };
  for (int iter = 0; iter < 400; ++iter) {
    double shift = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      Complex den(1, 0);
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) den *= roots[i] - roots[j];
      Complex delta = eval(roots[i]) / den;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  double best = std::abs(roots[0]);
  for (const Complex& r : roots) best = std::min(best, std::abs(r));
  return best;
}

}  // namespace

double radius_of_convergence(const RationalZeta& z) {
  const IntPolynomial& den = z.denominator;
  if (den.degree() < 1)
    throw PreconditionError("radius_of_convergence: denominator is constant");
  std::vector<double> coef;
  coef.reserve(static_cast<std::size_t>(den.degree()) + 1);
  for (long long i = 0; i <= den.degree(); ++i)
    coef.push_back(den.coeff(i).convert_to<double>());
  if (den.degree() == 1) return std::abs(coef[0] / coef[1]);
  if (den.degree() == 2) return min_root_modulus_quadratic(coef[0], coef[1], coef[2]);
  return min_root_modulus_general(coef);
}

}  // namespace catlattice
