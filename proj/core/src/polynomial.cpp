#include "catlattice/polynomial.hpp"

#include <algorithm>

#include "catlattice/exceptions.hpp"

namespace catlattice {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::one_minus_power(long long k) {
  if (k <= 0) throw PreconditionError("one_minus_power: exponent must be positive");
  std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
  c.front() = 1;
  c.back() = -1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(long long i) const {
  static const Int zero = 0;
  if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::truncated(long long k) const {
  if (k < 0) return IntPolynomial();
  if (degree() <= k) return *this;
  std::vector<Int> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::size_t>(k) + 1);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::mul_one_minus_power(long long m, const Int& e, long long trunc) {
  if (m <= 0) throw PreconditionError("mul_one_minus_power: power must be positive");
  if (e == 0 || is_zero()) {
    if (trunc >= 0) *this = truncated(trunc);
    return;
  }
  if (e < 0 && trunc < 0)
    throw PreconditionError("mul_one_minus_power: negative exponent needs truncation");
  // (1 - t^m)^e = sum_j C(e, j) (-1)^j t^{mj}; a finite sum for e >= 0 and a
  // power series (truncated) for e < 0.
  long long self_deg = degree();
  long long jmax;
  if (e >= 0) {
    jmax = e.convert_to<long long>();
    if (trunc >= 0) jmax = std::min(jmax, trunc / m);
  } else {
    jmax = trunc / m;
  }
  long long out_deg = self_deg + jmax * m;
  if (trunc >= 0) out_deg = std::min(out_deg, trunc);
  std::vector<Int> out(static_cast<std::size_t>(out_deg) + 1, Int(0));
  Int coef = 1;  // C(e, 0)
  for (long long j = 0; j <= jmax; ++j) {
    if (j > 0) {
      coef *= e - (j - 1);
      coef /= j;  // exact: running product of binomials
    }
    if (coef != 0) {
      Int term = (j % 2 == 0) ? coef : Int(-coef);
      long long base = j * m;
      long long top = std::min(self_deg, out_deg - base);
      for (long long i = 0; i <= top; ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
          out[static_cast<std::size_t>(base + i)] +=
              term * coeffs_[static_cast<std::size_t>(i)];
    }
  }
  coeffs_ = std::move(out);
  normalize();
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& rhs) const {
  if (rhs.is_zero()) throw PreconditionError("divide_exact: division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < rhs.degree()) return std::nullopt;
  std::vector<Int> rem = coeffs_;
  const long long dq = degree() - rhs.degree();
  std::vector<Int> quot(static_cast<std::size_t>(dq) + 1, Int(0));
  const Int& lead = rhs.coeffs_.back();
  for (long long k = dq; k >= 0; --k) {
    Int& top = rem[static_cast<std::size_t>(k + rhs.degree())];
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q != 0)
      for (long long i = 0; i <= rhs.degree(); ++i)
        rem[static_cast<std::size_t>(k + i)] -= q * rhs.coeffs_[static_cast<std::size_t>(i)];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long long i = 0; i <= degree(); ++i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int mag = abs(c);
    if (mag != 1 || i == 0) out += mag.str();
    if (i > 0) {
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace catlattice
