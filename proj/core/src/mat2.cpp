#include "catlattice/mat2.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "catlattice/exceptions.hpp"
#include "catlattice/psequence.hpp"

namespace catlattice {

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2Z operator+(const Mat2Z& l, const Mat2Z& r) {
  return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
}

Mat2Z operator-(const Mat2Z& l, const Mat2Z& r) {
  return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
}

Mat2Z operator-(const Mat2Z& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2Z operator*(const Int& k, const Mat2Z& m) {
  return {k * m.a, k * m.b, k * m.c, k * m.d};
}

Int mgcd(const Mat2Z& m) { return gcd3(m.b, m.c, m.d - m.a); }

InvariantTriple invariant_triple(const Mat2Z& m) {
  return {m.det(), m.trace(), mgcd(m)};
}

EigenData eigen_data(const Mat2Z& m) {
  const Int d = m.det();
  const Int t = m.trace();
  const Int disc = t * t - 4 * d;
  // charpoly(x) = x^2 - T x + D; real unit-circle eigenvalues are +-1,
  // complex conjugate pairs have squared modulus D.
  const bool unit_root = (1 - t + d == 0) || (1 + t + d == 0);
  const bool complex_on_circle = disc < 0 && d == 1;
  return {disc, !unit_root && !complex_on_circle, squarefree_part(disc)};
}

Mat2Z inverse(const Mat2Z& m) {
  const Int d = m.det();
  if (d != 1 && d != -1)
    throw PreconditionError("inverse: matrix determinant must be +-1");
  Mat2Z adj = m.adjugate();
  return d == 1 ? adj : -adj;
}

Mat2Z power(const Mat2Z& m, long long e) {
  if (e == 0) return Mat2Z::identity();
  const Int d = m.det();
  const Int t = m.trace();
  if (d == 0) {
    if (e < 0) throw PreconditionError("power: negative power of a singular matrix");
    // M^e = T^{e-1} M for singular M
    return pow_int(t, e - 1) * m;
  }
  if (e < 0 && d != 1 && d != -1)
    throw PreconditionError("power: negative power requires determinant +-1");
  // M^e = p_e M - D p_{e-1} 1; integral in both directions when |D| = 1.
  auto p = p_pair_int(d, t, e);
  Mat2Z out = p.first * m;
  const Int shift = d * p.second;
  out.a -= shift;
  out.d -= shift;
  return out;
}

namespace {

Int parse_int_token(const std::string& token) {
  std::string s;
  for (char ch : token)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty matrix entry");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("matrix entry is not an integer: " + token);
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("matrix entry is not an integer: " + token);
  return Int(s);
}

Int json_entry_to_int(const nlohmann::json& v, const char* key) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) return parse_int_token(v.get<std::string>());
  throw ParseError(std::string("matrix JSON field \"") + key +
                   "\" must be an integer or a decimal string");
}

Mat2Z parse_mat2_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  Mat2Z m;
  for (const char* key : {"a", "b", "c", "d"})
    if (!j.contains(key))
      throw ParseError(std::string("matrix JSON is missing field \"") + key + "\"");
  m.a = json_entry_to_int(j["a"], "a");
  m.b = json_entry_to_int(j["b"], "b");
  m.c = json_entry_to_int(j["c"], "c");
  m.d = json_entry_to_int(j["d"], "d");
  return m;
}

}  // namespace

Mat2Z parse_mat2(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty matrix text");
  if (text[first] == '{') return parse_mat2_json(text);

  std::vector<std::string> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(row);
  if (rows.size() != 2) throw ParseError("matrix text must have two rows: " + text);
  std::array<Int, 4> e;
  std::size_t idx = 0;
  for (const auto& r : rows) {
    std::stringstream rs(r);
    std::string cell;
    std::size_t cells = 0;
    while (std::getline(rs, cell, ',')) {
      if (idx >= 4 || cells >= 2) throw ParseError("matrix row must have two entries: " + r);
      e[idx++] = parse_int_token(cell);
      ++cells;
    }
    if (cells != 2) throw ParseError("matrix row must have two entries: " + r);
  }
  return {e[0], e[1], e[2], e[3]};
}

std::string to_text(const Mat2Z& m) {
  return m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2Z& m) {
  return os << to_text(m);
}

}  // namespace catlattice
