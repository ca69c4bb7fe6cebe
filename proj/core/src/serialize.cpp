#include "catlattice/serialize.hpp"

#include <limits>

namespace catlattice {

OrderedJson json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

OrderedJson json_poly(const IntPolynomial& p) {
  OrderedJson arr = OrderedJson::array();
  for (long long i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

OrderedJson json_series(const std::vector<Int>& coeffs) {
  OrderedJson arr = OrderedJson::array();
  for (const Int& c : coeffs) arr.push_back(c.str());
  return arr;
}

OrderedJson json_census(const OrbitCensus& census) {
  OrderedJson j;
  j["n"] = census.n;
  j["ord"] = census.ord;
  j["per"] = census.per;
  j["invertible"] = census.invertible;
  j["periodic_points"] = census.periodic_point_total;
  OrderedJson cycles = OrderedJson::object();
  for (const auto& [len, count] : census.cycle_counts)
    cycles[std::to_string(len)] = count;
  j["cycles"] = std::move(cycles);
  j["zn_poly"] = json_poly(census.zn_poly);
  return j;
}

OrderedJson json_certificate(const ConjugacyCertificate& cert) {
  OrderedJson j;
  j["n"] = json_int(cert.n);
  j["X"] = to_text(cert.x);
  j["source"] = to_text(cert.source);
  j["target"] = to_text(cert.target);
  j["verified"] = cert.verified;
  return j;
}

}  // namespace catlattice
