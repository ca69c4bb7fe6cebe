#pragma once

#include <json.hpp>

#include "catlattice/conjugacy.hpp"
#include "catlattice/lattice.hpp"
#include "catlattice/mat2.hpp"
#include "catlattice/polynomial.hpp"
#include "catlattice/zeta.hpp"

namespace catlattice {

using OrderedJson = nlohmann::ordered_json;

/// Emits a JSON number when the value fits int64, a decimal string otherwise.
OrderedJson json_int(const Int& v);

/// JSON array of decimal-string coefficients, lowest degree first.
OrderedJson json_poly(const IntPolynomial& p);
OrderedJson json_series(const std::vector<Int>& coeffs);

/// {n, ord, per, invertible, cycles: {"len": count, ...}, zn_poly: [...]}
OrderedJson json_census(const OrbitCensus& census);

/// {n, X, source, target, verified}
OrderedJson json_certificate(const ConjugacyCertificate& cert);

}  // namespace catlattice
