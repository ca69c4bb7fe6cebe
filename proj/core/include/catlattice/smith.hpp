#pragma once

#include "catlattice/mat2.hpp"

namespace catlattice {

/// Smith normal form U * B * V = diag(d1, d2) with d1 | d2 (0 | 0 allowed),
/// d1, d2 >= 0 and U, V unimodular. The transforms are not unique.
struct SmithForm2 {
  Int d1;
  Int d2;
  Mat2Z u;
  Mat2Z v;
};

SmithForm2 smith_form(const Mat2Z& b);

}  // namespace catlattice
