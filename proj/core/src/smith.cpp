#include "catlattice/smith.hpp"

#include "catlattice/exceptions.hpp"

namespace catlattice {

namespace {

struct Work {
  Int m[2][2];
  Mat2Z u = Mat2Z::identity();
  Mat2Z v = Mat2Z::identity();

  void swap_rows() {
    std::swap(m[0][0], m[1][0]);
    std::swap(m[0][1], m[1][1]);
    std::swap(u.a, u.c);
    std::swap(u.b, u.d);
  }
  void swap_cols() {
    std::swap(m[0][0], m[0][1]);
    std::swap(m[1][0], m[1][1]);
    std::swap(v.a, v.b);
    std::swap(v.c, v.d);
  }
  // row[i] -= q * row[j]
  void row_sub(int i, int j, const Int& q) {
    m[i][0] -= q * m[j][0];
    m[i][1] -= q * m[j][1];
    if (i == 0) {
      u.a -= q * u.c;
      u.b -= q * u.d;
    } else {
      u.c -= q * u.a;
      u.d -= q * u.b;
    }
  }
  // col[i] -= q * col[j]
  void col_sub(int i, int j, const Int& q) {
    m[0][i] -= q * m[0][j];
    m[1][i] -= q * m[1][j];
    if (i == 0) {
      v.a -= q * v.b;
      v.c -= q * v.d;
    } else {
      v.b -= q * v.a;
      v.d -= q * v.c;
    }
  }
  void negate_row(int i) {
    m[i][0] = -m[i][0];
    m[i][1] = -m[i][1];
    if (i == 0) {
      u.a = -u.a;
      u.b = -u.b;
    } else {
      u.c = -u.c;
      u.d = -u.d;
    }
  }
};

}  // namespace

SmithForm2 smith_form(const Mat2Z& b) {
  Work w;
  w.m[0][0] = b.a;
  w.m[0][1] = b.b;
  w.m[1][0] = b.c;
  w.m[1][1] = b.d;

  if (b == Mat2Z{0, 0, 0, 0})
    return {0, 0, Mat2Z::identity(), Mat2Z::identity()};

  for (int guard = 0; guard < 4096; ++guard) {
    // move a minimal-magnitude non-zero entry to the pivot position
    int pi = -1, pj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (w.m[i][j] == 0) continue;
        if (pi < 0 || abs(w.m[i][j]) < abs(w.m[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == 1) w.swap_rows();
    if (pj == 1) w.swap_cols();

    bool reduced = false;
    if (w.m[1][0] != 0) {
      Int q = floor_div(w.m[1][0], w.m[0][0]);
      w.row_sub(1, 0, q);
      reduced = true;
    }
    if (w.m[0][1] != 0) {
      Int q = floor_div(w.m[0][1], w.m[0][0]);
      w.col_sub(1, 0, q);
      reduced = true;
    }
    if (reduced && (w.m[1][0] != 0 || w.m[0][1] != 0)) continue;

    // pivot must divide the remaining corner
    if (w.m[1][1] % w.m[0][0] != 0) {
      w.row_sub(0, 1, Int(-1));  // row0 += row1, reintroduces m[0][1] = m[1][1]
      continue;
    }
    if (w.m[0][0] < 0) w.negate_row(0);
    if (w.m[1][1] < 0) w.negate_row(1);
    SmithForm2 out{w.m[0][0], w.m[1][1], w.u, w.v};
    return out;
  }
  throw InternalError("smith_form: reduction did not terminate");
}

}  // namespace catlattice
