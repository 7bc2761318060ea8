#pragma once

#include <vector>

#include "ftqft/rational.hpp"

namespace ftqft {

// Integer matrix in row-major order.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> d;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c) {}
  Int& operator()(int i, int j) { return d[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return d[static_cast<size_t>(i) * cols + j]; }
  static ZMat identity(int n);
  ZMat operator*(const ZMat& o) const;
};

// Smith normal form  U * A * V = D  with U, V unimodular and D diagonal with
// d_1 | d_2 | ... Inverses of the transforms are tracked so lattice bases can
// be pulled back.
struct SmithForm {
  std::vector<Int> diag;  // min(rows, cols) entries, trailing zeros allowed
  ZMat u, u_inv;          // rows x rows
  ZMat v, v_inv;          // cols x cols
  int rank = 0;           // number of nonzero diagonal entries
};

SmithForm smith_normal_form(ZMat a);

}  // namespace ftqft
