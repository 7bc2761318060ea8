#include "ftqft/smith.hpp"

#include <algorithm>

namespace ftqft {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
  ZMat out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
    }
  return out;
}

namespace {

struct Work {
  ZMat a, u, u_inv, v, v_inv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.cols; ++k) std::swap(a(i, k), a(j, k));
    for (int k = 0; k < u.cols; ++k) std::swap(u(i, k), u(j, k));
    // u_inv gets the inverse column op
    for (int k = 0; k < u_inv.rows; ++k) std::swap(u_inv(k, i), u_inv(k, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.rows; ++k) std::swap(a(k, i), a(k, j));
    for (int k = 0; k < v.rows; ++k) std::swap(v(k, i), v(k, j));
    for (int k = 0; k < v_inv.cols; ++k) std::swap(v_inv(i, k), v_inv(j, k));
  }
  // row i -= q * row j
  void row_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < a.cols; ++k) a(i, k) -= q * a(j, k);
    for (int k = 0; k < u.cols; ++k) u(i, k) -= q * u(j, k);
    for (int k = 0; k < u_inv.rows; ++k) u_inv(k, j) += q * u_inv(k, i);
  }
  // col i -= q * col j
  void col_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int k = 0; k < a.rows; ++k) a(k, i) -= q * a(k, j);
    for (int k = 0; k < v.rows; ++k) v(k, i) -= q * v(k, j);
    for (int k = 0; k < v_inv.cols; ++k) v_inv(j, k) += q * v_inv(i, k);
  }
  void negate_row(int i) {
    for (int k = 0; k < a.cols; ++k) a(i, k) = -a(i, k);
    for (int k = 0; k < u.cols; ++k) u(i, k) = -u(i, k);
    for (int k = 0; k < u_inv.rows; ++k) u_inv(k, i) = -u_inv(k, i);
  }
};

}  // namespace

SmithForm smith_normal_form(ZMat a0) {
  const int r = a0.rows, c = a0.cols;
  Work w{std::move(a0), ZMat::identity(r), ZMat::identity(r),
         ZMat::identity(c), ZMat::identity(c)};
  ZMat& a = w.a;

  const int steps = std::min(r, c);
  for (int t = 0; t < steps; ++t) {
    // Find a nonzero entry of minimal absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        if (a(i, j) == 0) continue;
        Int mag = abs(a(i, j));
        if (pi < 0 || mag < best) { pi = i; pj = j; best = mag; }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (bool again = true; again;) {
      again = false;
      for (int i = t + 1; i < r; ++i) {
        Int q = floor_div(a(i, t), a(t, t));
        w.row_sub(i, t, q);
        if (a(i, t) != 0) {  // remainder became the smaller pivot
          w.swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        Int q = floor_div(a(t, j), a(t, t));
        w.col_sub(j, t, q);
        if (a(t, j) != 0) {
          w.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (int i = t + 1; i < r && !again; ++i)
        for (int j = t + 1; j < c && !again; ++j)
          if (a(i, j) % a(t, t) != 0) {
            w.row_sub(t, i, Int(-1));  // row t += row i
            again = true;
          }
    }
    if (a(t, t) < 0) w.negate_row(t);
  }

  SmithForm out;
  out.diag.resize(steps);
  for (int t = 0; t < steps; ++t) {
    out.diag[t] = a(t, t);
    if (a(t, t) != 0) out.rank = t + 1;
  }
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

}  // namespace ftqft
