#include "ftqft/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ftqft {

std::string GaussRat::str() const {
  if (im == 0) return rat_str(re);
  std::string s;
  if (re != 0) s = rat_str(re) + (im > 0 ? "+" : "");
  if (im == 1) return s + "i";
  if (im == -1) return s + "-i";
  return s + rat_str(im) + "i";
}

template <class F>
int row_reduce(Mat<F>& a) {
  int rank = 0;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < a.rows(); ++i)
      if (!field_is_zero(a(i, col))) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(rank, j));
    F inv_p = F(Rat(1)) / a(rank, col);
    for (int j = col; j < a.cols(); ++j) a(rank, j) = a(rank, j) * inv_p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == rank || field_is_zero(a(i, col))) continue;
      F f = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class F>
Mat<F> kernel_basis(Mat<F> a) {
  int n = a.cols();
  int rank = row_reduce(a);
  // Locate pivot columns of the reduced matrix.
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(n, false);
  int r = 0;
  for (int col = 0; col < n && r < rank; ++col) {
    if (!field_is_zero(a(r, col))) {
      pivot_col[r] = col;
      is_pivot[col] = true;
      ++r;
    }
  }
  Mat<F> basis(n, n - rank);
  int out = 0;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    basis(col, out) = F(Rat(1));
    for (int i = 0; i < rank; ++i)
      basis(pivot_col[i], out) = -a(i, col);
    ++out;
  }
  return basis;
}

template <class F>
Mat<F> inverse(Mat<F> a) {
  int n = a.rows();
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(Rat(1));
  }
  if (row_reduce(aug) != n) throw SingularPairing("matrix is singular");
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template int row_reduce<GaussRat>(Mat<GaussRat>&);
template int row_reduce<Rat>(Mat<Rat>&);
template int row_reduce<Cyclotomic>(Mat<Cyclotomic>&);
template Mat<GaussRat> kernel_basis<GaussRat>(Mat<GaussRat>);
template Mat<Rat> kernel_basis<Rat>(Mat<Rat>);
template Mat<Cyclotomic> kernel_basis<Cyclotomic>(Mat<Cyclotomic>);
template Mat<GaussRat> inverse<GaussRat>(Mat<GaussRat>);
template Mat<Rat> inverse<Rat>(Mat<Rat>);
template Mat<Cyclotomic> inverse<Cyclotomic>(Mat<Cyclotomic>);

namespace {

std::uint64_t mod_of(const Int& v, std::uint64_t p) {
  Int r = v % Int(p);
  if (r < 0) r += Int(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

// sqrt(-1) mod p for p = 1 mod 4, by raising a nonresidue to (p-1)/4.
std::uint64_t sqrt_minus_one_mod(std::uint64_t p) {
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t acc = 1;
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint64_t g = 2;; ++g) {
    std::uint64_t w = powmod(g, (p - 1) / 4);
    if (mulmod(w, w) == p - 1) return w;
  }
}

int rank_mod_p(const QMat& a, std::uint64_t p) {
  const std::uint64_t w = sqrt_minus_one_mod(p);
  int rows = a.rows(), cols = a.cols();
  std::vector<std::uint64_t> m(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    // Clear denominators row-wise (does not change the rank over Q(i)).
    Int lcm_den = 1;
    for (int j = 0; j < cols; ++j) {
      const GaussRat& x = a(i, j);
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x.re));
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x.im));
    }
    for (int j = 0; j < cols; ++j) {
      const GaussRat& x = a(i, j);
      Int re_i = numerator(x.re) * (lcm_den / denominator(x.re));
      Int im_i = numerator(x.im) * (lcm_den / denominator(x.im));
      std::uint64_t v = (mod_of(re_i, p) + static_cast<__uint128_t>(mod_of(im_i, p)) * w % p) % p;
      m[static_cast<size_t>(i) * cols + j] = v;
    }
  }
  return rank_mod_p_inplace(m, rows, cols, p);
}

int rank_mod_p_inplace(std::vector<std::uint64_t>& m, int rows, int cols,
                       std::uint64_t p) {
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * y) % p);
  };
  auto invmod = [&](std::uint64_t x) {
    std::uint64_t acc = 1, e = p - 2, base = x;
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return acc;
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[static_cast<size_t>(i) * cols + col]) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < cols; ++j)
        std::swap(m[static_cast<size_t>(pivot) * cols + j], m[static_cast<size_t>(rank) * cols + j]);
    std::uint64_t inv_p = invmod(m[static_cast<size_t>(rank) * cols + col]);
    for (int j = col; j < cols; ++j)
      m[static_cast<size_t>(rank) * cols + j] = mulmod(m[static_cast<size_t>(rank) * cols + j], inv_p);
    for (int i = rank + 1; i < rows; ++i) {
      std::uint64_t f = m[static_cast<size_t>(i) * cols + col];
      if (!f) continue;
      for (int j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, m[static_cast<size_t>(rank) * cols + j]);
        std::uint64_t& cell = m[static_cast<size_t>(i) * cols + j];
        cell = (cell >= sub) ? cell - sub : cell + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

CMat CMat::operator*(const CMat& o) const {
  CMat out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      cplx a = (*this)(i, k);
      if (a == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < o.c_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

CMat CMat::adjoint() const {
  CMat out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx CMat::trace() const {
  cplx t(0.0, 0.0);
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

HermitianEigen hermitian_eigen(CMat a) {
  const int n = a.rows();
  CMat v(n, n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return s;
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-26 * n * n; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cplx apq = a(p, q);
        double absq = std::abs(apq);
        if (absq < 1e-300) continue;
        double app = a(p, p).real(), aqq = a(q, q).real();
        // Unitary U = diag(1, conj(phase)) * [[c, s], [-s, c]] zeroes the
        // (p,q) entry of the Hermitian block [[app, apq], [conj(apq), aqq]].
        cplx phase = apq / absq;
        double theta = 0.5 * std::atan2(-2.0 * absq, app - aqq);
        double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < n; ++k) {  // A <- U^dagger A (rows p, q)
          cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        for (int k = 0; k < n; ++k) {  // A <- A U (columns p, q)
          cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
        }
        for (int k = 0; k < n; ++k) {  // V <- V U
          cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * vkp + c * std::conj(phase) * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace ftqft
