#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ftqft/cyclotomic.hpp"
#include "ftqft/errors.hpp"
#include "ftqft/rational.hpp"

namespace ftqft {

// Gaussian rational a + b*i with exact components.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator-() const { return {-re, -im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat operator/(const GaussRat& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw Error("division by zero Gaussian rational");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  std::string str() const;
};

inline bool field_is_zero(const GaussRat& x) { return x.is_zero(); }
inline bool field_is_zero(const Rat& x) { return x == 0; }
inline bool field_is_zero(const Cyclotomic& x) { return x.is_zero(); }

// Dense matrix over an exact field F (GaussRat, Rat or Cyclotomic).
template <class F>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(Rat(1));
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator*(const Mat& o) const {
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const F& a = (*this)(i, k);
        if (field_is_zero(a)) continue;
        for (int j = 0; j < o.c_; ++j) {
          if (field_is_zero(o(k, j))) continue;
          out(i, j) += a * o(k, j);
        }
      }
    return out;
  }
  Mat operator+(const Mat& o) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] + o.d_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] - o.d_[i];
    return out;
  }
  Mat scaled(const F& s) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] * s;
    return out;
  }
  Mat transposed() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool is_zero() const {
    for (const auto& x : d_)
      if (!field_is_zero(x)) return false;
    return true;
  }

 private:
  int r_, c_;
  std::vector<F> d_;
};

using QMat = Mat<GaussRat>;

// In-place row reduction; returns rank.  Exact, with pivot normalization.
template <class F>
int row_reduce(Mat<F>& a);

template <class F>
int rank_exact(Mat<F> a) {
  return row_reduce(a);
}

// Basis of the right kernel, as columns of the returned matrix.
template <class F>
Mat<F> kernel_basis(Mat<F> a);

// Inverse of a square matrix; throws SingularPairing if singular.
template <class F>
Mat<F> inverse(Mat<F> a);

// Rank of the image of a GaussRat matrix under a ring map into GF(p),
// p = 1 mod 4, sending i to a fixed square root of -1.  Always a lower
// bound for the exact rank; used as an exact >= certificate.
int rank_mod_p(const QMat& a, std::uint64_t p);

// In-place Gaussian elimination rank over GF(p) on a row-major buffer.
int rank_mod_p_inplace(std::vector<std::uint64_t>& m, int rows, int cols,
                       std::uint64_t p);

// sqrt(-1) mod p for p = 1 mod 4.
std::uint64_t sqrt_minus_one_mod(std::uint64_t p);

// ---------------------------------------------------------------------------
// Double-precision complex helpers for the numeric character machinery.

using cplx = std::complex<double>;

class CMat {
 public:
  CMat() : r_(0), c_(0) {}
  CMat(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<size_t>(rows) * cols) {}
  int rows() const { return r_; }
  int cols() const { return c_; }
  cplx& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const cplx& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }
  CMat operator*(const CMat& o) const;
  CMat adjoint() const;
  cplx trace() const;

 private:
  int r_, c_;
  std::vector<cplx> d_;
};

// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations.  Returns ascending eigenvalues; the columns of `vectors` form
// the corresponding orthonormal eigenbasis.
struct HermitianEigen {
  std::vector<double> values;
  CMat vectors;
};
HermitianEigen hermitian_eigen(CMat a);

}  // namespace ftqft
