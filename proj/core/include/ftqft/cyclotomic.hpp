#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ftqft/rational.hpp"

namespace ftqft {

// Exact element of a cyclotomic field Q(zeta_m).  Stored in the power basis
// 1, z, ..., z^{phi(m)-1} after reduction mod the m-th cyclotomic polynomial,
// so equality is coefficient-wise.  Elements of different conductors are
// lifted to the lcm conductor on demand; purely rational results collapse
// back to conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_{Rat(0)} {}
  explicit Cyclotomic(const Rat& q) : m_(1), c_{q} {}
  explicit Cyclotomic(long n) : m_(1), c_{Rat(n)} {}

  // e^{2 pi i q} for rational q: an exact root of unity.
  static Cyclotomic root_of_unity(const Rat& q);
  static Cyclotomic zeta(long m, long k = 1);

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws Error if not rational.
  Rat as_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scaled(const Rat& q) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Complex conjugate (zeta -> zeta^{m-1}).
  Cyclotomic conj() const;
  // Multiplicative inverse; throws Error on zero.
  Cyclotomic inverse() const;

  Cyclotomic real_part() const;   // (z + conj z)/2
  Cyclotomic imag_part() const;   // (z - conj z)/(2i), a real cyclotomic
  Cyclotomic norm() const { return *this * conj(); }

  std::complex<double> to_complex() const;

  // Canonical string, e.g. "1/2 - 3*z8 + z8^3".  Deterministic.
  std::string str() const;

 private:
  long m_;
  std::vector<Rat> c_;

  Cyclotomic(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  Cyclotomic lifted(long big_m) const;
  void collapse();

  friend Cyclotomic cyclo_from_poly(long m, std::vector<Rat> poly);
};

// Builds an element from an arbitrary-degree polynomial in zeta_m (reduces
// mod Phi_m).
Cyclotomic cyclo_from_poly(long m, std::vector<Rat> poly);

// Deterministic total order used for canonical sorting of character values:
// compares numerically first, with an exact coefficient-wise tiebreak.
bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b);

// m-th cyclotomic polynomial as integer coefficients (degree phi(m)),
// cached internally.
const std::vector<Int>& cyclotomic_polynomial(long m);

long euler_phi(long m);

}  // namespace ftqft
