#include "ftqft/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ftqft/errors.hpp"

namespace ftqft {

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Quotient of integer polynomials, exact (remainder must vanish).
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (long i = static_cast<long>(num.size()) - 1;
       i >= static_cast<long>(den.size()) - 1; --i) {
    Int coef = num[i] / den.back();
    q[i - den.size() + 1] = coef;
    for (size_t j = 0; j < den.size(); ++j)
      num[i - den.size() + 1 + j] -= coef * den[j];
  }
  return q;
}

std::map<long, std::vector<Int>>& phi_cache() {
  static std::map<long, std::vector<Int>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto& cache = phi_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // x^m - 1 divided by all proper cyclotomic factors.
  std::vector<Int> poly(m + 1, Int(0));
  poly[0] = -1;
  poly[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto jt = cache.find(d);
    if (jt == cache.end()) {
      // Recurse without re-locking: compute divisors in increasing order.
      std::vector<Int> sub(d + 1, Int(0));
      sub[0] = -1;
      sub[d] = 1;
      for (long e = 1; e < d; ++e)
        if (d % e == 0) sub = poly_div_exact(std::move(sub), cache.at(e));
      jt = cache.emplace(d, std::move(sub)).first;
    }
    poly = poly_div_exact(std::move(poly), jt->second);
  }
  return cache.emplace(m, std::move(poly)).first->second;
}

namespace {

// Reduce a rational polynomial in zeta_m mod Phi_m, producing exactly
// phi(m) coefficients.
std::vector<Rat> reduce_mod_phi(long m, std::vector<Rat> poly) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;  // = euler_phi(m)
  for (long i = static_cast<long>(poly.size()) - 1; i >= static_cast<long>(deg); --i) {
    Rat coef = poly[i];  // phi is monic
    if (coef != 0) {
      for (size_t j = 0; j < phi.size(); ++j)
        poly[i - deg + j] -= coef * Rat(phi[j]);
    }
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

Cyclotomic cyclo_from_poly(long m, std::vector<Rat> poly) {
  Cyclotomic z(m, reduce_mod_phi(m, std::move(poly)));
  z.collapse();
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(const Rat& q) {
  Rat r = mod1(q);
  long den = to_long(denominator(r));
  long num = to_long(numerator(r));
  return zeta(den, num);
}

Cyclotomic Cyclotomic::zeta(long m, long k) {
  k %= m;
  if (k < 0) k += m;
  std::vector<Rat> poly(k + 1, Rat(0));
  poly[k] = 1;
  return cyclo_from_poly(m, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::as_rational() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational: " + str());
  return c_[0];
}

void Cyclotomic::collapse() {
  if (m_ != 1 && is_rational()) {
    Rat r = c_[0];
    m_ = 1;
    c_.assign(1, r);
  }
}

Cyclotomic Cyclotomic::lifted(long big_m) const {
  if (big_m == m_) return *this;
  long step = big_m / m_;
  std::vector<Rat> poly(static_cast<size_t>((c_.size() - 1) * step + 1), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  return Cyclotomic(big_m, reduce_mod_phi(big_m, std::move(poly)));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.collapse();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rat& q) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= q;
  r.collapse();
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (m_ == 1) return o.scaled(c_[0]);
  if (o.m_ == 1) return scaled(o.c_[0]);
  long m = std::lcm(m_, o.m_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  Cyclotomic r(m, reduce_mod_phi(m, std::move(prod)));
  r.collapse();
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = std::lcm(m_, o.m_);
  return lifted(m).c_ == o.lifted(m).c_;
}

Cyclotomic Cyclotomic::conj() const {
  if (m_ == 1) return *this;
  std::vector<Rat> poly(static_cast<size_t>(m_), Rat(0));
  poly[0] = c_[0];
  for (size_t j = 1; j < c_.size(); ++j) poly[m_ - j] = c_[j];
  Cyclotomic r(m_, reduce_mod_phi(m_, std::move(poly)));
  r.collapse();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero cyclotomic");
  if (m_ == 1) return Cyclotomic(Rat(1) / c_[0]);
  // Extended Euclid in Q[x]: a*f + b*Phi = 1 with f = this.
  const auto& phi_int = cyclotomic_polynomial(m_);
  std::vector<Rat> r0(phi_int.size());
  for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of f

  auto degree = [](const std::vector<Rat>& p) { return static_cast<long>(p.size()) - 1; };
  while (degree(r1) > 0) {
    // r0 = q*r1 + r2
    std::vector<Rat> q(degree(r0) - degree(r1) + 1, Rat(0));
    std::vector<Rat> rem = r0;
    for (long i = degree(rem); i >= degree(r1); --i) {
      Rat coef = rem[i] / r1.back();
      q[i - degree(r1)] = coef;
      if (coef != 0)
        for (size_t j = 0; j < r1.size(); ++j) rem[i - degree(r1) + j] -= coef * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s2 = s0 - q*s1
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0)
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    while (!s2.empty() && s2.back() == 0) s2.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw Error("cyclotomic inverse: unexpected zero remainder");
  }
  // r1 is a nonzero constant; inverse = s1 / r1[0].
  for (auto& x : s1) x /= r1[0];
  return cyclo_from_poly(m_, std::move(s1));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::real_part() const {
  return (*this + conj()).scaled(Rat(1, 2));
}

Cyclotomic Cyclotomic::imag_part() const {
  long m = std::lcm(m_, 4L);
  Cyclotomic i = Cyclotomic::zeta(m, m / 4);
  return ((*this - conj()) * i.conj()).scaled(Rat(1, 2));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925286766559;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double x = static_cast<double>(c_[j]);
    double ang = tau * static_cast<double>(j) / static_cast<double>(m_);
    acc += x * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rat coef = c_[j];
    if (first) {
      if (coef < 0) out << "-";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    Rat abs_coef = coef < 0 ? Rat(-coef) : coef;
    if (j == 0) {
      out << rat_str(abs_coef);
    } else {
      if (abs_coef != 1) out << rat_str(abs_coef) << "*";
      out << "z" << m_;
      if (j > 1) out << "^" << j;
    }
    first = false;
  }
  return out.str();
}

bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a == b) return false;
  auto za = a.to_complex(), zb = b.to_complex();
  if (std::abs(za.real() - zb.real()) > 1e-9) return za.real() < zb.real();
  if (std::abs(za.imag() - zb.imag()) > 1e-9) return za.imag() < zb.imag();
  // Distinct values numerically too close to call: any deterministic
  // tiebreak will do, canonical strings are stable.
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  return a.str() < b.str();
}

}  // namespace ftqft
