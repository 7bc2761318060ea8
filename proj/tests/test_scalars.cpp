#include "doctest.h"

#include <cmath>
#include <random>

#include "ftqft/cyclotomic.hpp"
#include "ftqft/linalg.hpp"
#include "ftqft/rational.hpp"
#include "ftqft/smith.hpp"

using namespace ftqft;

TEST_CASE("mod1 reduces to [0,1)") {
  CHECK(mod1(Rat(7, 3)) == Rat(1, 3));
  CHECK(mod1(Rat(-1, 4)) == Rat(3, 4));
  CHECK(mod1(Rat(5)) == Rat(0));
}

TEST_CASE("cyclotomic polynomial degrees and values") {
  CHECK(cyclotomic_polynomial(1).size() == 2);   // x - 1
  CHECK(cyclotomic_polynomial(4).size() == 3);   // x^2 + 1
  CHECK(cyclotomic_polynomial(8).size() == 5);   // x^4 + 1
  CHECK(euler_phi(12) == 4);
  const auto& p12 = cyclotomic_polynomial(12);   // x^4 - x^2 + 1
  CHECK(p12[0] == 1);
  CHECK(p12[2] == -1);
  CHECK(p12[4] == 1);
}

TEST_CASE("roots of unity multiply by adding angles") {
  auto a = Cyclotomic::root_of_unity(Rat(1, 8));
  auto b = Cyclotomic::root_of_unity(Rat(3, 8));
  CHECK(a * b == Cyclotomic::root_of_unity(Rat(1, 2)));
  CHECK(a * b == Cyclotomic(Rat(-1)));
  auto z3 = Cyclotomic::zeta(3);
  Cyclotomic sum = Cyclotomic(Rat(1)) + z3 + z3 * z3;
  CHECK(sum.is_zero());
}

TEST_CASE("cyclotomic mixed-conductor arithmetic and inverse") {
  auto z4 = Cyclotomic::zeta(4);
  auto z3 = Cyclotomic::zeta(3);
  auto prod = z4 * z3;
  CHECK(prod == Cyclotomic::zeta(12, 7));  // 1/4 + 1/3 = 7/12
  auto x = Cyclotomic(Rat(2)) + z3;
  auto inv = x.inverse();
  CHECK(x * inv == Cyclotomic(Rat(1)));
  CHECK((z4 * z4) == Cyclotomic(Rat(-1)));
  CHECK(z4.conj() == Cyclotomic::zeta(4, 3));
  // |z|^2 of a root of unity is 1.
  CHECK(z3.norm() == Cyclotomic(Rat(1)));
}

TEST_CASE("real and imaginary parts are exact") {
  auto z8 = Cyclotomic::zeta(8);
  auto re = z8.real_part();
  auto im = z8.imag_part();
  // re + i*im reconstructs z8
  auto i = Cyclotomic::zeta(4);
  CHECK(re + i * im == z8);
  CHECK(re.conj() == re);
  CHECK(im.conj() == im);
  auto val = re.to_complex();
  CHECK(std::abs(val.real() - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(val.imag()) < 1e-12);
}

TEST_CASE("cyclotomic string forms are canonical") {
  CHECK(Cyclotomic(Rat(0)).str() == "0");
  CHECK(Cyclotomic(Rat(-3, 2)).str() == "-3/2");
  auto z5 = Cyclotomic::zeta(5);
  CHECK((z5 + z5).str() == "2*z5");
  CHECK((Cyclotomic(Rat(1)) - z5).str() == "1 - z5");
}

TEST_CASE("gaussian rational field ops") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(Rat(-1)));
  GaussRat x(Rat(3, 2), Rat(-1, 3));
  GaussRat y = x / x;
  CHECK(y == GaussRat(Rat(1)));
}

TEST_CASE("exact rank, kernel and inverse") {
  QMat a(3, 4);
  // rows: [1 2 3 4], [2 4 6 8], [0 1 1 0]
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) a(r, c) = GaussRat(Rat(vals[r][c]));
  CHECK(rank_exact(a) == 2);
  QMat k = kernel_basis(a);
  CHECK(k.cols() == 2);
  // a * k == 0
  CHECK((a * k).is_zero());

  QMat m(2, 2);
  m(0, 0) = GaussRat(Rat(1));
  m(0, 1) = GaussRat::i();
  m(1, 0) = GaussRat(Rat(0));
  m(1, 1) = GaussRat(Rat(2));
  QMat inv = inverse(m);
  QMat prod = m * inv;
  CHECK(prod == QMat::identity(2));
}

TEST_CASE("mod-p rank certificate agrees with exact rank") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    QMat a(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        a(i, j) = GaussRat(Rat(static_cast<long>(rng() % 7) - 3),
                           Rat(static_cast<long>(rng() % 7) - 3));
    // introduce rank deficiency: row 5 = row 0 + row 1
    for (int j = 0; j < 6; ++j) a(5, j) = a(0, j) + a(1, j);
    int exact = rank_exact(a);
    int modp = rank_mod_p(a, 2147483629ULL);
    CHECK(modp == exact);
  }
}

TEST_CASE("hermitian jacobi eigensolver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1, 1);
  const int n = 12;
  CMat h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = unif(rng);
    for (int j = i + 1; j < n; ++j) {
      cplx v(unif(rng), unif(rng));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  auto eig = hermitian_eigen(h);
  // Residual ||H v - lambda v||
  for (int k = 0; k < n; ++k) {
    double res = 0;
    for (int i = 0; i < n; ++i) {
      cplx acc(0, 0);
      for (int j = 0; j < n; ++j) acc += h(i, j) * eig.vectors(j, k);
      acc -= eig.values[k] * eig.vectors(i, k);
      res += std::norm(acc);
    }
    CHECK(std::sqrt(res) < 1e-9);
  }
  // Orthonormality
  CMat gram = eig.vectors.adjoint() * eig.vectors;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(std::abs(gram(i, j) - (i == j ? cplx(1, 0) : cplx(0, 0))) < 1e-10);
}

TEST_CASE("smith normal form") {
  ZMat a(3, 3);
  int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = vals[i][j];
  auto s = smith_normal_form(a);
  // d1 = gcd of entries, d1*d2 = gcd of 2x2 minors, d1*d2*d3 = det.
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 2);
  CHECK(s.diag[2] == 156);
  // U A V = D and the tracked inverses really invert.
  ZMat uav = s.u * a * s.v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(uav(i, j) == (i == j ? s.diag[i] : Int(0)));
  ZMat uu = s.u * s.u_inv;
  ZMat vv = s.v * s.v_inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(uu(i, j) == (i == j ? 1 : 0));
      CHECK(vv(i, j) == (i == j ? 1 : 0));
    }
}
