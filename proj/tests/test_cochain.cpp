#include "doctest.h"

#include "ftqft/chartable.hpp"
#include "ftqft/cochain.hpp"
#include "ftqft/group.hpp"

using namespace ftqft;

TEST_CASE("coboundary of the zero cochain is zero") {
  auto g = symmetric_group(3);
  Cochain zero(g, 2);
  CHECK(coboundary(zero).is_zero());
}

TEST_CASE("delta o delta = 0 on random cochains of S3, degrees 1..3") {
  auto g = symmetric_group(3);
  for (int degree = 1; degree <= 3; ++degree) {
    Cochain c = random_cochain(g, degree, 12, 1000 + degree);
    Cochain dd = coboundary(coboundary(c));
    CHECK(dd.is_zero());
  }
}

TEST_CASE("delta^2 = 0 exhaustively for the small corpus") {
  for (const auto& g : {cyclic_group(4), klein_four_group(), dihedral_group(3),
                        quaternion_group(), alternating_group(4), dihedral_group(6),
                        symmetric_group(4)}) {
    Cochain c = random_cochain(g, 2, 8, g->order());
    CHECK(coboundary(coboundary(c)).is_zero());
  }
}

TEST_CASE("Z/4 bilinear 2-cochain coboundary matches the standard 3-pattern") {
  // beta(a,b) = (p/n^2) a b with n = 4, p = 1; delta(beta) evaluated on all
  // 64 triples equals the alternating-sum pattern computed directly.
  const int n = 4;
  auto zn = cyclic_group(n);
  Cochain beta(zn, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) beta.set({a, b}, Rat(a * b, n * n));
  Cochain d = coboundary(beta);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Rat expected = mod1(Rat(b * c, n * n) - Rat(((a + b) % n) * c, n * n) +
                            Rat(a * ((b + c) % n), n * n) - Rat(a * b, n * n));
        CHECK(d({a, b, c}) == expected);
      }
}

TEST_CASE("standard cyclic 3-cocycles are closed") {
  for (int n : {2, 3, 4}) {
    auto zn = cyclic_group(n);
    for (long p = 0; p < n; ++p) {
      Cochain w = cyclic_3cocycle(zn, p);
      CHECK(is_cocycle(w).ok);
    }
  }
}

TEST_CASE("a non-closed 3-cochain is rejected with a witness") {
  auto z2 = cyclic_group(2);
  Cochain c(z2, 3);
  c.set({1, 1, 1}, Rat(1, 3));
  auto check = is_cocycle(c);
  CHECK_FALSE(check.ok);
  CHECK(check.witness.size() == 4);
  // The witness is the lexicographically first violating tuple.
  Cochain d = coboundary(c);
  std::vector<int> t = check.witness;
  CHECK(d(t) != 0);
}

TEST_CASE("transgression of the zero cocycle is zero") {
  auto g = symmetric_group(3);
  Cochain zero(g, 3);
  for (int x = 0; x < g->order(); ++x) {
    auto res = transgress(zero, x);
    CHECK(res.theta.is_zero());
  }
}

TEST_CASE("transgression at the identity vanishes for normalized cocycles") {
  auto z4 = cyclic_group(4);
  Cochain w = cyclic_3cocycle(z4, 1);
  CHECK(w.is_normalized());
  auto res = transgress(w, z4->identity());
  CHECK(res.theta.is_zero());
}

TEST_CASE("transgression of the Z/4 generator cocycle") {
  auto z4 = cyclic_group(4);
  Cochain w = cyclic_3cocycle(z4, 1);
  auto res = transgress(w, 1);
  CHECK(res.centralizer.order() == 4);  // abelian
  CHECK(is_cocycle(res.theta).ok);
  // Record its coboundary class: on Z/4 every 2-cocycle in Q/Z coefficients
  // is a coboundary; find the cobounding 1-cochain by the cyclic solve.
  const int n = 4;
  // mu(g^{k+1}) = mu(g^k) + mu(g) - theta(g, g^k) with n mu(g) = sum theta.
  Rat total(0);
  for (int k = 0; k < n; ++k) total += res.theta({1, k});
  // Solve n * mu1 = sum_k theta(1, g^k) in Q/Z; take mu1 = total / n.
  Rat mu1 = total / n;
  std::vector<Rat> mu(n, Rat(0));
  mu[1] = mu1;
  for (int k = 1; k + 1 < n; ++k)
    mu[(k + 1) % n] = mod1(mu[k] + mu[1] - res.theta({1, k}));
  Cochain mu_c(res.centralizer.as_group(), 1);
  for (int k = 0; k < n; ++k) mu_c.set({k}, mu[k]);
  CHECK(coboundary(mu_c) == res.theta);
}

TEST_CASE("transgressed cocycles at conjugate elements give equal degree multisets") {
  auto g = symmetric_group(3);
  // Use a coboundary 3-cocycle so the twist is nontrivial at cochain level.
  Cochain mu = random_cochain(g, 2, 4, 5);
  Cochain w = coboundary(mu);
  REQUIRE(is_cocycle(w).ok);
  auto classes = conjugacy_classes(*g);
  for (const auto& cls : classes.classes) {
    std::multiset<std::multiset<int>> degree_multisets;
    for (int x : cls) {
      auto res = transgress(w, x);
      auto table = projective_character_table(res.centralizer.as_group(), res.theta);
      degree_multisets.insert(
          std::multiset<int>(table.degrees.begin(), table.degrees.end()));
    }
    CHECK(degree_multisets.size() == cls.size());
    // All equal:
    CHECK(std::equal(degree_multisets.begin(), std::prev(degree_multisets.end()),
                     std::next(degree_multisets.begin())));
  }
}

TEST_CASE("transgress(delta mu, g) is a coboundary on Z(g)") {
  auto g = dihedral_group(4);
  Cochain mu = random_cochain(g, 2, 4, 17);
  Cochain w = coboundary(mu);
  for (int x : {0, 1, g->order() - 1}) {
    auto res = transgress(w, x);
    REQUIRE(is_cocycle(res.theta).ok);
    // Verify it is a coboundary by a linear solve over Q/Z with denominator
    // bound: brute-force over the finite coefficient lattice would explode,
    // so solve delta(nu) = theta via the projective table instead: a twisted
    // algebra with coboundary twist has the same degree multiset as the
    // untwisted one (all regular classes).
    auto zg = res.centralizer.as_group();
    auto twisted = projective_character_table(zg, res.theta);
    auto plain = character_table(zg);
    CHECK(twisted.degrees == plain.degrees);
    CHECK(twisted.regular_class_count() == static_cast<int>(plain.classes.classes.size()));
  }
}

TEST_CASE("equivariant cochains: coboundary and restriction") {
  auto g = symmetric_group(3);
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 2) { transposition = x; break; }
  auto cosets = GSet::cosets(g, {transposition});

  // B = 0 restricts to 0.
  EquivariantCochain zero(cosets, 1);
  auto r0 = restrict_equivariant(zero, 0);
  CHECK(r0.cochain.is_zero());

  // delta^2 = 0 for equivariant cochains.
  EquivariantCochain c = random_equivariant_cochain(cosets, 1, 6, 3);
  CHECK(coboundary(coboundary(c)).is_zero());

  // Degree-2 restriction on S = pt is the identity.
  auto pt = GSet::point(g);
  EquivariantCochain b2 = random_equivariant_cochain(pt, 2, 4, 9);
  auto r2 = restrict_equivariant(b2, 0);
  CHECK(r2.stabilizer.order() == 6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(r2.cochain({x, y}) == b2(0, {x, y}));
}

TEST_CASE("degree-1 equivariant cocycle from an induced character") {
  // G = S3, H = <(12)>, sign data: induces a degree-1 equivariant cocycle on
  // G/H whose restriction to H is the nontrivial order-2 character.
  auto g = symmetric_group(3);
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 2) { transposition = x; break; }
  auto cosets = GSet::cosets(g, {transposition});
  REQUIRE(cosets->size() == 3);

  // Coset representatives: minimal element of each coset.
  std::vector<int> reps(3, -1);
  for (int s = 0; s < 3; ++s)
    for (int x = 0; x < 6; ++x)
      if (cosets->act(x, /*base=*/0) == s && reps[s] < 0) {
        // x maps base coset to s; minimal such x is the representative.
        reps[s] = x;
      }
  // chi = sign character on H = {e, transposition}: chi(t) = 1/2 in Q/Z.
  auto chi = [&](int h) { return h == transposition ? Rat(1, 2) : Rat(0); };
  EquivariantCochain b(cosets, 1);
  for (int x = 0; x < 6; ++x)
    for (int s = 0; s < 3; ++s) {
      int target = cosets->act(x, s);
      // h = r_{gs}^-1 g r_s must lie in H.
      int h = g->mul(g->inv(reps[target]), g->mul(x, reps[s]));
      REQUIRE((h == g->identity() || h == transposition));
      b.set(s, {x}, chi(h));
    }
  CHECK(is_cocycle(b).ok);
  auto res = restrict_equivariant(b, 0);
  REQUIRE(res.stabilizer.order() == 2);
  CHECK(res.cochain({0}) == Rat(0));
  CHECK(res.cochain({1}) == Rat(1, 2));  // nontrivial order-2 character
}

TEST_CASE("cohomology orders via Smith normal form") {
  // H^1(Z/n; Z/n) has order n.
  for (int n : {2, 3, 4, 6}) {
    auto d = cohomology_dimension(cyclic_group(n), 1, n);
    CHECK(d.order == n);
    for (const auto& gen : d.generators) CHECK(is_cocycle(gen).ok);
  }
  // H^3(Z/2; Z/2) has order 2.
  auto h3 = cohomology_dimension(cyclic_group(2), 3, 2);
  CHECK(h3.order == 2);
  REQUIRE(h3.generators.size() == 1);
  CHECK(is_cocycle(h3.generators[0]).ok);
  // The generator is cohomologous to the standard cyclic cocycle class:
  // both are nonzero classes in a group of order 2.
  CHECK_FALSE(h3.generators[0].is_zero());

  // H^k(trivial group; Z/m) = 0 for k >= 1.
  auto triv = FiniteGroup::from_table({{0}});
  for (int k : {1, 2, 3}) CHECK(cohomology_dimension(triv, k, 6).order == 1);

  // H^2(Z/n; Z/m): order gcd(n, m).
  CHECK(cohomology_dimension(cyclic_group(4), 2, 2).order == 2);
  CHECK(cohomology_dimension(cyclic_group(3), 2, 2).order == 1);

  // H^2(Z/2 x Z/2; Z/2) has order 8 (rank 3: two linear duals squared + pairing).
  auto v4 = product_group(cyclic_group(2), cyclic_group(2));
  CHECK(cohomology_dimension(v4, 2, 2).order == 8);

  CHECK_THROWS_AS(cohomology_dimension(symmetric_group(4), 3, 2), SizeExceeded);
}

TEST_CASE("all cochain values stay exact rationals in [0,1)") {
  auto g = quaternion_group();
  Cochain c = random_cochain(g, 2, 7, 2);
  Cochain d = coboundary(c);
  for (const auto& [t, v] : d.values()) {
    (void)t;
    CHECK(v >= 0);
    CHECK(v < 1);
  }
}
