#include "doctest.h"

#include <numeric>

#include "ftqft/fields.hpp"
#include "ftqft/group.hpp"

using namespace ftqft;

TEST_CASE("fields on a point") {
  auto g = symmetric_group(3);

  auto pt = fields_on_point(GSet::point(g));
  CHECK(pt.classes.size() == 1);
  CHECK(pt.aut_order[0] == 6);  // Aut = G

  auto reg = fields_on_point(GSet::regular(g));
  CHECK(reg.classes.size() == 1);  // free action, one orbit
  CHECK(reg.aut_order[0] == 1);    // trivial automorphisms

  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (g->element_order(x) == 2) { transposition = x; break; }
  auto cosets = fields_on_point(GSet::cosets(g, {transposition}));
  CHECK(cosets.gset->size() == 3);
  CHECK(cosets.classes.size() == 1);
  CHECK(cosets.aut_order[0] == 2);
}

TEST_CASE("fields on the circle") {
  auto s3 = symmetric_group(3);

  // S = pt: objects = G, classes = conjugacy classes, Aut = centralizers.
  auto pt = fields_on_circle(GSet::point(s3));
  CHECK(pt.objects.size() == 6);
  REQUIRE(pt.classes.size() == 3);
  std::multiset<int> auts(pt.aut_order.begin(), pt.aut_order.end());
  CHECK(auts == std::multiset<int>{2, 3, 6});
  // Measures 1/6, 1/2, 1/3 per Eq-style counting.
  std::multiset<Rat> measures;
  for (int a : pt.aut_order) measures.insert(counting_measure(a));
  CHECK(measures == std::multiset<Rat>{Rat(1, 6), Rat(1, 2), Rat(1, 3)});

  // Z/2 acting on itself by translation: free action forces g = e.
  auto z2 = cyclic_group(2);
  auto reg = fields_on_circle(GSet::regular(z2));
  CHECK(reg.objects.size() == 2);
  CHECK(reg.classes.size() == 1);
  CHECK(reg.aut_order[0] == 1);
}

TEST_CASE("fields on surfaces") {
  auto z2 = cyclic_group(2);
  auto s3 = symmetric_group(3);

  // genus 0 reduces to fields on a point.
  auto sphere = fields_on_surface(GSet::point(s3), 0);
  CHECK(sphere.fields.size() == 1);
  CHECK(sphere.aut_order[0] == 6);

  // Z/2 pure gauge genus 1: 4 commuting pairs, each its own class, Aut = Z/2.
  auto t2 = fields_on_surface(GSet::point(z2), 1);
  CHECK(t2.fields.size() == 4);
  CHECK(t2.classes.size() == 4);
  for (int a : t2.aut_order) CHECK(a == 2);
  CHECK(counting_measure(t2.aut_order[0]) == Rat(1, 2));

  // S3 pure gauge genus 1: 18 commuting pairs = sum of centralizer orders.
  auto s3t2 = fields_on_surface(GSet::point(s3), 1);
  CHECK(s3t2.fields.size() == 18);

  // Work bound triggers.
  CHECK_THROWS_AS(fields_on_surface(GSet::point(symmetric_group(4)), 3, 1000),
                  SizeExceeded);
}

TEST_CASE("fields on presented manifolds") {
  // T^3: three commuting generators.
  Presentation t3;
  t3.generators = 3;
  t3.relators = {{1, 2, -1, -2}, {1, 3, -1, -3}, {2, 3, -2, -3}};

  auto z2 = cyclic_group(2);
  auto f2 = fields_on_presented_manifold(GSet::point(z2), t3);
  CHECK(f2.fields.size() == 8);  // abelian target: all 8 triples

  auto s3 = symmetric_group(3);
  auto f3 = fields_on_presented_manifold(GSet::point(s3), t3);
  CHECK(f3.fields.size() == 48);  // pairwise-commuting triples in S3
  CHECK(presented_solution_count(*GSet::point(s3), t3) == 48);

  // Empty presentation (pi_1 = 1): sections only.
  Presentation trivial;
  trivial.generators = 0;
  auto reg = fields_on_presented_manifold(GSet::regular(s3), trivial);
  CHECK(reg.fields.size() == 6);  // |S|
}

TEST_CASE("counting measure is constant on classes and Burnside-consistent") {
  for (const auto& g : {cyclic_group(4), symmetric_group(3), quaternion_group(),
                        alternating_group(4), dihedral_group(6), symmetric_group(4)}) {
    for (int genus : {1, 2}) {
      if (g->order() > 8 && genus == 2) continue;
      auto f = fields_on_surface(GSet::point(g), genus);
      // sum over classes of |class|/|Aut| = #objects (orbit-stabilizer), so
      // sum over classes 1/|Aut| = #objects / |G|.
      Rat lhs(0);
      for (size_t c = 0; c < f.classes.size(); ++c)
        lhs += counting_measure(f.aut_order[c]);
      CHECK(lhs == Rat(static_cast<long>(f.fields.size()), g->order()));
      // orbit-stabilizer per class
      for (size_t c = 0; c < f.classes.size(); ++c)
        CHECK(static_cast<long>(f.classes[c].size()) * f.aut_order[c] == g->order());
    }
  }
}

TEST_CASE("genus-1 fields are exactly the commuting pairs with fixed sections") {
  auto g = dihedral_group(3);
  auto s = GSet::cosets(g, {3});  // some coset space
  auto f = fields_on_surface(s, 1);
  long expected = 0;
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) {
      if (g->mul(a, b) != g->mul(b, a)) continue;
      for (int x = 0; x < s->size(); ++x)
        if (s->act(a, x) == x && s->act(b, x) == x) ++expected;
    }
  CHECK(static_cast<long>(f.fields.size()) == expected);
}

TEST_CASE("surface solution counts by convolution match enumeration") {
  for (const auto& g : {cyclic_group(3), symmetric_group(3), quaternion_group()}) {
    for (int genus : {1, 2}) {
      auto f = fields_on_surface(GSet::point(g), genus);
      CHECK(surface_solution_count(*g, genus) ==
            Int(static_cast<long>(f.fields.size())));
    }
  }
  // S3 genus 2: 486 solutions -> Z = 81 after dividing by |G|.
  CHECK(surface_solution_count(*symmetric_group(3), 2) == 486);
}

TEST_CASE("class data is stable under element relabeling") {
  auto g = symmetric_group(3);
  auto f1 = fields_on_surface(GSet::point(g), 1);
  // Relabel through an inner automorphism and recompute.
  for (int x : {1, 3}) {
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    std::vector<int> phi(6), inv_phi(6);
    for (int a = 0; a < 6; ++a) phi[a] = g->conj(x, a);
    for (int a = 0; a < 6; ++a) inv_phi[phi[a]] = a;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) table[a][b] = phi[g->mul(inv_phi[a], inv_phi[b])];
    auto g2 = FiniteGroup::from_table(table);
    auto f2 = fields_on_surface(GSet::point(g2), 1);
    CHECK(f1.classes.size() == f2.classes.size());
    std::multiset<int> a1(f1.aut_order.begin(), f1.aut_order.end());
    std::multiset<int> a2(f2.aut_order.begin(), f2.aut_order.end());
    CHECK(a1 == a2);
  }
}
