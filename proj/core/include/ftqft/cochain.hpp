#pragma once

#include <map>
#include <vector>

#include "ftqft/group.hpp"
#include "ftqft/rational.hpp"

namespace ftqft {

// Bar-resolution group cochain with values in Q/Z (value q stands for the
// angle 2*pi*q in R/2piZ).  Entries are stored sparsely with reduced
// representatives in [0,1); omitted tuples are zero.
class Cochain {
 public:
  Cochain(GroupPtr group, int degree)
      : group_(std::move(group)), degree_(degree) {}

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }

  Rat operator()(const std::vector<int>& tuple) const;
  void set(const std::vector<int>& tuple, const Rat& value);
  const std::map<std::vector<int>, Rat>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  // True when the value vanishes whenever any argument is the identity.
  bool is_normalized() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-() const;
  Cochain operator-(const Cochain& o) const { return *this + (-o); }
  bool operator==(const Cochain& o) const;

 private:
  GroupPtr group_;
  int degree_;
  std::map<std::vector<int>, Rat> values_;
};

// Cochain on the action groupoid S//G.  A degree-k value is indexed by a
// base point s (the source of the string; g1 acts last) and the k-tuple.
class EquivariantCochain {
 public:
  EquivariantCochain(GSetPtr gset, int degree)
      : gset_(std::move(gset)), degree_(degree) {}

  const GSetPtr& gset() const { return gset_; }
  int degree() const { return degree_; }

  Rat operator()(int s, const std::vector<int>& tuple) const;
  void set(int s, const std::vector<int>& tuple, const Rat& value);
  bool is_zero() const { return values_.empty(); }
  bool is_normalized() const;

  EquivariantCochain operator+(const EquivariantCochain& o) const;
  EquivariantCochain operator-() const;
  EquivariantCochain operator-(const EquivariantCochain& o) const { return *this + (-o); }

 private:
  GSetPtr gset_;
  int degree_;
  // key = [s, g1, ..., gk]
  std::map<std::vector<int>, Rat> values_;
};

// Standard bar-resolution coboundary, degree k -> k+1.
Cochain coboundary(const Cochain& c);
EquivariantCochain coboundary(const EquivariantCochain& c);

struct CocycleCheck {
  bool ok = false;
  std::vector<int> witness;  // first violating tuple in lexicographic order
  explicit operator bool() const { return ok; }
};

CocycleCheck is_cocycle(const Cochain& c);
CocycleCheck is_cocycle(const EquivariantCochain& c);

// The conjugation-corrected double phase theta_g(x,y) = omega(g,x,y) - omega(x, x^-1 g x, y)
//                            + omega(x, y, (xy)^-1 g (xy)),  additive in Q/Z.
// For x, y in the centralizer of g this is the transgressed 2-cocycle.
Rat double_twist_phase(const Cochain& omega, int g, int x, int y);

struct TransgressResult {
  Subgroup centralizer;  // Z(g) inside the parent
  Cochain theta;         // 2-cocycle on centralizer.as_group() indices
};

// Cochain-level transgression of a 3-cocycle at g; throws NotACocycle if the
// input is not closed.
TransgressResult transgress(const Cochain& omega, int g);

struct RestrictionResult {
  Subgroup stabilizer;
  Cochain cochain;  // on stabilizer.as_group() indices, same degree
};

// Pullback of an equivariant cochain along the inclusion of the stabilizer
// of the point s.
RestrictionResult restrict_equivariant(const EquivariantCochain& b, int s);

// Shifts a closed 3-cochain by an explicit coboundary so that every value
// with an identity argument vanishes.  Gauge move; the class is unchanged.
Cochain normalize_3cocycle(const Cochain& omega);

struct CohomologyData {
  Int order;                          // |H^k(G; Z/m)|
  std::vector<Int> invariant_factors; // cyclic decomposition, factors > 1
  std::vector<Cochain> generators;    // representative cocycles, values j/m
};

// Order and generators of H^k(G; Z/m) via Smith normal form of the bar
// coboundary matrices.  Throws SizeExceeded when |G|^(k+1) exceeds the bound.
CohomologyData cohomology_dimension(GroupPtr g, int degree, long m,
                                    long max_entries = 2000000);

// Fixtures ----------------------------------------------------------------

// The standard generator family of H^3(Z/n; Q/Z):
// omega_p(a,b,c) = (p/n^2) * a * (b + c - ((b+c) mod n)).
Cochain cyclic_3cocycle(const GroupPtr& zn, long p);

// Bilinear 2-cocycle on a product of two cyclic groups as produced by
// product_group(cyclic_group(n1), cyclic_group(n2)):
// theta((a1,a2),(b1,b2)) = coef * a1 * b2.
Cochain bilinear_2cocycle_on_product(const GroupPtr& g, int n1, int n2, const Rat& coef);

// Deterministic pseudo-random cochain with values k/denominator.
Cochain random_cochain(const GroupPtr& g, int degree, long denominator,
                       unsigned long long seed);
EquivariantCochain random_equivariant_cochain(const GSetPtr& s, int degree,
                                              long denominator,
                                              unsigned long long seed);

}  // namespace ftqft
