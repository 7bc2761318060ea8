#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ftqft/errors.hpp"

namespace ftqft {

// A finite group given by its full multiplication table.  Elements are the
// indices 0..order-1; the table is validated on construction.  Immutable.
class FiniteGroup {
 public:
  // Validates Latin-square property, identity and associativity; throws
  // NotAGroup with the offending triple otherwise.  Associativity is checked
  // exhaustively up to order 512 and on a deterministic sample beyond.
  static std::shared_ptr<const FiniteGroup> from_table(
      std::vector<std::vector<int>> table, std::vector<std::string> names = {});

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;

  const std::vector<std::string>& names() const { return names_; }
  std::string name_of(int a) const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite G-set: action[g][s] validated against the group axioms.
class GSet {
 public:
  static std::shared_ptr<const GSet> make(GroupPtr group,
                                          std::vector<std::vector<int>> action);
  // The one-point set with trivial action.
  static std::shared_ptr<const GSet> point(GroupPtr group);
  // G acting on itself by left translation.
  static std::shared_ptr<const GSet> regular(GroupPtr group);
  // G acting on itself by conjugation.
  static std::shared_ptr<const GSet> conjugation(GroupPtr group);
  // Left cosets of the subgroup generated by `subgroup_elements`.
  static std::shared_ptr<const GSet> cosets(GroupPtr group,
                                            const std::vector<int>& subgroup_elements);

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int g, int s) const { return action_[static_cast<size_t>(g) * size_ + s]; }

  std::vector<int> stabilizer(int s) const;
  std::vector<int> orbit_of(int s) const;
  std::vector<std::vector<int>> orbits() const;

 private:
  GSet() = default;
  GroupPtr group_;
  int size_ = 0;
  std::vector<int> action_;
};

using GSetPtr = std::shared_ptr<const GSet>;

// Subgroup as a sorted element list, closed under product and inverse.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, contains identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  // Index of a parent element inside `elements`, -1 if absent.
  int position_of(int g) const;
  // The subgroup as an abstract FiniteGroup; element i is elements[i].
  GroupPtr as_group() const;
};

Subgroup subgroup_closure(GroupPtr g, std::vector<int> generators);

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // sorted members, sorted by rep
  std::vector<int> rep;                   // canonical (minimal) representative
  std::vector<int> class_of;              // element -> class index
};

ConjClasses conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(GroupPtr g, int element);
Subgroup center(GroupPtr g);

// All subgroups found by closing generator tuples of length <= 3 (complete
// for every group this library targets, in particular all subgroups of S4).
// Sorted by (order, element list).
std::vector<Subgroup> all_subgroups(GroupPtr g);

// Permutations ----------------------------------------------------------

using Permutation = std::vector<int>;  // images of 0..m-1

struct PermutationGroup {
  GroupPtr group;
  GSetPtr natural_gset;                  // action on {0..m-1}
  std::vector<Permutation> elements;    // lexicographically sorted
};

// Closes the generators under composition.  Throws NotAPermutation or
// GroupTooLarge (closure bound, default 10^6).
PermutationGroup group_from_permutations(const std::vector<Permutation>& generators,
                                         int degree, long max_order = 1000000);

// Standard construction helpers ------------------------------------------

GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);     // order 2n
GroupPtr symmetric_group(int n);    // order n!
GroupPtr alternating_group(int n);  // order n!/2
GroupPtr quaternion_group();        // Q8
GroupPtr klein_four_group();
GroupPtr product_group(GroupPtr a, GroupPtr b);

}  // namespace ftqft
