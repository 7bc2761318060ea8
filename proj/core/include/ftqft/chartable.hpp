#pragma once

#include <vector>

#include "ftqft/cochain.hpp"
#include "ftqft/cyclotomic.hpp"
#include "ftqft/group.hpp"
#include "ftqft/version.hpp"

namespace ftqft {

// Character table of a finite group.  Entries are exact cyclotomics in
// Q(zeta_m), m the group exponent; rows are ordered by degree and then
// lexicographically by class values.
struct CharacterTable {
  GroupPtr group;
  ConjClasses classes;
  long conductor = 1;
  std::vector<int> degrees;
  std::vector<std::vector<Cyclotomic>> chi;  // [irrep][class]
  unsigned long long seed = 0;

  int irreps() const { return static_cast<int>(degrees.size()); }
  // chi of an arbitrary element.
  const Cyclotomic& value(int irrep, int element) const {
    return chi[irrep][classes.class_of[element]];
  }
};

CharacterTable character_table(const GroupPtr& g,
                               unsigned long long seed = kDefaultSeed,
                               int max_order = 512);

// Projective (theta-twisted) character table.  The characters are those of
// the simple modules of the twisted group algebra C_theta[H], computed with
// respect to the given cocycle representative after edge normalization.
// They are class functions only on theta-regular classes, but the
// per-element values are retained for downstream use.
struct ProjectiveCharacterTable {
  GroupPtr group;
  Cochain cocycle;               // the normalized 2-cocycle actually used
  Rat normalization_shift;       // theta_input - shift = normalized theta
  ConjClasses classes;
  std::vector<char> regular;     // theta-regularity per class
  long conductor = 1;
  std::vector<int> degrees;
  std::vector<std::vector<Cyclotomic>> chi_class;  // [irrep][class] at class rep
  std::vector<std::vector<Cyclotomic>> chi_elem;   // [irrep][element]
  unsigned long long seed = 0;

  int irreps() const { return static_cast<int>(degrees.size()); }
  int regular_class_count() const;
};

ProjectiveCharacterTable projective_character_table(
    const GroupPtr& h, const Cochain& theta,
    unsigned long long seed = kDefaultSeed, int max_order = 512);

// Exact column orthogonality: sum_i chi_i(g) conj(chi_i(h)) equals
// |centralizer(g)| when g ~ h and 0 otherwise.  Used by the test suites.
bool column_orthogonality_holds(const CharacterTable& t);
bool row_orthogonality_holds(const CharacterTable& t);

}  // namespace ftqft
