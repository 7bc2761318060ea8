#pragma once

#include <vector>

#include "ftqft/group.hpp"
#include "ftqft/rational.hpp"

namespace ftqft {

// Groupoid of fields on a point: objects are the points of S, the
// automorphism group of s is its stabilizer.
struct PointGroupoid {
  GSetPtr gset;
  std::vector<std::vector<int>> classes;  // orbits, canonical order
  std::vector<int> aut_order;             // per class (= |stabilizer|)
};

PointGroupoid fields_on_point(const GSetPtr& s);

// Groupoid of fields on the circle: objects (s, g) with g.s = s; the
// morphism h sends (s,g) to (h.s, h g h^-1).
struct CircleGroupoid {
  GSetPtr gset;
  std::vector<std::pair<int, int>> objects;  // (s, g), lexicographic
  std::vector<std::vector<int>> classes;     // indices into objects
  std::vector<int> aut_order;                // per class
  int object_index(int s, int g) const;
};

CircleGroupoid fields_on_circle(const GSetPtr& s);

// A field on a closed oriented genus-g surface: holonomies satisfying the
// surface relation, plus a section point fixed by all of them.
struct SurfaceField {
  std::vector<int> holonomies;  // a1, b1, ..., ag, bg
  int section;
};

struct SurfaceFields {
  GSetPtr gset;
  int genus = 0;
  std::vector<SurfaceField> fields;       // lexicographic (holonomies, s)
  std::vector<std::vector<int>> classes;  // indices into fields
  std::vector<int> aut_order;             // per class
};

SurfaceFields fields_on_surface(const GSetPtr& s, int genus,
                                unsigned long long max_work = 100000000ULL);

// pi_1 presentation: relators are signed, 1-based generator indices
// (negative = inverse), as in the presentation file format.
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

struct PresentedField {
  std::vector<int> holonomies;
  int section;
};

struct PresentedFields {
  GSetPtr gset;
  Presentation presentation;
  std::vector<PresentedField> fields;
  std::vector<std::vector<int>> classes;
  std::vector<int> aut_order;
};

PresentedFields fields_on_presented_manifold(const GSetPtr& s, const Presentation& p,
                                             unsigned long long max_work = 100000000ULL);

// Counting measure 1/#Aut as an exact rational.
inline Rat counting_measure(int aut_order) { return Rat(1, aut_order); }

// Number of 2g-tuples in H satisfying the surface relation, computed by
// convolving the commutator-count class function; exact.
Int surface_solution_count(const FiniteGroup& h, int genus);
// Same, restricted to tuples whose entries all fix s (H = stabilizer).
Int surface_solution_count_at_point(const GSet& s, int point, int genus);

// |Hom(pi_1, G)| with a compatible section: brute-force relator check.
Int presented_solution_count(const GSet& s, const Presentation& p,
                             unsigned long long max_work = 100000000ULL);

// Evaluates a relator word on a tuple of holonomies.
int evaluate_word(const FiniteGroup& g, const std::vector<int>& word,
                  const std::vector<int>& holonomies);

}  // namespace ftqft
