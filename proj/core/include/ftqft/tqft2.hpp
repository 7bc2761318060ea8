#pragma once

#include <string>
#include <vector>

#include "ftqft/cochain.hpp"
#include "ftqft/cyclotomic.hpp"
#include "ftqft/fields.hpp"
#include "ftqft/group.hpp"

namespace ftqft {

// ---------------------------------------------------------------------------
// One-dimensional theory: E = invariant sections of the line bundle over S
// described by a degree-1 equivariant cocycle.

struct Hilbert1d {
  int dimension = 0;
  // Per orbit: base point, stabilizer order, whether the stabilizer
  // character is trivial (contributing one dimension).
  struct OrbitLine {
    int base_point;
    int stabilizer_order;
    bool trivial_character;
  };
  std::vector<OrbitLine> orbits;
};

Hilbert1d hilbert_1d(const EquivariantCochain& b1);

struct ZCircle1d {
  // Measured value: sum over classes of fields on S^1 of the holonomy phase
  // weighted by 1/#Aut.  Equals dim E.
  Cyclotomic measured;
  // The un-measured display sum over stabilizer elements (per orbit, summed):
  // #H for a trivial character and 0 otherwise.
  Cyclotomic display;
};

ZCircle1d z_circle_1d(const EquivariantCochain& b1);

// ---------------------------------------------------------------------------
// Two-dimensional theory.

// Hermitian line bundle over the groupoid of fields on S^1 determined by a
// degree-2 equivariant cocycle B: morphism h acts on the fiber at (s,g) by
// the loop-transgressed phase  B(h, g; s) - B(h g h^-1, h; s).
struct LineBundleData {
  CircleGroupoid base;
  EquivariantCochain b;  // the defining 2-cochain

  Rat phase(int h, int object) const;
  // Checks the composition law phase(h2 h1; x) = phase(h2; h1 x) + phase(h1; x)
  // exhaustively; true for any closed B.
  bool phases_compose() const;
};

LineBundleData loop_line_bundle(const EquivariantCochain& b2);

struct HilbertSpaceDescr {
  int dimension = 0;
  std::vector<std::string> basis_labels;
  long conductor = 1;
};

// E(S^1) with its pair-of-pants product: basis indexed by the equivalence
// classes of loops (s,g) whose automorphism group acts trivially on the
// line.  Scalars are exact cyclotomics.
class FrobeniusAlgebra {
 public:
  struct LoopClass {
    int base_object;                                // index into loops.objects
    int section, holonomy;                          // the canonical (s, g)
    int orbit_size = 0;
    int aut_order = 0;
    bool regular = false;
    std::vector<std::pair<int, Rat>> member_phase;  // object -> transport phase
  };

  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<LoopClass>& loop_classes() const { return classes_; }
  const std::vector<int>& basis() const { return basis_; }
  const CircleGroupoid& loops() const { return loops_; }

  const std::vector<Cyclotomic>& unit() const { return unit_; }
  const std::vector<Cyclotomic>& counit() const { return counit_; }
  const std::vector<std::vector<Cyclotomic>>& pairing() const { return pairing_; }
  const Cyclotomic& structure_constant(int i, int j, int k) const { return c_[i][j][k]; }

  std::vector<Cyclotomic> multiply(const std::vector<Cyclotomic>& x,
                                   const std::vector<Cyclotomic>& y) const;
  Cyclotomic eps(const std::vector<Cyclotomic>& x) const;

  // Handle element sum_ij eta^{ij} e_i e_j; throws SingularPairing.
  std::vector<Cyclotomic> handle_element() const;
  std::vector<std::vector<Cyclotomic>> pairing_inverse() const;

  HilbertSpaceDescr descriptor() const;

  friend FrobeniusAlgebra frobenius_algebra(const EquivariantCochain& b2);

 private:
  GSetPtr gset_;
  CircleGroupoid loops_;
  std::vector<LoopClass> classes_;
  std::vector<int> basis_;  // indices of regular classes
  std::vector<std::vector<std::vector<Cyclotomic>>> c_;
  std::vector<Cyclotomic> unit_, counit_;
  std::vector<std::vector<Cyclotomic>> pairing_;
};

// Builds E(S^1) for the theory (G, S, B); B may be the zero cochain.
// Throws NotACocycle if B is not closed.
FrobeniusAlgebra frobenius_algebra(const EquivariantCochain& b2);
FrobeniusAlgebra frobenius_algebra(const GSetPtr& s);  // B = 0

// Z(Sigma_genus) = eps(h^genus) through the algebra.
Cyclotomic z_surface_algebra(const FrobeniusAlgebra& f, int genus);

// Z(Sigma_genus) as the weighted sum over field classes (Eq.-style counting
// measure).  For B = 0 any genus within the work bound; for twisted B only
// genus <= 1 (the action phase on a commuting pair needs no fundamental
// cycle there).  Throws UnsupportedTwistedGenus beyond.
Cyclotomic z_surface_direct(const GSetPtr& s, const EquivariantCochain* b2, int genus,
                            unsigned long long max_work = 100000000ULL);

// Verifies the gluing law: Z(Sigma_{g1+g2}) computed directly from the
// algebra equals sum_ij eta^{ij} eps(h^{g1} e_i) eps(h^{g2} e_j).
bool gluing_check(const FrobeniusAlgebra& f, int genus1, int genus2);

}  // namespace ftqft
