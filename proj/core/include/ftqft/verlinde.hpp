#pragma once

#include <string>
#include <vector>

#include "ftqft/chartable.hpp"
#include "ftqft/cochain.hpp"
#include "ftqft/cyclotomic.hpp"
#include "ftqft/group.hpp"

namespace ftqft {

// Simple object of the omega-twisted Drinfeld double: a conjugacy class
// together with a projective irreducible of its centralizer, twisted by the
// transgressed 2-cocycle.
struct DoubleSimple {
  int class_index = 0;
  int class_rep = 0;    // canonical representative g
  int irrep = 0;        // row in the projective table of Z(g)
  int degree = 1;       // degree of the projective irreducible
  int quantum_dim = 1;  // |class| * degree
  std::string label;    // "[g]:k"
};

// Internal per-class data shared by the double computations.
struct DoubleData {
  GroupPtr group;
  Cochain omega;
  ConjClasses classes;
  std::vector<TransgressResult> transgressions;   // per class
  std::vector<ProjectiveCharacterTable> tables;   // per class
  std::vector<std::vector<int>> section;          // per class: x_g for g in G, -1 off-class
  std::vector<DoubleSimple> simples;
  std::vector<std::pair<int, int>> simple_site;   // simple -> (class, irrep)
  unsigned long long seed = 0;

  // Exact character of simple i on the double basis element (delta_g (x) y);
  // zero unless g lies in the simple's class and y centralizes g.
  Cyclotomic dchar(int simple, int g, int y) const;
};

DoubleData build_double(const GroupPtr& g, const Cochain& omega,
                        unsigned long long seed = kDefaultSeed);

std::vector<DoubleSimple> double_simples(const GroupPtr& g, const Cochain& omega,
                                         unsigned long long seed = kDefaultSeed);

// Rank of the twisted equivariant K-group, computed independently of the
// table machinery: per conjugacy class, the number of transgressed-regular
// classes of the centralizer.
int k_theory_rank(const GroupPtr& g, const Cochain& omega);

struct ModularData {
  int rank = 0;
  int unit = 0;  // index of the vacuum simple
  std::vector<DoubleSimple> simples;
  std::vector<std::vector<Cyclotomic>> s;
  std::vector<Cyclotomic> t;       // diagonal
  Cyclotomic global_dimension;     // 1 / S_{unit,unit}
  DoubleData data;
};

ModularData modular_data(const GroupPtr& g, const Cochain& omega,
                         unsigned long long seed = kDefaultSeed);

struct ModularChecks {
  bool symmetric = false;
  bool unitary = false;
  bool st_cubed_proportional = false;  // (ST)^3 = lambda S^2
  bool s_squared_permutation = false;  // and it fixes the unit
  Cyclotomic lambda;
  std::vector<int> charge_conjugation;  // the permutation S^2
};

ModularChecks run_modular_checks(const ModularData& m);

struct VerlindeRing {
  int rank = 0;
  int unit = 0;
  std::vector<std::vector<std::vector<Int>>> n;  // N[a][b][c]
};

// Verlinde formula; throws NonIntegralFusion if any coefficient fails to be
// a non-negative integer (never rounds), and Error if ring axioms fail.
VerlindeRing fusion(const ModularData& m);

// dim E(Sigma_genus) = sum_x S_{unit,x}^{2-2 genus}; an integer for genus >= 1.
Cyclotomic z_sigma_times_circle(const ModularData& m, int genus);

// True when two fusion rings are isomorphic under a simple relabeling that
// matches unit and fusion tensors (backtracking search; ranks are small).
bool fusion_rings_isomorphic(const VerlindeRing& a, const VerlindeRing& b);

}  // namespace ftqft
