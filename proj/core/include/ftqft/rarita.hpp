#pragma once

#include <string>
#include <vector>

#include "ftqft/linalg.hpp"

namespace ftqft {

// Minkowski Clifford module data in dimension n, signature (1, n-1).
// cu[mu] realizes c(e^mu): S -> S*, cd[mu] its partner S* -> S; both are
// symmetric matrices with entries in {0, +-1, +-i}, and together they
// satisfy  cd(k) cu(l) + cd(l) cu(k) = 2 g^-1(k,l) id  exactly.
struct CliffordModel {
  int n = 0;
  int dim_s = 0;
  std::vector<QMat> cu;  // S -> S*
  std::vector<QMat> cd;  // S* -> S
  bool chiral = false;   // S is a half-spinor module
  bool doubled = false;  // S = W + W* (no symmetric pairing on W alone)

  Rat metric_diag(int mu) const { return mu == 0 ? Rat(1) : Rat(-1); }
  Rat inverse_metric(int mu) const { return mu == 0 ? Rat(1) : Rat(-1); }
};

// Builds the minimal model admitting the symmetric pairings; 2 <= n <= 12.
CliffordModel build_clifford(int n);

using Covector = std::vector<Rat>;  // n components k_mu

Rat covector_norm_sq(const CliffordModel& m, const Covector& k);  // g^-1(k,k)

// Sum_mu k_mu cu[mu] (up = true) or the cd partner.
QMat c_of_k(const CliffordModel& m, const Covector& k, bool up = true);

struct FiberReport {
  int n = 0;
  int dim_s = 0;
  Covector k;
  Rat norm_sq;
  bool null_covector = false;

  int dim_s_prime = 0;       // ker(c(k): S -> S*)
  int dim_s_dprime = 0;      // ker(c(k): S* -> S)
  int dim_v_prime = 0;       // n - 2 for null k
  int dim_r_prime = 0;       // ker(c': V' x S' -> S'')
  int rank_a = 0;
  int rank_b = 0;
  int dim_ker_b = 0;
  int quotient_dim = 0;      // dim ker B_k - rank A_k
  bool kernel_is_image = false;          // |k|^2 != 0: ker B_k = im A_k
  bool quotient_matches_r_prime = false;  // null k: ker B_k / im A_k has dim R'_k
  bool exact_fallback_used = false;  // modular certificate needed the slow path
};

// Exact-rank verification of the B_k complex at the covector k.
// Throws ZeroCovector when k = 0.
FiberReport fiber_report(const CliffordModel& m, const Covector& k);

// Canonical covectors used throughout: null (1,1,0,...,0), timelike
// (1,0,...,0).
Covector canonical_null(int n);
Covector canonical_timelike(int n);

struct ParticleContent {
  int n = 0;
  int dim_r_prime = 0, dim_s_dprime = 0, dim_s_prime = 0;
  // Rows (bundle name, fiber dimension) per quantization approach.
  std::vector<std::pair<std::string, int>> first_approach;   // R' + S'' + S' + S'
  std::vector<std::pair<std::string, int>> second_approach;  // R'
  std::vector<std::pair<std::string, int>> third_approach;   // R' + S'
};

ParticleContent particle_content(const CliffordModel& m);

enum class DualType { kSelfDual, kDistinctDual };

// Inferred from the spinor representation theory: distinct duals occur for
// n = 2, 6 mod 8, self-dual otherwise.
DualType default_dual_type(int n);

struct VirtualCoefficient {
  int n = 0;
  DualType dual_type = DualType::kSelfDual;
  // Formal pfaffian-line exponents after merging the dual Dirac factor.
  // Each entry is (operator label, exponent).
  std::vector<std::pair<std::string, int>> pfaffian_factors;
  int tangent_coefficient = 1;  // coefficient of T_C X
  int constant_term = 0;        // -1 or -3
  std::string expression;       // "TcX - 1" or "TcX - 3"
};

VirtualCoefficient rs_virtual_coefficient(int n, DualType dual);

// Splitting map S'' -> V' x S' (normalized so that c' o sigma = id); the
// returned scalar is the raw 1/n-convention composite eigenvalue before
// normalization.
struct SplittingCheck {
  bool splits = false;      // c' o sigma = id after normalization
  Rat raw_eigenvalue;       // composite scalar with the literal 1/n prefactor
};

SplittingCheck splitting_check(const CliffordModel& m, const Covector& k);

}  // namespace ftqft
