#pragma once

#include <string>

namespace ftqft {

// Declarative K-theory anomaly pipeline data for a fermion in fiber
// dimension n, periodic in n mod 8.
struct AnomalyDescriptor {
  int n = 0;
  int n_mod_8 = 0;                 // 0..7
  std::string bundle_reality;      // "C", "R", "R+R", "H", "H+H"
  std::string source_theory;       // "KO", "K", "KSp" (degree 0)
  int pushforward_degree = 0;      // -(8r + n mod 8), i.e. -n
  std::string target_group;        // e.g. "H^1(T;Z/2)", "H^2(T;Z)",
                                   // "H^1(T;Z) -> H^1(T;Z/2)"
  bool uses_difference_class = false;  // class is [E1] - [E2]
  std::string note;                // extra identification carried by this row
};

// Pure lookup; n >= 1.
AnomalyDescriptor anomaly_pipeline(int n);

}  // namespace ftqft
