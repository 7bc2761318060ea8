#include "ftqft/anomaly.hpp"

#include "ftqft/errors.hpp"

namespace ftqft {

AnomalyDescriptor anomaly_pipeline(int n) {
  if (n < 1) throw Error("anomaly_pipeline requires n >= 1");
  AnomalyDescriptor d;
  d.n = n;
  d.n_mod_8 = n % 8;
  d.pushforward_degree = -n;
  switch (d.n_mod_8) {
    case 1:
      d.bundle_reality = "R";
      d.source_theory = "KO";
      d.target_group = "H^1(T;Z/2)";
      break;
    case 2:
      d.bundle_reality = "R+R";
      d.source_theory = "KO";
      d.target_group = "H^2(T;Z)";
      d.uses_difference_class = true;
      break;
    case 3:
      d.bundle_reality = "R";
      d.source_theory = "KO";
      d.target_group = "H^1(T;Z) -> H^1(T;Z/2)";
      break;
    case 4:
      d.bundle_reality = "C";
      d.source_theory = "K";
      d.target_group = "H^2(T;Z)";
      d.note = "pfaff D is the determinant of the coupled Dirac operator";
      break;
    case 5:
      d.bundle_reality = "H";
      d.source_theory = "KSp";
      d.target_group = "H^1(T;Z/2)";
      break;
    case 6:
      d.bundle_reality = "H+H";
      d.source_theory = "KSp";
      d.target_group = "H^2(T;Z)";
      d.uses_difference_class = true;
      break;
    case 7:
      d.bundle_reality = "H";
      d.source_theory = "KSp";
      d.target_group = "H^1(T;Z) -> H^1(T;Z/2)";
      break;
    case 0:
      d.bundle_reality = "C";
      d.source_theory = "K";
      d.target_group = "H^2(T;Z)";
      break;
  }
  return d;
}

}  // namespace ftqft
