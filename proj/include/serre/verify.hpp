#pragma once

// Named regression checks reproducing the published worked examples and
// classification rows, plus the independent brute-force H^1 oracle used to
// cross-check the propagation implementation.

#include <string>
#include <vector>

#include "serre/adequacy.hpp"
#include "serre/weights.hpp"

namespace serre {

// dim H^1(G, gl_n) from the full cocycle system: one unknown block per group
// element, one equation block per ordered pair.  Independent of h1_adjoint's
// spanning-tree propagation; quadratic in |G|, intended for |G| <= ~200.
int h1_adjoint_brute(const MatGroup& G);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Individual worked-example checks (acceptance criteria 1-6).
CheckResult vc_counterexample_split();
CheckResult vc_counterexample_induced();
CheckResult vc_big_e_sweeps(int jobs = 1);
CheckResult vc_solver_soundness();
std::vector<CheckResult> vc_adequacy_rows();
CheckResult vc_h1_oracle();
CheckResult vc_bdj_agreement();

// The whole battery: both counterexamples, the e >= l characterization
// sweeps, the solver soundness sample, the adequacy classification rows, the
// cohomology oracle agreement, and the e = 1 agreement.
std::vector<CheckResult> reference_checks(int jobs = 1);

// Randomized invariants (acceptance criterion 7): weight-equivalence
// invariance, delta/e-periodicity, Hodge-Tate table postconditions,
// scalar-saturation equivalence, the normal-subgroup and tensor instances.
std::vector<CheckResult> property_checks();

}  // namespace serre
