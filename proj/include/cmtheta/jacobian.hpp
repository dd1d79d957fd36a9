#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtheta/pontryagin.hpp"

namespace cmtheta {

enum class CurveCase { NonHyperelliptic, Hyperelliptic };

std::string to_string(CurveCase c);

// w_r multiplier of the theta-divisor class table of a genus-g Jacobian:
//   non-hyperelliptic: B_{g-r-1}
//   hyperelliptic:     B_{g-r-1} - C(2g-2r-2, g-r-3)
Rat jacobian_reference_multiplier(int g, CurveCase c, int r);

// The classes c_{M,r} for r = 0 .. g-1.
std::vector<ThetaClass> jacobian_reference_classes(int g, CurveCase c);

// Dimension of the distinguished representation, n = g-1:
//   non-hyperelliptic: C(2n, n)
//   hyperelliptic:     C(2n, n) - C(2n, n-2)
// Coincides with the r = 0 entry of the reference table.
Int dim_omega(int g, CurveCase c);

enum class VerdictTag { Jacobian, NotConclusive, Inapplicable };

std::string to_string(VerdictTag t);

// The cycle data recovered by the reconstruction steps: the degree c_0
// and the w_1 / w_2 multipliers of its first two classes.
struct Reconstruction {
  Int c0;
  Rat c1;
  Rat c2;
};

struct CriterionVerdict {
  VerdictTag tag = VerdictTag::NotConclusive;
  std::optional<Reconstruction> reconstruction;
  std::string reason;
  // The solved reconstruction equations, in order, for reporting.
  std::vector<std::string> equations;
};

// Decides whether observed class data forces a Jacobian. Inputs are the
// w_r multipliers of the observed c_{M,r}(cc(IC_Theta)) for r = 0,1,2 and
// a lower bound on the codimension of the locus where multiplicativity
// can fail. Requires g >= 4. The verdict tag is invariant under the
// rescaling c_r -> m^{2r} c_r (checked internally).
CriterionVerdict criterion_check(int g, CurveCase c, const Rat& observed_c0,
                                 const Rat& observed_c1, const Rat& observed_c2,
                                 int problematic_codim);

} // namespace cmtheta
