#include "cmtheta/genus5.hpp"

#include <stdexcept>

#include "cmtheta/ecoef.hpp"
#include "cmtheta/jacobian.hpp"

namespace cmtheta {

bool divisibility_obstruction(const Int& a, const Int& m, const Int& v) {
  if (m == 0) throw std::invalid_argument("divisibility_obstruction: zero modulus");
  Int product = a * v;
  return product % m == 0;
}

bool ExclusionReport::excluded() const {
  for (const PartitionVerdict& v : verdicts)
    if (v.divisible) return false;
  return !verdicts.empty();
}

ExclusionReport genus5_hyperelliptic_report() {
  ExclusionReport report;
  report.dim_omega = dim_omega(5, CurveCase::Hyperelliptic); // 42

  report.candidate_loci = {PrymLocus::scycle({1, 2, 2}, 2), PrymLocus::scycle({2, 3}, 10)};
  report.loci_source = "candidate strata taken as given from external classification results";

  // [2]_* multiplies a degree-1 class by 2^2.
  report.lhs_multiplier = to_integer(adams(ThetaClass::basis(5, 1), 2).coefficient(1));
  // E^8_4(e_1) - E^8_2(e_1) = C(6,3) - C(6,1) = 14
  report.rhs_multiplier =
      to_integer(e_coefficient(8, 5, 4, MultiIndex{1}) - e_coefficient(8, 5, 2, MultiIndex{1}));

  report.pairing_values = {{{1, 2, 2}, Int(44)}, {{2, 3}, Int(92)}};
  report.pairing_source = "intersection numbers on the normalized boundary model, from external references";

  for (const auto& [partition, value] : report.pairing_values) {
    PartitionVerdict v;
    v.partition = partition;
    v.divisible = divisibility_obstruction(report.lhs_multiplier, report.rhs_multiplier, value);
    Int residue = value % 7;
    v.residue = residue.get_si();
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

} // namespace cmtheta
