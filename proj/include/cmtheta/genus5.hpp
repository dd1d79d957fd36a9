#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmtheta/prym.hpp"

namespace cmtheta {

// True iff m divides a*v over the integers; m must be nonzero.
bool divisibility_obstruction(const Int& a, const Int& m, const Int& v);

struct PartitionVerdict {
  std::vector<int> partition;
  bool divisible;
  long residue; // of the pairing value mod 7
};

// The dimension-5 hyperelliptic exclusion, assembled as checkable data:
// the relation  lhs * (observed degree-1 class) = rhs * c_{M,1}(cycle)
// pairs against an integral curve class, so every candidate pairing
// value would have to be divisible; none is.
struct ExclusionReport {
  Int dim_omega;
  std::vector<PrymLocus> candidate_loci;
  Int lhs_multiplier;
  Int rhs_multiplier;
  std::vector<std::pair<std::vector<int>, Int>> pairing_values;
  std::vector<PartitionVerdict> verdicts;
  // Provenance notes for the data constants that are not derived here.
  std::string loci_source;
  std::string pairing_source;

  // The exclusion stands iff every verdict is "not divisible".
  bool excluded() const;
};

ExclusionReport genus5_hyperelliptic_report();

} // namespace cmtheta
