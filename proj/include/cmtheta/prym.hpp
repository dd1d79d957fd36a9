#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cmtheta/pontryagin.hpp"

namespace cmtheta {

// Strata of the bielliptic Prym census. EPrime is the k-th locus of the
// t-th tower family in dimension g; SCycle is the boundary family over a
// cycle of rational curves, indexed by a partition of g.
struct EPrimeLocus {
  int g;
  int t;
  int k;
  bool operator==(const EPrimeLocus&) const = default;
};

struct SCycleLocus {
  std::vector<int> partition; // nondecreasing, positive, sums to g
  int k;
  bool operator==(const SCycleLocus&) const = default;
};

class PrymLocus {
 public:
  static PrymLocus eprime(int g, int t, int k);
  // The partition is canonicalized to nondecreasing order.
  static PrymLocus scycle(std::vector<int> partition, int k);

  bool is_eprime() const { return std::holds_alternative<EPrimeLocus>(value_); }
  const EPrimeLocus& eprime_data() const { return std::get<EPrimeLocus>(value_); }
  const SCycleLocus& scycle_data() const { return std::get<SCycleLocus>(value_); }

  int g() const;
  int k() const;
  // "t=1" or "d=1+4", for table output.
  std::string label() const;

  bool operator==(const PrymLocus& other) const = default;

 private:
  PrymLocus() = default;
  std::variant<EPrimeLocus, SCycleLocus> value_;
};

enum class ChiTag { Exact, GreaterThan, ExternalReference };

std::string to_string(ChiTag t);

struct ChiVerdict {
  ChiTag tag = ChiTag::ExternalReference;
  // Exact value, or the strict lower bound for GreaterThan; unused for
  // ExternalReference.
  Int value = 0;
  // Conventions and caveats attached to the value.
  std::string note;
};

// Euler characteristic of the intersection complex of the theta divisor
// at the locus:
//   t >= 2 (general member):  B_{t-1} B_{g-t} + B_t B_{g-t-1} - 2^{g-1}
//   t = 0, and the partitions (g), (1,g-1):
//                             B_{g-1} - 2k (g even), B_{g-1} - k (g odd)
//   t = 1, g >= 5:            > B_{g-1}
// Everything else is data this census does not derive.
ChiVerdict euler_characteristic(const PrymLocus& locus);

// True iff the locus has the Euler characteristic B_{g-1} of a Jacobian
// theta divisor: exactly EPrime(g,0,0), SCycle((g),0), SCycle((1,g-1),0).
bool matches_jacobian_dimension(const PrymLocus& locus);

// c_{M,r} of the Prym theta divisor on the t = 0 stratum, r >= 1:
// B_{g-r-1} w_r.
ThetaClass prym_chern_mather_t0(int g, int r);

// c_{M,r} on the t >= 1 strata, r >= 1:
//   sum_{a=0}^{g-r} (B_a B_{g-r-a-1} + B_{a-1} B_{g-r-a}) e_{a, g-r-a},
// with the convention B_{-1} = 0 at both endpoints.
BiThetaClass prym_chern_mather_t_pos(int g, int t, int r);

} // namespace cmtheta
