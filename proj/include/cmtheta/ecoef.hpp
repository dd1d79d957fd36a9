#pragma once

#include <vector>

#include "cmtheta/rational.hpp"

namespace cmtheta {

// Exponent vector for the formal commuting variables c_1 .. c_{g-1}.
using MultiIndex = std::vector<long>;

// The coefficient E^n_k(i) of c^i x^k in
//   E^n(c, x) = (1+x)^n prod_{l=1}^{g-1} exp( x P_{2l-1}(-x) / (1+x)^{2l} . c_l ),
// expanded symbolically in Q[c_1..c_{g-1}] mod x^{k+1}. The functional is
// formal: no nilpotency in the c variables is imposed. An index shorter
// than g-1 is padded with zeros.
Rat e_coefficient(const Int& n, int g, long k, const MultiIndex& index);

// E^{2g-2}_{g-1}(e_2) - E^{2g-2}_{g-3}(e_2), computed by series extraction
// and checked against the closed form -4(2g-5)(g+3)(2g-6)!/(g!(g-3)!).
// Nonzero for every g >= 4.
Rat c2_gap(int g);

} // namespace cmtheta
