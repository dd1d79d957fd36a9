#pragma once

#include <gmpxx.h>
#include <string>

namespace cmtheta {

using Int = mpz_class;
using Rat = mpq_class;

// a/b in lowest terms with positive denominator; b must be nonzero.
Rat frac(const Int& a, const Int& b);

inline Rat frac(long a, long b) { return frac(Int(a), Int(b)); }

// Accepts "a/b" or a plain integer literal (base 10).
Rat parse_rational(const std::string& text);

// Canonical form: lowest terms, positive denominator, no "/1" on integers.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

bool is_integer(const Rat& q);

// The integer value of q; throws if q has a nontrivial denominator.
Int to_integer(const Rat& q);

} // namespace cmtheta
