#pragma once

#include <vector>

#include "cmtheta/rational.hpp"

namespace cmtheta {

// Generalized binomial coefficient: 0 for k < 0, otherwise
// n(n-1)...(n-k+1)/k!. The upper index may be negative, so that
// (1+x)^n series expansions work uniformly for all integers n.
Int binomial(const Int& n, long k);
Int binomial(long n, long k);

// Middle binomial coefficient B_k = C(2k, k); 0 for k < 0.
Int middle_binomial(long k);

Int factorial(long n);

// Dense polynomial over Z. Canonical form strips trailing zero
// coefficients; the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial constant(const Int& c);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Int coefficient(long i) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial scaled(const Int& c) const;
  // p(x) -> p(-x)
  IntPolynomial negated_argument() const;
  Int evaluate(const Int& x) const;

  bool operator==(const IntPolynomial& other) const = default;

 private:
  void strip();
  std::vector<Int> coeffs_;
};

// Eulerian polynomial P_n, defined by P_0 = 1 and
//   P_n(x) = sum_{k=0}^{n-1} C(n,k) P_k(x) (1-x)^{n-1-k}   for n >= 1.
// Memoized; safe for concurrent callers.
IntPolynomial eulerian_polynomial(long n);

// True iff sum_{k=1}^{K-1} k^n x^k == x P_n(x) (1-x)^{-(n+1)} mod x^K.
bool eulerian_defining_check(long n, long K);

} // namespace cmtheta
