#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cmtheta/rational.hpp"

namespace cmtheta {

// Element of the theta subalgebra of H_{2*}(A,Q) for a g-dimensional
// ppav, written on the divided-power basis
//   w_r = theta^{g-r}/(g-r)! cap [A]  in  H_{2r}(A,Q),  r = 0..g.
// Values are immutable once built up; all operations return new classes.
class ThetaClass {
 public:
  explicit ThetaClass(int g);
  ThetaClass(int g, std::vector<Rat> coeffs);

  // w_r
  static ThetaClass basis(int g, int r);
  // w_0, the Pontryagin unit
  static ThetaClass unit(int g);

  int g() const { return g_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coefficient(int r) const;
  bool is_zero() const;

  ThetaClass operator+(const ThetaClass& other) const;
  ThetaClass operator-(const ThetaClass& other) const;
  ThetaClass operator-() const;
  ThetaClass scaled(const Rat& c) const;
  bool operator==(const ThetaClass& other) const = default;

 private:
  int g_;
  std::vector<Rat> coeffs_; // g+1 entries, index r
};

// Pontryagin product, the bilinear extension of
//   w_a * w_b = C(a+b, a) w_{a+b},  w_s = 0 for s > g.
ThetaClass pontryagin_mul(const ThetaClass& u, const ThetaClass& v);

// [n]_* pushforward: scales the degree-r component by n^{2r}.
ThetaClass adams(const ThetaClass& u, long n);

// Image in H_{<=2d}: zeroes all components of degree > d.
ThetaClass truncate_to(const ThetaClass& u, int d);

// Bigraded class on a bielliptic Prym, on the basis
//   e_{a,b} = xi'^a/a! . xi''^b/b! cap [P],  a, b >= 0, a+b <= g.
// Supports construction, equality, addition and scalars only; no
// product is defined on this basis.
class BiThetaClass {
 public:
  explicit BiThetaClass(int g);

  int g() const { return g_; }
  // Nonzero entries only, keyed by (a, b).
  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }
  Rat coefficient(int a, int b) const;
  void set_coefficient(int a, int b, const Rat& value);
  bool is_zero() const { return entries_.empty(); }

  BiThetaClass operator+(const BiThetaClass& other) const;
  BiThetaClass scaled(const Rat& c) const;
  bool operator==(const BiThetaClass& other) const = default;

 private:
  int g_;
  std::map<std::pair<int, int>, Rat> entries_;
};

} // namespace cmtheta
