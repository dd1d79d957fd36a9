#pragma once

#include <vector>

#include "cmtheta/pontryagin.hpp"

namespace cmtheta {

// Truncated formal power series in x, taken mod x^K, with ThetaClass
// coefficients sharing a single ambient dimension g.
class ThetaSeries {
 public:
  ThetaSeries(int g, int K);
  ThetaSeries(int g, int K, std::vector<ThetaClass> coeffs);

  // The series 1 (= w_0 at x^0).
  static ThetaSeries unit(int g, int K);

  int g() const { return g_; }
  int order() const { return K_; }
  const std::vector<ThetaClass>& coeffs() const { return coeffs_; }
  const ThetaClass& coefficient(int j) const;
  void set_coefficient(int j, ThetaClass value);

  ThetaSeries operator+(const ThetaSeries& other) const;
  ThetaSeries operator-(const ThetaSeries& other) const;
  ThetaSeries scaled(const Rat& c) const;
  bool operator==(const ThetaSeries& other) const = default;

 private:
  int g_;
  int K_;
  std::vector<ThetaClass> coeffs_; // K entries
};

// Cauchy product mod x^K via pontryagin_mul on coefficients.
ThetaSeries series_mul(const ThetaSeries& s, const ThetaSeries& t);

// exp of a series whose x^0 coefficient has no w_0 part. Computed
// order by order; terminates because every term raises the x-order or
// the homological degree. series_log(series_exp(s)) == s.
ThetaSeries series_exp(const ThetaSeries& s);

// Inverse of series_exp on its image; the x^0 coefficient must have
// w_0 part exactly 1.
ThetaSeries series_log(const ThetaSeries& f);

// (1+x)^n as a scalar (w_0-valued) series, any integer n.
ThetaSeries one_plus_x_pow(const Int& n, int g, int K);

// Chern-Mather data (c_0, c_1, ..., c_{g-1}) of a clean Lagrangian
// cycle, with c_r = lambda_r w_r and c_r = 0 for r >= g.
struct LagrangianChernData {
  int g;
  Int c0;
  std::vector<Rat> higher; // lambda_1 .. lambda_{g-1}

  LagrangianChernData(int g_in, Int c0_in, std::vector<Rat> higher_in);

  // c_0 w_0 + sum_r lambda_r w_r
  ThetaClass total_class() const;
};

// The generating series
//   (1+x)^{c_0} prod_{k>=1} exp( x P_{2k-1}(-x) / (1+x)^{2k} . c_k )
// truncated mod x^K. Its x^k coefficient is the total class of the
// k-th exterior power of the cycle, when multiplicativity holds.
ThetaSeries e_lambda(const LagrangianChernData& data, int K);

// Coefficient of x^k in e_lambda (truncation order k+1).
ThetaClass alt_class(const LagrangianChernData& data, int k);

// The same coefficient by the power-sum route
//   sum_m e_m x^m = exp( sum_m (-1)^{m+1}/m . p_m x^m ),
// with p_m = adams(total class, m). Kept independent of e_lambda.
ThetaClass alt_via_newton(const LagrangianChernData& data, int k);

} // namespace cmtheta
