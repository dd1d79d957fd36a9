#include "cmtheta/series.hpp"

#include <stdexcept>

#include "cmtheta/combinatorics.hpp"

namespace cmtheta {

namespace {

// exp of a class with zero w_0 part; the sum stops at m = g since each
// factor raises the homological degree.
ThetaClass class_exp(const ThetaClass& nilpotent) {
  const int g = nilpotent.g();
  ThetaClass result = ThetaClass::unit(g);
  ThetaClass power = ThetaClass::unit(g);
  Int mfact = 1;
  for (int m = 1; m <= g; ++m) {
    power = pontryagin_mul(power, nilpotent);
    if (power.is_zero()) break;
    mfact *= m;
    result = result + power.scaled(frac(Int(1), mfact));
  }
  return result;
}

// log of 1 + nilpotent.
ThetaClass class_log(const ThetaClass& f) {
  const int g = f.g();
  ThetaClass nil = f - ThetaClass::unit(g);
  ThetaClass result(g);
  ThetaClass power = ThetaClass::unit(g);
  for (int m = 1; m <= g; ++m) {
    power = pontryagin_mul(power, nil);
    if (power.is_zero()) break;
    result = result + power.scaled(frac(m % 2 == 1 ? 1 : -1, m));
  }
  return result;
}

// inverse of 1 + nilpotent.
ThetaClass class_inverse(const ThetaClass& f) {
  const int g = f.g();
  ThetaClass nil = f - ThetaClass::unit(g);
  ThetaClass result = ThetaClass::unit(g);
  ThetaClass power = ThetaClass::unit(g);
  for (int m = 1; m <= g; ++m) {
    power = pontryagin_mul(power, nil).scaled(Rat(-1));
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

} // namespace

ThetaSeries::ThetaSeries(int g, int K) : g_(g), K_(K) {
  if (K < 1) throw std::invalid_argument("ThetaSeries: K must be >= 1");
  coeffs_.assign(static_cast<size_t>(K), ThetaClass(g));
}

ThetaSeries::ThetaSeries(int g, int K, std::vector<ThetaClass> coeffs)
    : g_(g), K_(K), coeffs_(std::move(coeffs)) {
  if (K < 1) throw std::invalid_argument("ThetaSeries: K must be >= 1");
  if (coeffs_.size() != static_cast<size_t>(K))
    throw std::invalid_argument("ThetaSeries: expected K coefficients");
  for (const ThetaClass& c : coeffs_)
    if (c.g() != g) throw std::invalid_argument("ThetaSeries: coefficient dimension mismatch");
}

ThetaSeries ThetaSeries::unit(int g, int K) {
  ThetaSeries s(g, K);
  s.coeffs_[0] = ThetaClass::unit(g);
  return s;
}

const ThetaClass& ThetaSeries::coefficient(int j) const {
  if (j < 0 || j >= K_) throw std::invalid_argument("ThetaSeries::coefficient: index out of range");
  return coeffs_[static_cast<size_t>(j)];
}

void ThetaSeries::set_coefficient(int j, ThetaClass value) {
  if (j < 0 || j >= K_) throw std::invalid_argument("ThetaSeries::set_coefficient: index out of range");
  if (value.g() != g_) throw std::invalid_argument("ThetaSeries: coefficient dimension mismatch");
  coeffs_[static_cast<size_t>(j)] = std::move(value);
}

ThetaSeries ThetaSeries::operator+(const ThetaSeries& other) const {
  if (g_ != other.g_ || K_ != other.K_) throw std::invalid_argument("ThetaSeries: shape mismatch");
  ThetaSeries out(g_, K_);
  for (int j = 0; j < K_; ++j) out.coeffs_[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(j)] + other.coeffs_[static_cast<size_t>(j)];
  return out;
}

ThetaSeries ThetaSeries::operator-(const ThetaSeries& other) const {
  return *this + other.scaled(Rat(-1));
}

ThetaSeries ThetaSeries::scaled(const Rat& c) const {
  ThetaSeries out(g_, K_);
  for (int j = 0; j < K_; ++j) out.coeffs_[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(j)].scaled(c);
  return out;
}

ThetaSeries series_mul(const ThetaSeries& s, const ThetaSeries& t) {
  if (s.g() != t.g() || s.order() != t.order())
    throw std::invalid_argument("series_mul: shape mismatch");
  const int K = s.order();
  ThetaSeries out(s.g(), K);
  for (int a = 0; a < K; ++a) {
    if (s.coefficient(a).is_zero()) continue;
    for (int b = 0; a + b < K; ++b) {
      if (t.coefficient(b).is_zero()) continue;
      out.set_coefficient(a + b, out.coefficient(a + b) + pontryagin_mul(s.coefficient(a), t.coefficient(b)));
    }
  }
  return out;
}

ThetaSeries series_exp(const ThetaSeries& s) {
  if (s.coefficient(0).coefficient(0) != 0)
    throw std::invalid_argument("series_exp: nonzero scalar constant term");
  const int K = s.order();
  ThetaSeries f(s.g(), K);
  f.set_coefficient(0, class_exp(s.coefficient(0)));
  // f' = s' f, solved order by order: k f_k = sum_{j=1}^{k} j s_j f_{k-j}.
  for (int k = 1; k < K; ++k) {
    ThetaClass acc(s.g());
    for (int j = 1; j <= k; ++j) {
      if (s.coefficient(j).is_zero()) continue;
      acc = acc + pontryagin_mul(s.coefficient(j), f.coefficient(k - j)).scaled(Rat(j));
    }
    f.set_coefficient(k, acc.scaled(frac(1, k)));
  }
  return f;
}

ThetaSeries series_log(const ThetaSeries& f) {
  if (f.coefficient(0).coefficient(0) != 1)
    throw std::invalid_argument("series_log: constant term must have w_0 part 1");
  const int K = f.order();
  const ThetaClass inv0 = class_inverse(f.coefficient(0));
  ThetaSeries s(f.g(), K);
  s.set_coefficient(0, class_log(f.coefficient(0)));
  for (int k = 1; k < K; ++k) {
    ThetaClass acc = f.coefficient(k).scaled(Rat(k));
    for (int j = 1; j < k; ++j) {
      if (s.coefficient(j).is_zero()) continue;
      acc = acc - pontryagin_mul(s.coefficient(j), f.coefficient(k - j)).scaled(Rat(j));
    }
    s.set_coefficient(k, pontryagin_mul(acc, inv0).scaled(frac(1, k)));
  }
  return s;
}

ThetaSeries one_plus_x_pow(const Int& n, int g, int K) {
  ThetaSeries out(g, K);
  for (int j = 0; j < K; ++j)
    out.set_coefficient(j, ThetaClass::unit(g).scaled(Rat(binomial(n, j))));
  return out;
}

LagrangianChernData::LagrangianChernData(int g_in, Int c0_in, std::vector<Rat> higher_in)
    : g(g_in), c0(std::move(c0_in)), higher(std::move(higher_in)) {
  if (g < 1) throw std::invalid_argument("LagrangianChernData: g must be >= 1");
  if (higher.size() != static_cast<size_t>(g) - 1)
    throw std::invalid_argument("LagrangianChernData: expected g-1 higher coefficients");
}

ThetaClass LagrangianChernData::total_class() const {
  std::vector<Rat> coeffs(static_cast<size_t>(g) + 1, Rat(0));
  coeffs[0] = Rat(c0);
  for (int r = 1; r <= g - 1; ++r) coeffs[static_cast<size_t>(r)] = higher[static_cast<size_t>(r) - 1];
  return ThetaClass(g, std::move(coeffs));
}

ThetaSeries e_lambda(const LagrangianChernData& data, int K) {
  const int g = data.g;
  ThetaSeries result = one_plus_x_pow(data.c0, g, K);
  for (int k = 1; k <= g - 1; ++k) {
    const Rat& lambda = data.higher[static_cast<size_t>(k) - 1];
    if (lambda == 0) continue;
    // x P_{2k-1}(-x) as a scalar series
    const IntPolynomial p = eulerian_polynomial(2 * k - 1).negated_argument();
    ThetaSeries prefactor(g, K);
    for (int j = 0; j + 1 < K; ++j)
      prefactor.set_coefficient(j + 1, ThetaClass::unit(g).scaled(Rat(p.coefficient(j))));
    prefactor = series_mul(prefactor, one_plus_x_pow(Int(-2 * k), g, K));
    // multiply the scalar prefactor into c_k = lambda_k w_k
    const ThetaClass ck = ThetaClass::basis(g, k).scaled(lambda);
    ThetaSeries arg(g, K);
    for (int j = 0; j < K; ++j) arg.set_coefficient(j, pontryagin_mul(prefactor.coefficient(j), ck));
    result = series_mul(result, series_exp(arg));
  }
  return result;
}

ThetaClass alt_class(const LagrangianChernData& data, int k) {
  if (k < 0) throw std::invalid_argument("alt_class: k must be >= 0");
  return e_lambda(data, k + 1).coefficient(k);
}

ThetaClass alt_via_newton(const LagrangianChernData& data, int k) {
  if (k < 0) throw std::invalid_argument("alt_via_newton: k must be >= 0");
  const int K = k + 1;
  const ThetaClass total = data.total_class();
  ThetaSeries arg(data.g, K);
  for (int m = 1; m < K; ++m)
    arg.set_coefficient(m, adams(total, m).scaled(frac(m % 2 == 1 ? 1 : -1, m)));
  return series_exp(arg).coefficient(k);
}

} // namespace cmtheta
