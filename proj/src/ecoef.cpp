#include "cmtheta/ecoef.hpp"

#include <map>
#include <stdexcept>

#include "cmtheta/combinatorics.hpp"

namespace cmtheta {

namespace {

// Polynomial in the formal variables, exponent vector -> coefficient.
using CoefPoly = std::map<MultiIndex, Rat>;
// Truncated series in x with CoefPoly coefficients.
using CoefSeries = std::vector<CoefPoly>;

bool exceeds(const MultiIndex& a, const MultiIndex& cap) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > cap[i]) return true;
  return false;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Product mod x^K. Exponents only grow, so monomials already above the
// target index are dead and get dropped.
CoefSeries mul(const CoefSeries& s, const CoefSeries& t, const MultiIndex& cap) {
  const size_t K = s.size();
  CoefSeries out(K);
  for (size_t a = 0; a < K; ++a) {
    if (s[a].empty()) continue;
    for (size_t b = 0; a + b < K; ++b) {
      if (t[b].empty()) continue;
      for (const auto& [ma, va] : s[a])
        for (const auto& [mb, vb] : t[b]) {
          MultiIndex m = add(ma, mb);
          if (exceeds(m, cap)) continue;
          Rat prod = va * vb;
          auto [it, inserted] = out[a + b].try_emplace(std::move(m), prod);
          if (!inserted) {
            it->second += prod;
            if (it->second == 0) out[a + b].erase(it);
          }
        }
    }
  }
  return out;
}

// x P_{2l-1}(-x) (1+x)^{-2l} mod x^K, as plain rationals.
std::vector<Rat> variable_prefactor(int l, size_t K) {
  const IntPolynomial p = eulerian_polynomial(2 * l - 1).negated_argument();
  std::vector<Rat> shifted(K, Rat(0));
  for (size_t j = 0; j + 1 < K; ++j) shifted[j + 1] = Rat(p.coefficient(static_cast<long>(j)));
  std::vector<Rat> out(K, Rat(0));
  for (size_t a = 0; a < K; ++a) {
    if (shifted[a] == 0) continue;
    for (size_t b = 0; a + b < K; ++b) out[a + b] += shifted[a] * Rat(binomial(Int(-2 * l), static_cast<long>(b)));
  }
  return out;
}

std::vector<Rat> scalar_pow(const std::vector<Rat>& s, long m) {
  const size_t K = s.size();
  std::vector<Rat> out(K, Rat(0));
  out[0] = 1;
  for (long i = 0; i < m; ++i) {
    std::vector<Rat> next(K, Rat(0));
    for (size_t a = 0; a < K; ++a) {
      if (out[a] == 0) continue;
      for (size_t b = 0; a + b < K; ++b) next[a + b] += out[a] * s[b];
    }
    out = std::move(next);
  }
  return out;
}

} // namespace

Rat e_coefficient(const Int& n, int g, long k, const MultiIndex& index) {
  if (g < 1) throw std::invalid_argument("e_coefficient: g must be >= 1");
  if (k < 0) throw std::invalid_argument("e_coefficient: k must be >= 0");
  if (index.size() > static_cast<size_t>(g) - 1)
    throw std::invalid_argument("e_coefficient: index longer than g-1");
  MultiIndex target(static_cast<size_t>(g) - 1, 0);
  for (size_t i = 0; i < index.size(); ++i) {
    if (index[i] < 0) throw std::invalid_argument("e_coefficient: negative index entry");
    target[i] = index[i];
  }

  const size_t K = static_cast<size_t>(k) + 1;
  const MultiIndex zero(static_cast<size_t>(g) - 1, 0);

  // (1+x)^n
  CoefSeries series(K);
  for (size_t j = 0; j < K; ++j) {
    Rat c = Rat(binomial(n, static_cast<long>(j)));
    if (c != 0) series[j][zero] = c;
  }

  // exp( prefactor_l . c_l ) = sum_m prefactor_l^m / m! c_l^m
  for (int l = 1; l <= g - 1; ++l) {
    const long mmax = std::min<long>(k, target[static_cast<size_t>(l) - 1]);
    const std::vector<Rat> pre = variable_prefactor(l, K);
    CoefSeries factor(K);
    for (long m = 0; m <= mmax; ++m) {
      MultiIndex mono = zero;
      mono[static_cast<size_t>(l) - 1] = m;
      const std::vector<Rat> pw = scalar_pow(pre, m);
      const Rat inv_fact = frac(Int(1), factorial(m));
      for (size_t j = 0; j < K; ++j) {
        Rat c = pw[j] * inv_fact;
        if (c != 0) factor[j][mono] = c;
      }
    }
    series = mul(series, factor, target);
  }

  auto it = series[static_cast<size_t>(k)].find(target);
  return it == series[static_cast<size_t>(k)].end() ? Rat(0) : it->second;
}

Rat c2_gap(int g) {
  if (g < 4) throw std::invalid_argument("c2_gap: g must be >= 4");
  MultiIndex e2(static_cast<size_t>(g) - 1, 0);
  e2[1] = 1;
  const Int n = 2 * g - 2;
  Rat direct = e_coefficient(n, g, g - 1, e2) - e_coefficient(n, g, g - 3, e2);
  Rat closed = Rat(Int(-4) * (2 * g - 5) * (g + 3)) * frac(factorial(2 * g - 6), factorial(g) * factorial(g - 3));
  if (direct != closed) throw std::logic_error("c2_gap: series extraction disagrees with the closed form");
  return direct;
}

} // namespace cmtheta
