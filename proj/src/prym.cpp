#include "cmtheta/prym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cmtheta/combinatorics.hpp"

namespace cmtheta {

PrymLocus PrymLocus::eprime(int g, int t, int k) {
  if (g < 4) throw std::invalid_argument("PrymLocus: g must be >= 4");
  if (t < 0 || 2 * t > g) throw std::invalid_argument("PrymLocus: t must satisfy 0 <= t <= g/2");
  if (k < 0) throw std::invalid_argument("PrymLocus: k must be >= 0");
  PrymLocus locus;
  locus.value_ = EPrimeLocus{g, t, k};
  return locus;
}

PrymLocus PrymLocus::scycle(std::vector<int> partition, int k) {
  if (partition.empty()) throw std::invalid_argument("PrymLocus: empty partition");
  for (int d : partition)
    if (d <= 0) throw std::invalid_argument("PrymLocus: partition entries must be positive");
  if (k < 0) throw std::invalid_argument("PrymLocus: k must be >= 0");
  std::sort(partition.begin(), partition.end());
  PrymLocus locus;
  locus.value_ = SCycleLocus{std::move(partition), k};
  return locus;
}

int PrymLocus::g() const {
  if (is_eprime()) return eprime_data().g;
  const auto& p = scycle_data().partition;
  return std::accumulate(p.begin(), p.end(), 0);
}

int PrymLocus::k() const { return is_eprime() ? eprime_data().k : scycle_data().k; }

std::string PrymLocus::label() const {
  if (is_eprime()) return "t=" + std::to_string(eprime_data().t);
  std::string s = "d=";
  const auto& p = scycle_data().partition;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(p[i]);
  }
  return s;
}

std::string to_string(ChiTag t) {
  switch (t) {
    case ChiTag::Exact: return "exact";
    case ChiTag::GreaterThan: return "greater-than";
    case ChiTag::ExternalReference: return "external-reference";
  }
  return "";
}

namespace {

// chi on the strata whose theta divisor looks like a Jacobian one up to
// k extra isolated singular points.
ChiVerdict chi_base_stratum(int g, int k) {
  Int chi = middle_binomial(g - 1);
  chi -= (g % 2 == 0) ? 2 * k : k;
  return ChiVerdict{ChiTag::Exact, chi, ""};
}

} // namespace

ChiVerdict euler_characteristic(const PrymLocus& locus) {
  if (locus.is_eprime()) {
    const auto& [g, t, k] = locus.eprime_data();
    if (t >= 2) {
      Int chi = middle_binomial(t - 1) * middle_binomial(g - t) +
                middle_binomial(t) * middle_binomial(g - t - 1);
      chi -= Int(1) << (g - 1);
      std::string note = "value for a general member of the stratum";
      if (g == 4 && t == 2) note += "; needs the generality assumption at t=2";
      return ChiVerdict{ChiTag::Exact, chi, note};
    }
    if (t == 0) return chi_base_stratum(g, k);
    // t == 1
    if (g >= 5) return ChiVerdict{ChiTag::GreaterThan, middle_binomial(g - 1), ""};
    return ChiVerdict{ChiTag::ExternalReference, 0, "no census value for t=1 in dimension 4"};
  }
  const auto& data = locus.scycle_data();
  const int g = locus.g();
  const bool base = data.partition == std::vector<int>{g} ||
                    data.partition == std::vector<int>{1, g - 1};
  if (base) return chi_base_stratum(g, data.k);
  return ChiVerdict{ChiTag::ExternalReference, 0, "value supplied by external references"};
}

bool matches_jacobian_dimension(const PrymLocus& locus) {
  const int g = locus.g();
  if (g < 4) throw std::invalid_argument("matches_jacobian_dimension: g must be >= 4");
  if (locus.k() != 0) return false;
  if (locus.is_eprime()) return locus.eprime_data().t == 0;
  const auto& p = locus.scycle_data().partition;
  return p == std::vector<int>{g} || p == std::vector<int>{1, g - 1};
}

ThetaClass prym_chern_mather_t0(int g, int r) {
  if (g < 4) throw std::invalid_argument("prym_chern_mather_t0: g must be >= 4");
  if (r < 1 || r > g - 1) throw std::invalid_argument("prym_chern_mather_t0: r out of range");
  return ThetaClass::basis(g, r).scaled(Rat(middle_binomial(g - r - 1)));
}

BiThetaClass prym_chern_mather_t_pos(int g, int t, int r) {
  if (g < 4) throw std::invalid_argument("prym_chern_mather_t_pos: g must be >= 4");
  if (t < 1 || 2 * t > g) throw std::invalid_argument("prym_chern_mather_t_pos: t must satisfy 1 <= t <= g/2");
  if (r < 1 || r > g - 1) throw std::invalid_argument("prym_chern_mather_t_pos: r out of range");
  BiThetaClass cls(g);
  const int s = g - r;
  for (int a = 0; a <= s; ++a) {
    // B_{-1} = 0 kills the dangling factor at both endpoints.
    Int coeff = middle_binomial(a) * middle_binomial(s - a - 1) +
                middle_binomial(a - 1) * middle_binomial(s - a);
    cls.set_coefficient(a, s - a, Rat(coeff));
  }
  return cls;
}

} // namespace cmtheta
