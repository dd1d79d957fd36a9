#include "cmtheta/pontryagin.hpp"

#include <stdexcept>

#include "cmtheta/combinatorics.hpp"

namespace cmtheta {

ThetaClass::ThetaClass(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("ThetaClass: g must be >= 1");
  coeffs_.assign(static_cast<size_t>(g) + 1, Rat(0));
}

ThetaClass::ThetaClass(int g, std::vector<Rat> coeffs) : g_(g), coeffs_(std::move(coeffs)) {
  if (g < 1) throw std::invalid_argument("ThetaClass: g must be >= 1");
  if (coeffs_.size() != static_cast<size_t>(g) + 1)
    throw std::invalid_argument("ThetaClass: expected g+1 coefficients");
}

ThetaClass ThetaClass::basis(int g, int r) {
  ThetaClass c(g);
  if (r < 0 || r > g) throw std::invalid_argument("ThetaClass::basis: r out of range");
  c.coeffs_[static_cast<size_t>(r)] = 1;
  return c;
}

ThetaClass ThetaClass::unit(int g) { return basis(g, 0); }

const Rat& ThetaClass::coefficient(int r) const {
  if (r < 0 || r > g_) throw std::invalid_argument("ThetaClass::coefficient: r out of range");
  return coeffs_[static_cast<size_t>(r)];
}

bool ThetaClass::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

ThetaClass ThetaClass::operator+(const ThetaClass& other) const {
  if (g_ != other.g_) throw std::invalid_argument("ThetaClass: dimension mismatch");
  ThetaClass out(g_);
  for (size_t r = 0; r < coeffs_.size(); ++r) out.coeffs_[r] = coeffs_[r] + other.coeffs_[r];
  return out;
}

ThetaClass ThetaClass::operator-(const ThetaClass& other) const { return *this + (-other); }

ThetaClass ThetaClass::operator-() const { return scaled(Rat(-1)); }

ThetaClass ThetaClass::scaled(const Rat& c) const {
  ThetaClass out(g_);
  for (size_t r = 0; r < coeffs_.size(); ++r) out.coeffs_[r] = coeffs_[r] * c;
  return out;
}

ThetaClass pontryagin_mul(const ThetaClass& u, const ThetaClass& v) {
  if (u.g() != v.g()) throw std::invalid_argument("pontryagin_mul: dimension mismatch");
  const int g = u.g();
  std::vector<Rat> acc(static_cast<size_t>(g) + 1, Rat(0));
  for (int a = 0; a <= g; ++a) {
    if (u.coefficient(a) == 0) continue;
    for (int b = 0; a + b <= g; ++b) {
      if (v.coefficient(b) == 0) continue;
      acc[static_cast<size_t>(a + b)] += u.coefficient(a) * v.coefficient(b) * Rat(binomial(a + b, a));
    }
  }
  return ThetaClass(g, std::move(acc));
}

ThetaClass adams(const ThetaClass& u, long n) {
  std::vector<Rat> acc(static_cast<size_t>(u.g()) + 1, Rat(0));
  Int scale = 1; // n^{2r}
  const Int n2 = Int(n) * Int(n);
  for (int r = 0; r <= u.g(); ++r) {
    acc[static_cast<size_t>(r)] = u.coefficient(r) * Rat(scale);
    scale *= n2;
  }
  return ThetaClass(u.g(), std::move(acc));
}

ThetaClass truncate_to(const ThetaClass& u, int d) {
  if (d < 0 || d > u.g()) throw std::invalid_argument("truncate_to: d out of range");
  std::vector<Rat> acc(u.coeffs());
  for (int r = d + 1; r <= u.g(); ++r) acc[static_cast<size_t>(r)] = 0;
  return ThetaClass(u.g(), std::move(acc));
}

BiThetaClass::BiThetaClass(int g) : g_(g) {
  if (g < 1) throw std::invalid_argument("BiThetaClass: g must be >= 1");
}

Rat BiThetaClass::coefficient(int a, int b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? Rat(0) : it->second;
}

void BiThetaClass::set_coefficient(int a, int b, const Rat& value) {
  if (a < 0 || b < 0 || a + b > g_)
    throw std::invalid_argument("BiThetaClass: index (a,b) out of range");
  if (value == 0)
    entries_.erase({a, b});
  else
    entries_[{a, b}] = value;
}

BiThetaClass BiThetaClass::operator+(const BiThetaClass& other) const {
  if (g_ != other.g_) throw std::invalid_argument("BiThetaClass: dimension mismatch");
  BiThetaClass out = *this;
  for (const auto& [key, value] : other.entries_) {
    Rat sum = out.coefficient(key.first, key.second) + value;
    out.set_coefficient(key.first, key.second, sum);
  }
  return out;
}

BiThetaClass BiThetaClass::scaled(const Rat& c) const {
  BiThetaClass out(g_);
  if (c == 0) return out;
  for (const auto& [key, value] : entries_) out.entries_[key] = value * c;
  return out;
}

} // namespace cmtheta
