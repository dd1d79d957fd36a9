#include "cmtheta/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace cmtheta {

Int binomial(const Int& n, long k) {
  if (k < 0) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Int binomial(long n, long k) { return binomial(Int(n), k); }

Int middle_binomial(long k) {
  if (k < 0) return 0;
  return binomial(2 * k, k);
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

IntPolynomial IntPolynomial::constant(const Int& c) {
  return IntPolynomial(std::vector<Int>{c});
}

Int IntPolynomial::coefficient(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

void IntPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(const Int& c) const {
  std::vector<Int> out = coeffs_;
  for (Int& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negated_argument() const {
  std::vector<Int> out = coeffs_;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

IntPolynomial eulerian_polynomial(long n) {
  if (n < 0) throw std::invalid_argument("eulerian_polynomial: n must be >= 0");
  static std::mutex mutex;
  static std::vector<IntPolynomial> table;
  std::scoped_lock lock(mutex);
  if (table.empty()) table.push_back(IntPolynomial::constant(1));
  const IntPolynomial x_minus_one(std::vector<Int>{-1, 1});
  while (static_cast<long>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    IntPolynomial acc;
    IntPolynomial pw = IntPolynomial::constant(1);
    // pw = (x-1)^{m-1-k} as k walks down from m-1
    for (long k = m - 1; k >= 0; --k) {
      acc = acc + table[static_cast<size_t>(k)].scaled(binomial(m, k)) * pw;
      pw = pw * x_minus_one;
    }
    table.push_back(acc);
  }
  return table[static_cast<size_t>(n)];
}

bool eulerian_defining_check(long n, long K) {
  if (n < 0 || K < 1) throw std::invalid_argument("eulerian_defining_check: need n >= 0 and K >= 1");
  std::vector<Int> lhs(static_cast<size_t>(K), Int(0));
  for (long k = 1; k < K; ++k) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), Int(k).get_mpz_t(), static_cast<unsigned long>(n));
    lhs[static_cast<size_t>(k)] = p;
  }
  // x P_n(x) (1-x)^{-(n+1)}, with [x^j] (1-x)^{-(n+1)} = C(n+j, n)
  const IntPolynomial pn = eulerian_polynomial(n);
  std::vector<Int> rhs(static_cast<size_t>(K), Int(0));
  for (long a = 0; a <= pn.degree(); ++a) {
    if (a + 1 >= K) break;
    for (long j = 0; a + 1 + j < K; ++j) rhs[static_cast<size_t>(a + 1 + j)] += pn.coefficient(a) * binomial(n + j, n);
  }
  return lhs == rhs;
}

} // namespace cmtheta
