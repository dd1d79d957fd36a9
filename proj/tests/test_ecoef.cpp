#include <doctest.h>

#include <functional>

#include "cmtheta/combinatorics.hpp"
#include "cmtheta/ecoef.hpp"
#include "cmtheta/pontryagin.hpp"
#include "cmtheta/series.hpp"

using namespace cmtheta;

TEST_CASE("closed forms of the low-degree coefficients") {
  // E^n_k(0) = C(n,k)
  // E^n_k(e1) = C(n-2,k-1)
  // E^n_k(2 e1) = C(n-4,k-2)/2
  // E^n_k(e2) = C(n-4,k-3) - 4 C(n-4,k-2) + C(n-4,k-1)
  for (long n = 2; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(e_coefficient(n, 3, k, {}) == Rat(binomial(n, k)));
      CHECK(e_coefficient(n, 3, k, {1}) == Rat(binomial(n - 2, k - 1)));
      CHECK(e_coefficient(n, 3, k, {2}) == frac(binomial(n - 4, k - 2), 2));
      CHECK(e_coefficient(n, 3, k, {0, 1}) ==
            Rat(binomial(n - 4, k - 3) - 4 * binomial(n - 4, k - 2) + binomial(n - 4, k - 1)));
    }
}

TEST_CASE("coefficients do not depend on the ambient g") {
  for (int g = 3; g <= 7; ++g) {
    CHECK(e_coefficient(8, g, 4, {1}) == 20);
    CHECK(e_coefficient(8, g, 2, {1}) == 6);
    CHECK(e_coefficient(7, g, 3, {0, 1}) == Rat(binomial(3, 0) - 4 * binomial(3, 1) + binomial(3, 2)));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(e_coefficient(5, 3, -1, {}), std::invalid_argument);
  CHECK_THROWS_AS(e_coefficient(5, 3, 2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(e_coefficient(5, 3, 2, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(e_coefficient(5, 0, 2, {}), std::invalid_argument);
}

TEST_CASE("symbolic expansion agrees with the theta-class route") {
  // Substituting c_l = lambda_l w_l into the symbolic series must land on
  // alt_class. The w-products are evaluated with pontryagin_mul, so the
  // two engines are tied together through an independent pairing.
  const int g = 5;
  const std::vector<Rat> lambda{frac(2, 3), Rat(3), frac(-1, 2), Rat(1)};
  const LagrangianChernData data(g, 7, lambda);
  for (int k = 0; k <= 4; ++k) {
    ThetaClass sum(g);
    std::function<void(MultiIndex&, size_t, long)> walk = [&](MultiIndex& idx, size_t pos, long budget) {
      if (pos == idx.size()) {
        const Rat coeff = e_coefficient(7, g, k, idx);
        if (coeff == 0) return;
        ThetaClass monomial = ThetaClass::unit(g);
        for (size_t l = 0; l < idx.size(); ++l)
          for (long rep = 0; rep < idx[l]; ++rep)
            monomial = pontryagin_mul(
                monomial, ThetaClass::basis(g, static_cast<int>(l) + 1).scaled(lambda[l]));
        sum = sum + monomial.scaled(coeff);
        return;
      }
      for (long e = 0; e <= budget; ++e) {
        idx[pos] = e;
        walk(idx, pos + 1, budget - e);
        idx[pos] = 0;
      }
    };
    MultiIndex idx(static_cast<size_t>(g) - 1, 0);
    walk(idx, 0, k);
    CHECK(sum == alt_class(data, k));
  }
}

TEST_CASE("c2 gap values and closed form") {
  CHECK(c2_gap(5) == -16);
  CHECK(c2_gap(4) == -7);
  for (int g = 4; g <= 12; ++g) {
    MultiIndex e2(static_cast<size_t>(g) - 1, 0);
    e2[1] = 1;
    const Int n = 2 * g - 2;
    const Rat direct = e_coefficient(n, g, g - 1, e2) - e_coefficient(n, g, g - 3, e2);
    const Rat closed =
        Rat(Int(-4) * (2 * g - 5) * (g + 3)) * frac(factorial(2 * g - 6), factorial(g) * factorial(g - 3));
    CHECK(direct == closed);
    CHECK(c2_gap(g) == closed);
    CHECK(c2_gap(g) != 0);
  }
  CHECK_THROWS_AS(c2_gap(3), std::invalid_argument);
}
