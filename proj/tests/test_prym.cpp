#include <doctest.h>

#include "cmtheta/combinatorics.hpp"
#include "cmtheta/jacobian.hpp"
#include "cmtheta/prym.hpp"

using namespace cmtheta;

TEST_CASE("locus construction and validation") {
  CHECK_THROWS_AS(PrymLocus::eprime(3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrymLocus::eprime(5, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrymLocus::eprime(5, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrymLocus::eprime(5, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(PrymLocus::scycle({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrymLocus::scycle({2, 0, 3}, 0), std::invalid_argument);
  // partitions are canonicalized to nondecreasing order
  CHECK(PrymLocus::scycle({4, 1}, 0) == PrymLocus::scycle({1, 4}, 0));
  CHECK(PrymLocus::scycle({4, 1}, 0).g() == 5);
  CHECK(PrymLocus::eprime(6, 2, 1).label() == "t=2");
  CHECK(PrymLocus::scycle({2, 1, 2}, 0).label() == "d=1+2+2");
}

TEST_CASE("euler characteristics across the census") {
  // t >= 2: B_{t-1} B_{g-t} + B_t B_{g-t-1} - 2^{g-1}, general member
  const ChiVerdict e52 = euler_characteristic(PrymLocus::eprime(5, 2, 0));
  CHECK(e52.tag == ChiTag::Exact);
  CHECK(e52.value == 60); // 2*20 + 6*6 - 16

  const ChiVerdict e42 = euler_characteristic(PrymLocus::eprime(4, 2, 0));
  CHECK(e42.tag == ChiTag::Exact);
  CHECK(e42.value == 16); // 2*6 + 6*2 - 8
  CHECK(e42.note.find("generality") != std::string::npos);

  const ChiVerdict e83 = euler_characteristic(PrymLocus::eprime(8, 3, 0));
  CHECK(e83.value == 2784); // 6*252 + 20*70 - 128
  CHECK(e83.value < middle_binomial(7));

  // the base strata drop by 2k (g even) or k (g odd)
  CHECK(euler_characteristic(PrymLocus::eprime(5, 0, 0)).value == 70);
  CHECK(euler_characteristic(PrymLocus::eprime(5, 0, 2)).value == 68);
  CHECK(euler_characteristic(PrymLocus::eprime(6, 0, 1)).value == 250);
  CHECK(euler_characteristic(PrymLocus::scycle({5}, 1)).value == 69);
  CHECK(euler_characteristic(PrymLocus::scycle({1, 4}, 3)).value == 67);
  CHECK(euler_characteristic(PrymLocus::scycle({6}, 2)).value == middle_binomial(5) - 4);

  // t = 1 has only a strict bound for g >= 5, and nothing in dimension 4
  const ChiVerdict e61 = euler_characteristic(PrymLocus::eprime(6, 1, 0));
  CHECK(e61.tag == ChiTag::GreaterThan);
  CHECK(e61.value == middle_binomial(5));
  CHECK(euler_characteristic(PrymLocus::eprime(4, 1, 0)).tag == ChiTag::ExternalReference);

  // other partitions come from external references
  CHECK(euler_characteristic(PrymLocus::scycle({2, 3}, 0)).tag == ChiTag::ExternalReference);
  CHECK(euler_characteristic(PrymLocus::scycle({1, 2, 2}, 0)).tag == ChiTag::ExternalReference);
}

TEST_CASE("jacobian-dimension membership") {
  for (int g = 4; g <= 12; ++g) {
    CHECK(matches_jacobian_dimension(PrymLocus::eprime(g, 0, 0)));
    CHECK(matches_jacobian_dimension(PrymLocus::scycle({g}, 0)));
    CHECK(matches_jacobian_dimension(PrymLocus::scycle({1, g - 1}, 0)));
    for (int k = 1; k <= 3; ++k) {
      CHECK_FALSE(matches_jacobian_dimension(PrymLocus::eprime(g, 0, k)));
      CHECK_FALSE(matches_jacobian_dimension(PrymLocus::scycle({g}, k)));
      CHECK_FALSE(matches_jacobian_dimension(PrymLocus::scycle({1, g - 1}, k)));
    }
    for (int t = 1; 2 * t <= g; ++t)
      CHECK_FALSE(matches_jacobian_dimension(PrymLocus::eprime(g, t, 0)));
  }
  CHECK_FALSE(matches_jacobian_dimension(PrymLocus::scycle({2, 3}, 0)));
  CHECK_THROWS_AS(matches_jacobian_dimension(PrymLocus::scycle({1, 2}, 0)), std::invalid_argument);
}

TEST_CASE("t = 0 class table") {
  CHECK(prym_chern_mather_t0(5, 1) == ThetaClass::basis(5, 1).scaled(Rat(20)));
  for (int g = 4; g <= 12; ++g) {
    CHECK(prym_chern_mather_t0(g, g - 1) == ThetaClass::basis(g, g - 1));
    for (int r = 1; r <= g - 1; ++r) {
      const ThetaClass expected =
          ThetaClass::basis(g, r).scaled(jacobian_reference_multiplier(g, CurveCase::NonHyperelliptic, r));
      CHECK(prym_chern_mather_t0(g, r) == expected);
    }
  }
  CHECK_THROWS_AS(prym_chern_mather_t0(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(prym_chern_mather_t0(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(prym_chern_mather_t0(3, 1), std::invalid_argument);
}

TEST_CASE("t >= 1 class table") {
  // top class of E'_{5,2}: both endpoint terms collapse to 1 under B_{-1} = 0
  const BiThetaClass top = prym_chern_mather_t_pos(5, 2, 4);
  CHECK(top.entries().size() == 2);
  CHECK(top.coefficient(0, 1) == 1);
  CHECK(top.coefficient(1, 0) == 1);

  const BiThetaClass r3 = prym_chern_mather_t_pos(5, 1, 3);
  CHECK(r3.coefficient(0, 2) == 2);
  CHECK(r3.coefficient(1, 1) == 4);
  CHECK(r3.coefficient(2, 0) == 2);

  // coefficient symmetry under swapping the two factors
  for (int g = 4; g <= 9; ++g)
    for (int t = 1; 2 * t <= g; ++t)
      for (int r = 1; r <= g - 1; ++r) {
        const BiThetaClass cls = prym_chern_mather_t_pos(g, t, r);
        const int s = g - r;
        for (int a = 0; a <= s; ++a) CHECK(cls.coefficient(a, s - a) == cls.coefficient(s - a, a));
        // and the stated summand identity, term by term
        for (int a = 0; a <= s; ++a) {
          const Int direct = middle_binomial(a) * middle_binomial(s - a - 1) +
                             middle_binomial(a - 1) * middle_binomial(s - a);
          CHECK(cls.coefficient(a, s - a) == Rat(direct));
        }
      }

  CHECK_THROWS_AS(prym_chern_mather_t_pos(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(prym_chern_mather_t_pos(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(prym_chern_mather_t_pos(5, 1, 0), std::invalid_argument);
}

TEST_CASE("reduction to the criterion through the census tables") {
  for (int g = 4; g <= 12; ++g) {
    const CriterionVerdict v = criterion_check(
        g, CurveCase::NonHyperelliptic, Rat(middle_binomial(g - 1)),
        prym_chern_mather_t0(g, 1).coefficient(1), prym_chern_mather_t0(g, 2).coefficient(2), 3);
    CHECK(v.tag == VerdictTag::Jacobian);
    REQUIRE(v.reconstruction.has_value());
    CHECK(v.reconstruction->c0 == 2 * g - 2);
  }
}
