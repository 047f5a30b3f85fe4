#include <gtest/gtest.h>

#include <random>

#include "nestrad/algebra.hpp"
#include "support/oracle.hpp"

namespace nestrad {
namespace {

TEST(ExpandIdentity, AllThreeRelationsHaveZeroResidual) {
  for (Identity id : kAllIdentities) {
    const IdentityReport r = expand_identity(id);
    EXPECT_TRUE(r.holds) << to_string(id) << ": " << r.residual.to_string(kIdentityVariables);
    EXPECT_TRUE(r.residual.is_zero());
  }
}

TEST(ExpandIdentity, P3NeedsTheSideRelation) {
  // Without reduction the t^2 term survives; the reduction is what closes it.
  const auto x = IdentityPoly::variable(var::x), n = IdentityPoly::variable(var::n),
             a = IdentityPoly::variable(var::a), t = IdentityPoly::variable(var::t);
  const IdentityPoly raw = a * t - n + (t - a) * t - x * x;
  EXPECT_FALSE(raw.is_zero());
  EXPECT_EQ(raw.to_string(kIdentityVariables), "-x^2 + t^2 - n");
}

TEST(ExpandIdentity, ReportJson) {
  EXPECT_EQ(to_json(expand_identity(Identity::P1)).dump(), R"({"identity":"P1","holds":true,"residual_terms":0})");
}

TEST(CheckNumeric, Goldens) {
  EXPECT_EQ(check_numeric(Identity::P1, Rational(3), Rational(1), Rational(0)), 0);
  EXPECT_EQ(check_numeric(Identity::P2, Rational(3), Rational(1), Rational(0)), 0);
  EXPECT_EQ(check_numeric(Identity::P3, Rational(1), Rational(1), Rational(1)), 0);
}

TEST(CheckNumeric, P3NegativeRadicand) {
  EXPECT_THROW(check_numeric(Identity::P3, Rational(1), Rational(-2), Rational(0)), NegativeRadicand);
  EXPECT_EQ(check_numeric(Identity::P3, Rational(1), Rational(-1), Rational(5)), 0);  // x^2 + n == 0
}

TEST(CheckNumericProperty, ZeroOnRandomRationals) {
  std::mt19937_64 rng(1911);
  int p3_checked = 0;
  for (int k = 0; k < 400; ++k) {
    const Rational x = testing::random_rational(rng, 1'000'000, 1'000'000);
    const Rational n = testing::random_rational(rng, 1'000'000, 1'000'000);
    const Rational a = testing::random_rational(rng, 1'000'000, 1'000'000);
    ASSERT_EQ(check_numeric(Identity::P1, x, n, a), 0);
    ASSERT_EQ(check_numeric(Identity::P2, x, n, a), 0);
    if (x * x + n >= 0) {
      ASSERT_EQ(check_numeric(Identity::P3, x, n, a), 0);
      ++p3_checked;
    }
    // Rational-square radicand: n = t^2 - x^2.
    const Rational t = testing::random_rational(rng, 1'000'000, 1'000'000);
    ASSERT_EQ(check_numeric(Identity::P3, x, t * t - x * x, a), 0);
  }
  EXPECT_GT(p3_checked, 100);
}

}  // namespace
}  // namespace nestrad
