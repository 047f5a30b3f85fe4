#include <gtest/gtest.h>

#include "nestrad/config.hpp"
#include "nestrad/scheme.hpp"

namespace nestrad {
namespace {

QuadraticValue rat(long v) { return QuadraticValue::rational(Rational(v)); }

TEST(TermAt, Cor1SecondLevel) {
  const Term t = term_at(preset_instance(Preset::Cor1), 2);
  EXPECT_EQ(t.c, rat(9));
  EXPECT_EQ(t.m, rat(1));
  EXPECT_EQ(t.cumulative_sum, Rational(4));
  EXPECT_EQ(t.root_degree, Rational(2));
}

TEST(TermAt, Cor3FirstLevel) {
  const Term t = term_at(preset_instance(Preset::Cor3), 1);
  EXPECT_EQ(t.c, rat(11));
  EXPECT_EQ(t.m, rat(1));
  EXPECT_EQ(t.root_degree, Rational(3, 2));
}

TEST(TermAt, Cor4FirstLevel) {
  const Term t = term_at(preset_instance(Preset::Cor4), 1);
  EXPECT_EQ(t.c, (QuadraticValue{Rational(1), Rational(2), Rational(-1)}));
  EXPECT_EQ(t.m, (QuadraticValue{Rational(1), Rational(2), Rational(-1)}));
}

TEST(TermAt, ClassicThirdLevel) {
  const Term t = term_at(preset_instance(Preset::Classic), 3);
  EXPECT_EQ(t.c, rat(1));
  EXPECT_EQ(t.m, rat(4));
}

TEST(TermAt, DepthZeroIsRejected) {
  EXPECT_THROW(term_at(preset_instance(Preset::Cor1), 0), std::invalid_argument);
}

TEST(TermAt, P3NegativeRadicandNamesDepth) {
  const SchemeInstance inst(SchemeKind::P3, Rational(1), SequenceSpec::constant(Rational(0)),
                            SequenceSpec::constant(Rational(-1, 2)));
  EXPECT_NO_THROW(term_at(inst, 1));  // 1 - 1/2
  EXPECT_NO_THROW(term_at(inst, 2));  // 1 - 1 == 0
  try {
    term_at(inst, 3);
    FAIL() << "expected NegativeRadicand";
  } catch (const NegativeRadicand& e) {
    EXPECT_EQ(e.depth(), 3u);
  }
}

TEST(TermAt, SequenceErrorsPropagate) {
  const SchemeInstance inst(SchemeKind::P1, Rational(3), SequenceSpec::parse("0"), SequenceSpec::parse("1,2"));
  EXPECT_NO_THROW(term_at(inst, 2));
  EXPECT_THROW(term_at(inst, 3), IndexOutOfRange);
  const SchemeInstance div(SchemeKind::P1, Rational(3), SequenceSpec::parse("1/(i-2)"), SequenceSpec::parse("1"));
  EXPECT_THROW(term_at(div, 2), DivisionByZero);
}

TEST(TermAt, NegativeMultipliersAreAllowed) {
  const SchemeInstance inst(SchemeKind::P1, Rational(1), SequenceSpec::parse("5"), SequenceSpec::parse("1"));
  EXPECT_EQ(term_at(inst, 1).m, rat(-5));
}

TEST(SchemeInstance, P3RequiresNonnegativeX) {
  EXPECT_THROW(SchemeInstance(SchemeKind::P3, Rational(-1), SequenceSpec::parse("1"), SequenceSpec::parse("1")),
               std::invalid_argument);
}

TEST(FixedPointTail, Goldens) {
  EXPECT_EQ(fixed_point_tail(preset_instance(Preset::Cor1), 2), rat(7));
  EXPECT_EQ(fixed_point_tail(preset_instance(Preset::Cor3), 1), rat(16));
  EXPECT_EQ(fixed_point_tail(preset_instance(Preset::Cor4), 3),
            (QuadraticValue{Rational(1), Rational(4), Rational(0)}));
  EXPECT_EQ(fixed_point_tail(preset_instance(Preset::Cor1), 0), rat(3));
}

TEST(CorollaryCoefficient, Goldens) {
  EXPECT_EQ(corollary_coefficient(Preset::Cor1, 1), rat(2));
  EXPECT_EQ(corollary_coefficient(Preset::Cor2, 2), rat(1));
  EXPECT_EQ(corollary_coefficient(Preset::Cor3, 4), rat(4));
}

TEST(SchemeProperty, MultipliersMatchClosedForms) {
  for (Preset p : kAllPresets) {
    const auto levels = terms(preset_instance(p), 200);
    for (const Term& t : levels) {
      ASSERT_EQ(t.m, corollary_coefficient(p, t.depth)) << to_string(p) << " i=" << t.depth;
    }
  }
}

TEST(SchemeProperty, Cor1ArgumentShiftDerivation) {
  // 3 + (i-1)^2 - (2i-1) == 5 + i^2 - 4i, with (i-1)^2 = sum of the first i-1 odd numbers.
  const auto levels = terms(preset_instance(Preset::Cor1), 200);
  for (const Term& t : levels) {
    const Rational i(static_cast<long>(t.depth));
    const Rational prev_sum = t.cumulative_sum - (2 * i - 1);
    ASSERT_EQ(prev_sum, (i - 1) * (i - 1));
    ASSERT_EQ(Rational(3 + prev_sum - (2 * i - 1)), Rational(5 + i * i - 4 * i));
  }
}

TEST(SchemeProperty, CumulativeSumAndRationalCoefficients) {
  for (Preset p : kAllPresets) {
    const SchemeInstance inst = preset_instance(p);
    const auto levels = terms(inst, 50);
    Rational sum(0);
    for (const Term& t : levels) {
      sum += inst.n().at(t.depth);
      ASSERT_EQ(t.cumulative_sum, sum);
      ASSERT_EQ(term_at(inst, t.depth).c, t.c);
      if (inst.kind() != SchemeKind::P3) {
        ASSERT_TRUE(t.c.is_rational() && t.m.is_rational());
      }
    }
  }
}

TEST(SchemeProperty, ClassicMultipliersAreIPlusOne) {
  const auto levels = terms(preset_instance(Preset::Classic), 200);
  for (const Term& t : levels) ASSERT_EQ(t.m, rat(static_cast<long>(t.depth) + 1));
}

TEST(TermJson, Row) {
  EXPECT_EQ(to_json(term_at(preset_instance(Preset::Cor1), 2)).dump(),
            R"({"i":2,"c":{"alpha":"0","s":"0","beta":"9"},"m":{"alpha":"0","s":"0","beta":"1"},"root":"2","S":"4"})");
  EXPECT_EQ(to_json(term_at(preset_instance(Preset::Cor3), 1))["root"], "3/2");
}

}  // namespace
}  // namespace nestrad
