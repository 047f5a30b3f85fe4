#include <gtest/gtest.h>

#include <regex>
#include <string>
#include <vector>

#include "nestrad/config.hpp"
#include "nestrad/render.hpp"

namespace nestrad {
namespace {

std::string text(Preset p, std::uint64_t depth, bool ellipsis = true) {
  return render(preset_instance(p), depth, RenderFormat{RenderFormat::Style::Text, ellipsis});
}

std::string latex(Preset p, std::uint64_t depth, bool ellipsis = true) {
  return render(preset_instance(p), depth, RenderFormat{RenderFormat::Style::Latex, ellipsis});
}

bool balanced(const std::string& s) {
  std::vector<char> stack;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') stack.push_back(c);
    if (c == ')' || c == '}' || c == ']') {
      const char open = c == ')' ? '(' : (c == '}' ? '{' : '[');
      if (stack.empty() || stack.back() != open) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

// Reads "sqrt(<c> + <m>*<inner>)" levels back out of a Text render.
QuadraticValue parse_coefficient(std::string s) {
  if (s.size() > 1 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  static const std::regex surd(R"(^sqrt\(([0-9/]+)\)([+-][0-9/]+)?$)");
  std::smatch m;
  if (std::regex_match(s, m, surd)) {
    return QuadraticValue{Rational(1), parse_rational(m[1].str()),
                          m[2].matched ? parse_rational(m[2].str()) : Rational(0)};
  }
  return QuadraticValue::rational(parse_rational(s));
}

std::vector<std::pair<QuadraticValue, QuadraticValue>> parse_text_render(const std::string& s) {
  std::vector<std::pair<QuadraticValue, QuadraticValue>> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t open;
    if (s.compare(pos, 5, "sqrt(") == 0) {
      open = 5;
    } else if (s.compare(pos, 10, "root[3/2](") == 0) {
      open = 10;
    } else {
      break;
    }
    pos += open;
    const std::size_t plus = s.find(" + ", pos);
    const std::string c = s.substr(pos, plus - pos);
    pos = plus + 3;
    // The multiplier ends at the '*' that precedes the inner level.
    std::size_t star = pos;
    int depth = 0;
    for (; star < s.size(); ++star) {
      if (s[star] == '(') ++depth;
      if (s[star] == ')') --depth;
      if (s[star] == '*' && depth == 0) break;
    }
    const std::string m = s.substr(pos, star - pos);
    pos = star + 1;
    out.emplace_back(parse_coefficient(c), parse_coefficient(m));
  }
  return out;
}

TEST(Render, Cor1Text) { EXPECT_EQ(text(Preset::Cor1, 2), "sqrt(1 + 2*sqrt(9 + 1*…))"); }

TEST(Render, Cor3Latex) { EXPECT_EQ(latex(Preset::Cor3, 1), "\\sqrt[3/2]{11+1\\,\\cdots}"); }

TEST(Render, Cor4Text) { EXPECT_EQ(text(Preset::Cor4, 1), "sqrt(sqrt(2)-1 + (sqrt(2)-1)*…)"); }

TEST(Render, DepthTwoGoldens) {
  EXPECT_EQ(text(Preset::Cor2, 2), "sqrt(4 + 1*sqrt(16 + 1*…))");
  EXPECT_EQ(text(Preset::Cor3, 2), "root[3/2](11 + 1*root[3/2](14 + 2*…))");
  EXPECT_EQ(text(Preset::Cor4, 2), "sqrt(sqrt(2)-1 + (sqrt(2)-1)*sqrt(sqrt(3)-1 + (sqrt(3)-1)*…))");
  EXPECT_EQ(text(Preset::Classic, 3), "sqrt(1 + 2*sqrt(1 + 3*sqrt(1 + 4*…)))");
}

TEST(Render, LatexShapes) {
  EXPECT_EQ(latex(Preset::Cor1, 2), "\\sqrt{1+2\\,\\sqrt{9+1\\,\\cdots}}");
  EXPECT_EQ(latex(Preset::Cor4, 1), "\\sqrt{\\sqrt{2}-1+(\\sqrt{2}-1)\\,\\cdots}");
}

TEST(Render, WithoutEllipsisShowsZeroTail) {
  EXPECT_EQ(text(Preset::Cor1, 2, false), "sqrt(1 + 2*sqrt(9 + 1*0))");
  EXPECT_EQ(latex(Preset::Cor1, 1, false), "\\sqrt{1+2\\cdot 0}");
}

TEST(Render, NegativeAndFractionalMultipliers) {
  const SchemeInstance inst(SchemeKind::P1, Rational(1, 2), SequenceSpec::parse("5"), SequenceSpec::parse("1"));
  EXPECT_EQ(render(inst, 1, {}), "sqrt(17/2 + (-11/2)*…)");
  EXPECT_EQ(render(inst, 1, {RenderFormat::Style::Latex, true}), "\\sqrt{\\frac{17}{2}-\\frac{11}{2}\\,\\cdots}");
}

TEST(Render, DepthZeroRejected) { EXPECT_THROW(text(Preset::Cor1, 0), std::invalid_argument); }

TEST(RenderProperty, BalancedDelimiters) {
  for (Preset p : kAllPresets) {
    for (std::uint64_t d = 1; d <= 50; ++d) {
      ASSERT_TRUE(balanced(text(p, d))) << to_string(p) << " " << d;
      ASSERT_TRUE(balanced(text(p, d, false))) << to_string(p) << " " << d;
      ASSERT_TRUE(balanced(latex(p, d))) << to_string(p) << " " << d;
    }
  }
}

TEST(RenderProperty, CoefficientFidelity) {
  for (Preset p : kAllPresets) {
    const SchemeInstance inst = preset_instance(p);
    for (std::uint64_t d = 1; d <= 10; ++d) {
      const auto parsed = parse_text_render(text(p, d));
      ASSERT_EQ(parsed.size(), d);
      for (std::uint64_t i = 1; i <= d; ++i) {
        const Term t = term_at(inst, i);
        ASSERT_EQ(parsed[i - 1].first, t.c) << to_string(p) << " depth " << d << " level " << i;
        ASSERT_EQ(parsed[i - 1].second, t.m) << to_string(p) << " depth " << d << " level " << i;
      }
    }
  }
}

}  // namespace
}  // namespace nestrad
