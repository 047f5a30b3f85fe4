#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestrad/numeric.hpp"
#include "nestrad/scheme.hpp"

namespace nestrad {

struct RenderFormat {
  enum class Style { Text, Latex };
  Style style = Style::Text;
  /// Show "…" (Text) or "\cdots" (Latex) at the innermost position; otherwise
  /// the truncation's zero tail is written out.
  bool ellipsis = true;
};

namespace detail {

inline std::string latex_rational(const Rational& q) {
  if (is_integer(q)) return to_string(q);
  const Integer num = abs(q.get_num());
  return std::string(q < 0 ? "-" : "") + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string text_value(const QuadraticValue& q) {
  if (q.alpha == 0) return to_string(q.beta);
  const std::string root = "sqrt(" + to_string(q.s) + ")";
  std::string out;
  if (q.alpha == 1) {
    out = root;
  } else if (q.alpha == -1) {
    out = "-" + root;
  } else if (is_integer(q.alpha)) {
    out = to_string(q.alpha) + "*" + root;
  } else {
    out = "(" + to_string(q.alpha) + ")*" + root;
  }
  if (q.beta > 0) out += "+" + to_string(q.beta);
  if (q.beta < 0) out += to_string(q.beta);
  return out;
}

inline std::string latex_value(const QuadraticValue& q) {
  if (q.alpha == 0) return latex_rational(q.beta);
  const std::string root = "\\sqrt{" + latex_rational(q.s) + "}";
  std::string out;
  if (q.alpha == 1) {
    out = root;
  } else if (q.alpha == -1) {
    out = "-" + root;
  } else {
    out = latex_rational(q.alpha) + root;
  }
  if (q.beta > 0) out += "+" + latex_rational(q.beta);
  if (q.beta < 0) out += latex_rational(q.beta);
  return out;
}

// A multiplier that is an integer or a bare sqrt(s) needs no grouping.
inline bool is_atomic_multiplier(const QuadraticValue& m) {
  if (m.alpha == 0) return is_integer(m.beta);
  return m.alpha == 1 && m.beta == 0;
}

}  // namespace detail

/// Depth-k truncation as a nested radical with pre-evaluated coefficients, e.g.
///   Text:  sqrt(1 + 2*sqrt(9 + 1*…))
///   Latex: \sqrt[3/2]{11+1\,\sqrt[3/2]{14+2\,\cdots}}
inline std::string render(const SchemeInstance& inst, std::uint64_t depth, const RenderFormat& fmt) {
  if (depth < 1) throw std::invalid_argument("render depth must be >= 1");
  const std::vector<Term> levels = terms(inst, depth);
  const bool latex = fmt.style == RenderFormat::Style::Latex;
  const bool cube = inst.kind() == SchemeKind::P2;
  std::string out;
  for (const Term& t : levels) {
    if (latex) {
      out += cube ? "\\sqrt[3/2]{" : "\\sqrt{";
      out += detail::latex_value(t.c);
      const bool negative = t.m.alpha == 0 && t.m.beta < 0;
      std::string m = detail::latex_value(negative ? QuadraticValue::rational(Rational(-t.m.beta)) : t.m);
      if (!t.m.is_rational() && !detail::is_atomic_multiplier(t.m)) m = "(" + m + ")";
      out += (negative ? "-" : "+") + m;
      out += fmt.ellipsis || t.depth < depth ? "\\," : "\\cdot ";
    } else {
      out += cube ? "root[3/2](" : "sqrt(";
      out += detail::text_value(t.c);
      std::string m = detail::text_value(t.m);
      if (!detail::is_atomic_multiplier(t.m)) m = "(" + m + ")";
      out += " + " + m + "*";
    }
  }
  if (fmt.ellipsis) {
    out += latex ? "\\cdots" : "…";
  } else {
    out += "0";
  }
  out.append(levels.size(), latex ? '}' : ')');
  return out;
}

}  // namespace nestrad
