#pragma once

#include <cstddef>
#include <cstdint>
#include <regex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nestrad/errors.hpp"
#include "nestrad/numeric.hpp"
#include "nestrad/scheme.hpp"

namespace nestrad {

/// Value placed at the innermost position of a truncation.
class TailMode {
 public:
  enum class Kind { Zero, FixedPoint, Const };

  static TailMode zero() { return TailMode(Kind::Zero, {}); }
  static TailMode fixed_point() { return TailMode(Kind::FixedPoint, {}); }
  /// `decimal` must be a finite nonnegative decimal such as "2", "0.5" or "3.25".
  static TailMode constant(std::string decimal) {
    static const std::regex kDecimal(R"(^([0-9]+(\.[0-9]*)?|\.[0-9]+)$)");
    if (!std::regex_match(decimal, kDecimal)) {
      throw std::invalid_argument("tail constant must be a nonnegative decimal, got '" + decimal + "'");
    }
    return TailMode(Kind::Const, std::move(decimal));
  }

  /// "zero", "fixed" or "const:<decimal>".
  static TailMode parse(std::string_view text) {
    if (text == "zero") return zero();
    if (text == "fixed") return fixed_point();
    if (text.starts_with("const:")) return constant(std::string(text.substr(6)));
    throw std::invalid_argument("tail must be zero, fixed or const:<decimal>, got '" + std::string(text) + "'");
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& constant_text() const noexcept { return constant_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Zero:
        return "zero";
      case Kind::FixedPoint:
        return "fixed";
      case Kind::Const:
        return "const:" + constant_;
    }
    return "?";
  }

  friend bool operator==(const TailMode&, const TailMode&) = default;

 private:
  TailMode(Kind kind, std::string constant) : kind_(kind), constant_(std::move(constant)) {}

  Kind kind_;
  std::string constant_;
};

struct EvalSettings {
  std::size_t precision = 30;
  std::uint64_t depth = 0;
  TailMode tail = TailMode::zero();
};

struct EvalResult {
  std::uint64_t depth;
  TailMode tail;
  std::size_t precision;
  std::string value;      // P significant digits, round-half-even
  std::string limit;      // x for P1/P3, x^2 for P2
  std::string abs_error;  // |value - limit| at working precision, short scientific
  Real value_real;        // unrounded, at working precision
  Real abs_error_real;
};

/// Working precision for output precision P at depth k: P + 10 + ceil(k/2) digits.
inline std::size_t working_digits(std::size_t precision, std::uint64_t depth) {
  return precision + 10 + static_cast<std::size_t>((depth + 1) / 2);
}

/// alpha*sqrt(s) + beta at `digits` significant digits (principal root).
inline Real realize(const QuadraticValue& q, std::size_t digits) {
  Real beta(q.beta, digits);
  if (q.alpha == 0) return beta;
  return Real(q.alpha, digits) * sqrt(Real(q.s, digits)) + beta;
}

namespace detail {

inline Real tail_value(const SchemeInstance& inst, std::span<const Term> levels, const TailMode& tail,
                       std::size_t digits) {
  switch (tail.kind()) {
    case TailMode::Kind::Zero:
      return Real(digits);
    case TailMode::Kind::FixedPoint: {
      const Rational sum = levels.empty() ? Rational(0) : levels.back().cumulative_sum;
      return realize(fixed_point_at_sum(inst, sum, levels.size()), digits);
    }
    case TailMode::Kind::Const:
      return Real::parse(tail.constant_text(), digits);
  }
  throw std::logic_error("unreachable tail kind");
}

// Radicands whose magnitude is below this many digits of their parts are
// indistinguishable from an exact zero at working precision.
inline constexpr std::size_t kZeroRadicandSlack = 5;

/// Backward recursion over `levels` (depths 1..k), innermost first. Iterative
/// so arbitrarily deep truncations use constant stack.
inline EvalResult evaluate_levels(const SchemeInstance& inst, std::span<const Term> levels, const TailMode& tail,
                                  std::size_t precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  const std::uint64_t k = levels.size();
  const std::size_t digits = working_digits(precision, k);
  const bool cube = inst.kind() == SchemeKind::P2;

  Real value = tail_value(inst, levels, tail, digits);
  for (std::size_t idx = levels.size(); idx-- > 0;) {
    const Term& term = levels[idx];
    const Real c = realize(term.c, digits);
    const Real scaled = realize(term.m, digits) * value;
    Real radicand = c + scaled;
    if (cube) {
      const Real root = cbrt(radicand);
      value = root * root;
      continue;
    }
    // Inside the noise band either sign is an exact zero; sqrt of a tiny
    // positive leftover would otherwise cost half the working digits.
    const Real parts = abs(c) + abs(scaled);
    const Real slack = parts * Real::power_of_ten(-static_cast<long>(digits - kZeroRadicandSlack), digits);
    if (abs(radicand) <= slack) {
      radicand = Real(digits);
    } else if (radicand.sign() < 0) {
      throw NegativeRadicand(term.depth, "radicand " + radicand.to_scientific(6) + " < 0");
    }
    value = sqrt(radicand);
  }

  const Rational limit = inst.limit();
  const Real limit_real(limit, digits);
  Real err = abs(value - limit_real);
  return EvalResult{k,
                    tail,
                    precision,
                    value.to_significant(precision),
                    is_integer(limit) ? to_string(limit) : limit_real.to_significant(precision),
                    err.to_scientific(2),
                    std::move(value),
                    std::move(err)};
}

}  // namespace detail

/// Depth-k truncation evaluated at settings.precision significant digits.
inline EvalResult evaluate(const SchemeInstance& inst, const EvalSettings& settings) {
  const std::vector<Term> levels = terms(inst, settings.depth);
  return detail::evaluate_levels(inst, levels, settings.tail, settings.precision);
}

/// One result per depth 1..max_depth, ordered by depth. Terms are generated
/// once; each depth is an independent backward recursion over a prefix.
inline std::vector<EvalResult> sweep(const SchemeInstance& inst, std::uint64_t max_depth, const TailMode& tail,
                                     std::size_t precision) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  const std::vector<Term> levels = terms(inst, max_depth);
  std::vector<EvalResult> out;
  out.reserve(levels.size());
  for (std::size_t d = 1; d <= levels.size(); ++d) {
    out.push_back(detail::evaluate_levels(inst, std::span<const Term>(levels).first(d), tail, precision));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const EvalResult& r) {
  nlohmann::ordered_json j;
  j["depth"] = r.depth;
  j["tail"] = r.tail.to_string();
  j["precision"] = r.precision;
  j["value"] = r.value;
  j["limit"] = r.limit;
  j["abs_error"] = r.abs_error;
  return j;
}

/// Sweep table with header "depth,value,abs_error".
inline std::string to_csv(std::span<const EvalResult> rows) {
  std::string out = "depth,value,abs_error\n";
  for (const auto& r : rows) {
    out += std::to_string(r.depth) + "," + r.value + "," + r.abs_error + "\n";
  }
  return out;
}

}  // namespace nestrad
