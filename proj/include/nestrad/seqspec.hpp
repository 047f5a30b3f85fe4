#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nestrad/errors.hpp"
#include "nestrad/expr.hpp"
#include "nestrad/numeric.hpp"

namespace nestrad {

/// Definition of a sequence a_1, a_2, ... indexed from 1.
class SequenceSpec {
 public:
  struct Constant {
    Rational value;
  };
  struct ClosedForm {
    Expr expr;
  };
  struct Explicit {
    std::vector<Rational> values;
  };
  using Variant = std::variant<Constant, ClosedForm, Explicit>;

  static SequenceSpec constant(Rational value) { return SequenceSpec(Constant{std::move(value)}); }
  static SequenceSpec closed_form(Expr expr) { return SequenceSpec(ClosedForm{std::move(expr)}); }
  static SequenceSpec explicit_list(std::vector<Rational> values) {
    if (values.empty()) throw std::invalid_argument("explicit sequence must not be empty");
    return SequenceSpec(Explicit{std::move(values)});
  }

  /// Reads the textual forms used in config files:
  ///   "1,3,5,7"  explicit list (each entry "p" or "p/q"),
  ///   "3/2"      constant,
  ///   "2*i-1"    closed form in i.
  static SequenceSpec parse(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s.empty()) throw SyntaxError(0, "empty sequence");
    if (s.find(',') != std::string_view::npos) {
      std::vector<Rational> values;
      std::size_t start = 0;
      for (;;) {
        const std::size_t comma = s.find(',', start);
        const std::string_view item = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
        try {
          values.push_back(parse_rational(item));
        } catch (const std::invalid_argument& err) {
          throw SyntaxError(start, err.what());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return explicit_list(std::move(values));
    }
    try {
      return constant(parse_rational(s));
    } catch (const std::invalid_argument&) {
    }
    return closed_form(parse_expr(s));
  }

  const Variant& variant() const noexcept { return value_; }

  /// Exact i-th element (i >= 1).
  Rational at(std::uint64_t i) const {
    if (i < 1) throw IndexOutOfRange(i, length_hint());
    return std::visit(
        [i](const auto& v) -> Rational {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return v.value;
          } else if constexpr (std::is_same_v<T, ClosedForm>) {
            return evaluate(v.expr, i);
          } else {
            if (i > v.values.size()) throw IndexOutOfRange(i, v.values.size());
            return v.values[i - 1];
          }
        },
        value_);
  }

  /// Text accepted back by parse().
  std::string to_string() const {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return nestrad::to_string(v.value);
          } else if constexpr (std::is_same_v<T, ClosedForm>) {
            return print_expr(v.expr);
          } else {
            std::string out;
            for (std::size_t k = 0; k < v.values.size(); ++k) {
              if (k) out += ',';
              out += nestrad::to_string(v.values[k]);
            }
            return out;
          }
        },
        value_);
  }

 private:
  explicit SequenceSpec(Variant v) : value_(std::move(v)) {}

  std::size_t length_hint() const {
    if (const auto* e = std::get_if<Explicit>(&value_)) return e->values.size();
    return 0;
  }

  Variant value_;
};

inline Rational eval_seq(const SequenceSpec& spec, std::uint64_t i) { return spec.at(i); }

}  // namespace nestrad
