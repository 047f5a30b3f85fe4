#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nestrad/errors.hpp"
#include "nestrad/numeric.hpp"
#include "nestrad/poly.hpp"

namespace nestrad {

/// The three telescoping relations:
///   P1: x^2 = n^2 + a n + a x + (x - n - a)(x + n)
///   P2: x^3 = 2n^3 + 3n^2 x + (x - 2n)(x + n)^2
///   P3: x^2 = a t - n + (t - a) t,  t = sqrt(x^2 + n)
enum class Identity { P1, P2, P3 };

inline constexpr std::array<Identity, 3> kAllIdentities{Identity::P1, Identity::P2, Identity::P3};

inline std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::P1:
      return "P1";
    case Identity::P2:
      return "P2";
    case Identity::P3:
      return "P3";
  }
  return "?";
}

/// Polynomials over (x, n, a, t) in that variable order.
using IdentityPoly = Polynomial<4>;

namespace var {
inline constexpr std::size_t x = 0;
inline constexpr std::size_t n = 1;
inline constexpr std::size_t a = 2;
inline constexpr std::size_t t = 3;
}  // namespace var

inline constexpr std::array<std::string_view, 4> kIdentityVariables{"x", "n", "a", "t"};

struct IdentityReport {
  Identity id;
  IdentityPoly residual;
  bool holds;
};

/// Expands RHS - LHS of the chosen relation exactly. For P3 the square root is
/// the atom t and the result is reduced modulo t^2 - (x^2 + n).
inline IdentityReport expand_identity(Identity id) {
  const auto x = IdentityPoly::variable(var::x);
  const auto n = IdentityPoly::variable(var::n);
  const auto a = IdentityPoly::variable(var::a);
  const auto t = IdentityPoly::variable(var::t);
  const auto c = [](long v) { return IdentityPoly::constant(Rational(v)); };

  IdentityPoly residual;
  switch (id) {
    case Identity::P1:
      residual = n * n + a * n + a * x + (x - n - a) * (x + n) - x * x;
      break;
    case Identity::P2:
      residual = c(2) * pow(n, 3) + c(3) * n * n * x + (x - c(2) * n) * pow(x + n, 2) - pow(x, 3);
      break;
    case Identity::P3: {
      const IdentityPoly raw = a * t - n + (t - a) * t - x * x;
      residual = raw.reduce_square(var::t, x * x + n);
      break;
    }
  }
  const bool holds = residual.is_zero();
  return IdentityReport{id, std::move(residual), holds};
}

namespace detail {

// p + q*sqrt(s) for a fixed radicand s.
struct Surd {
  Rational p;
  Rational q;
};

inline Surd mul(const Surd& u, const Surd& v, const Rational& s) {
  return Surd{u.p * v.p + u.q * v.q * s, u.p * v.q + u.q * v.p};
}

}  // namespace detail

/// RHS - LHS of the relation at a rational point, computed exactly. For P3 the
/// arithmetic runs in Q(sqrt(x^2 + n)), so no square root is ever approximated.
inline Rational check_numeric(Identity id, const Rational& x, const Rational& n, const Rational& a) {
  switch (id) {
    case Identity::P1:
      return Rational(n * n + a * n + a * x + (x - n - a) * (x + n) - x * x);
    case Identity::P2: {
      const Rational shifted = x + n;
      return Rational(2 * n * n * n + 3 * n * n * x + (x - 2 * n) * shifted * shifted - x * x * x);
    }
    case Identity::P3: {
      const Rational s = x * x + n;
      if (s < 0) throw NegativeRadicand(0, "x^2 + n = " + to_string(s) + " < 0");
      const detail::Surd t{Rational(0), Rational(1)};
      const detail::Surd t_minus_a{Rational(-a), Rational(1)};
      const detail::Surd prod = detail::mul(t_minus_a, t, s);
      const detail::Surd total{Rational(prod.p - n - x * x), Rational(a * t.q + prod.q)};
      if (total.q != 0) {
        throw std::logic_error("P3 residual has a nonzero sqrt(x^2+n) component");
      }
      return total.p;
    }
  }
  throw std::logic_error("unreachable identity");
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(to_string(r.id));
  j["holds"] = r.holds;
  j["residual_terms"] = r.residual.size();
  return j;
}

}  // namespace nestrad
