#pragma once

// Test-only oracles. Nothing here goes through term_at, TermGenerator or
// nestrad::Real: coefficients come from the closed forms of each preset and
// the recursion runs on the raw MPFR C API.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "nestrad/expr.hpp"
#include "nestrad/numeric.hpp"

namespace nestrad::testing {

enum class OraclePreset { Classic, Cor1, Cor2, Cor3, Cor4 };

/// Backward recursion with zero tail for a preset, at `bits` of precision.
/// Returns |R_0 - limit| as a double (enough for threshold comparisons) and
/// optionally the value itself in decimal.
struct OracleResult {
  double abs_error;
  std::string value;  // 60 significant digits
};

inline OracleResult oracle_zero_tail(OraclePreset p, std::uint64_t depth, mpfr_prec_t bits = 340) {
  mpfr_t r, c, m, u;
  mpfr_inits2(bits, r, c, m, u, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(r, 1);
  for (std::uint64_t i = depth; i >= 1; --i) {
    const long k = static_cast<long>(i);
    switch (p) {
      case OraclePreset::Classic:
        mpfr_set_si(c, 1, MPFR_RNDN);
        mpfr_set_si(m, k + 1, MPFR_RNDN);
        break;
      case OraclePreset::Cor1:
        mpfr_set_si(c, (2 * k - 1) * (2 * k - 1), MPFR_RNDN);
        mpfr_set_si(m, k * k - 4 * k + 5, MPFR_RNDN);
        break;
      case OraclePreset::Cor2:
        mpfr_set_si(c, 4 * k * k, MPFR_RNDN);
        mpfr_set_si(m, k * k - 3 * k + 3, MPFR_RNDN);
        break;
      case OraclePreset::Cor3:
        mpfr_set_si(c, 8 + 3 * k, MPFR_RNDN);
        mpfr_set_si(m, k, MPFR_RNDN);
        break;
      case OraclePreset::Cor4:
        mpfr_set_si(c, k + 1, MPFR_RNDN);
        mpfr_sqrt(c, c, MPFR_RNDN);
        mpfr_sub_ui(c, c, 1, MPFR_RNDN);
        mpfr_set(m, c, MPFR_RNDN);
        break;
    }
    mpfr_mul(u, m, r, MPFR_RNDN);
    mpfr_add(u, u, c, MPFR_RNDN);
    if (p == OraclePreset::Cor3) {
      mpfr_cbrt(r, u, MPFR_RNDN);
      mpfr_sqr(r, r, MPFR_RNDN);
    } else {
      mpfr_sqrt(r, u, MPFR_RNDN);
    }
  }
  const long limit = p == OraclePreset::Cor3 ? 9 : (p == OraclePreset::Cor4 ? 1 : 3);
  mpfr_sub_si(u, r, limit, MPFR_RNDN);
  mpfr_abs(u, u, MPFR_RNDN);
  OracleResult out{mpfr_get_d(u, MPFR_RNDN), {}};
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.59Re", r);
  out.value = buf;
  mpfr_clears(r, c, m, u, static_cast<mpfr_ptr>(nullptr));
  return out;
}

/// Uniform rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Uniform rational in [lo, hi] on a grid of step 1/den.
inline Rational random_rational_in(std::mt19937_64& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> num(lo * den, hi * den);
  Rational q(num(rng), den);
  q.canonicalize();
  return q;
}

/// Random structurally valid AST of depth <= max_depth.
inline Expr random_expr(std::mt19937_64& rng, int max_depth) {
  std::uniform_int_distribution<int> pick(0, max_depth <= 1 ? 1 : 8);
  std::uniform_int_distribution<long> lit(0, 50);
  const int choice = pick(rng);
  switch (choice) {
    case 0:
      return Expr::literal(lit(rng));
    case 1:
      return Expr::index();
    case 2:
      return Expr::negate(random_expr(rng, max_depth - 1));
    case 3:
      return Expr::add(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1));
    case 4:
      return Expr::sub(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1));
    case 5:
      return Expr::mul(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1));
    case 6:
      return Expr::div(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1));
    default: {
      std::uniform_int_distribution<int> shape(0, 2);
      std::uniform_int_distribution<long> small(0, 3);
      Expr exponent = Expr::literal(small(rng));
      switch (shape(rng)) {
        case 1:
          exponent = Expr::negate(Expr::literal(small(rng) + 1));
          break;
        case 2:
          exponent = Expr::power(Expr::literal(small(rng) % 3), Expr::literal(small(rng)));
          break;
        default:
          break;
      }
      return Expr::power(random_expr(rng, max_depth - 1), exponent);
    }
  }
}

}  // namespace nestrad::testing
