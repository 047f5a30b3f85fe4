#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nestrad {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or "-p/q" (decimal integers, q != 0) into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

/// "p/q", or "p" when the value is an integer.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Number of bits needed to carry `digits10` significant decimal digits (plus a few spare).
inline mpfr_prec_t bits_for_digits(std::size_t digits10) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits10) * 3.3219280948873623)) + 4;
}

/// Arbitrary-precision binary float (MPFR) carrying its own precision.
///
/// Binary operations produce a result at the larger of the operand precisions,
/// rounded to nearest. There is no global precision state.
class Real {
 public:
  explicit Real(std::size_t digits10) : digits10_(std::max<std::size_t>(digits10, 1)) {
    mpfr_init2(value_, bits_for_digits(digits10_));
    mpfr_set_zero(value_, 1);
  }

  Real(const Rational& q, std::size_t digits10) : Real(digits10) {
    mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
  }

  Real(long v, std::size_t digits10) : Real(digits10) { mpfr_set_si(value_, v, MPFR_RNDN); }

  /// 10^exponent rounded to `digits10` digits.
  static Real power_of_ten(long exponent, std::size_t digits10) {
    Real r(digits10);
    mpfr_set_ui(r.value_, 10, MPFR_RNDN);
    mpfr_pow_si(r.value_, r.value_, exponent, MPFR_RNDN);
    return r;
  }

  /// Parses a plain decimal literal such as "12", "-0.5" or "1.25e-3".
  static Real parse(std::string_view text, std::size_t digits10) {
    Real r(digits10);
    const std::string s(detail::trim(text));
    if (s.empty()) throw std::invalid_argument("empty decimal number");
    char* end = nullptr;
    mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (end != s.c_str() + s.size() || !mpfr_number_p(r.value_)) {
      throw std::invalid_argument("not a decimal number: '" + s + "'");
    }
    return r;
  }

  Real(const Real& other) : digits10_(other.digits10_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept : digits10_(other.digits10_) {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
      digits10_ = other.digits10_;
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    std::swap(digits10_, other.digits10_);
    return *this;
  }

  ~Real() { mpfr_clear(value_); }

  std::size_t digits10() const noexcept { return digits10_; }
  mpfr_srcptr get() const noexcept { return value_; }

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.digits10_, b.digits10_));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.digits10_, b.digits10_));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.digits10_, b.digits10_));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.digits10_, b.digits10_));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.digits10_);
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
  }

  /// Principal square root; NaN for negative input, so callers check the sign first.
  friend Real sqrt(const Real& a) {
    Real r(a.digits10_);
    mpfr_sqrt(r.value_, a.value_, MPFR_RNDN);
    return r;
  }
  /// Real cube root, defined for negative input.
  friend Real cbrt(const Real& a) {
    Real r(a.digits10_);
    mpfr_cbrt(r.value_, a.value_, MPFR_RNDN);
    return r;
  }
  friend Real abs(const Real& a) {
    Real r(a.digits10_);
    mpfr_abs(r.value_, a.value_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  /// Positional decimal with exactly `significant` significant digits,
  /// rounded half-to-even from the working value.
  std::string to_significant(std::size_t significant) const {
    significant = std::max<std::size_t>(significant, 1);
    if (is_zero()) {
      return significant == 1 ? std::string("0") : "0." + std::string(significant - 1, '0');
    }
    auto [digits, exp] = raw_digits(significant);
    std::string out = sign() < 0 ? "-" : "";
    const long n = static_cast<long>(digits.size());
    if (exp <= 0) {
      out += "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    } else if (exp < n) {
      out += digits.substr(0, static_cast<std::size_t>(exp)) + "." + digits.substr(static_cast<std::size_t>(exp));
    } else {
      out += digits + std::string(static_cast<std::size_t>(exp - n), '0');
    }
    return out;
  }

  /// Short scientific form such as "4.1e-7"; exact zero prints as "0".
  std::string to_scientific(std::size_t significant) const {
    significant = std::max<std::size_t>(significant, 1);
    if (is_zero()) return "0";
    auto [digits, exp] = raw_digits(significant);
    std::string out = sign() < 0 ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp - 1);
    return out;
  }

 private:
  // Unsigned digit string of length n and exponent e such that |x| ~ 0.d1d2..dn * 10^e.
  std::pair<std::string, long> raw_digits(std::size_t n) const {
    mpfr_exp_t exp = 0;
    std::unique_ptr<char, void (*)(char*)> buf(mpfr_get_str(nullptr, &exp, 10, n, value_, MPFR_RNDN),
                                               [](char* p) { mpfr_free_str(p); });
    std::string digits(buf.get());
    if (!digits.empty() && digits.front() == '-') digits.erase(0, 1);
    return {digits, static_cast<long>(exp)};
  }

  mpfr_t value_;
  std::size_t digits10_;
};

/// True when a and b agree to at least `digits` significant digits, i.e.
/// |a - b| <= |b| * 10^-digits (absolute 10^-digits when b is zero).
inline bool agree_to_digits(const Real& a, const Real& b, std::size_t digits) {
  const std::size_t work = std::max(a.digits10(), b.digits10()) + 10;
  Real scale = abs(b);
  if (scale.is_zero()) scale = Real(1L, work);
  return abs(a - b) <= scale * Real::power_of_ten(-static_cast<long>(digits), work);
}

}  // namespace nestrad
