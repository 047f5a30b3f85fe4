#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "nestrad/numeric.hpp"

namespace nestrad {

/// Exponent vector over a fixed set of N variables.
template <std::size_t N>
using Monomial = std::array<unsigned, N>;

/// Graded lexicographic order, highest term first: total degree, then
/// exponents compared variable by variable in declaration order.
template <std::size_t N>
struct GrlexGreater {
  bool operator()(const Monomial<N>& a, const Monomial<N>& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored, so the zero polynomial has no terms.
template <std::size_t N, class Coeff = Rational>
class Polynomial {
 public:
  using Term = std::pair<const Monomial<N>, Coeff>;
  using Terms = std::map<Monomial<N>, Coeff, GrlexGreater<N>>;

  Polynomial() = default;

  static Polynomial constant(const Coeff& c) {
    Polynomial p;
    p.add_term(Monomial<N>{}, c);
    return p;
  }

  static Polynomial variable(std::size_t var, unsigned power = 1) {
    if (var >= N) throw std::out_of_range("polynomial variable index");
    Monomial<N> m{};
    m[var] = power;
    Polynomial p;
    p.add_term(m, Coeff(1));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  void add_term(const Monomial<N>& m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial<N> m;
        for (std::size_t k = 0; k < N; ++k) m[k] = ma[k] + mb[k];
        out.add_term(m, Coeff(ca * cb));
      }
    }
    return out;
  }

  friend Polynomial operator*(const Coeff& s, const Polynomial& p) { return constant(s) * p; }

  friend Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial out = constant(Coeff(1));
    for (unsigned k = 0; k < e; ++k) out = out * p;
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Reduces modulo var^2 - replacement, where `replacement` must not contain var.
  /// Every var^e with e >= 2 becomes var^(e mod 2) * replacement^(e div 2).
  Polynomial reduce_square(std::size_t var, const Polynomial& replacement) const {
    if (replacement.degree_in(var) != 0) {
      throw std::invalid_argument("square-reduction replacement must not contain the reduced variable");
    }
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m[var] < 2) {
        out.add_term(m, c);
        continue;
      }
      Monomial<N> rest = m;
      rest[var] = m[var] % 2;
      Polynomial mono;
      mono.add_term(rest, c);
      out += mono * pow(replacement, m[var] / 2);
    }
    return out;
  }

  /// Exact evaluation at a point.
  Coeff evaluate(const std::array<Coeff, N>& point) const {
    Coeff sum(0);
    for (const auto& [m, c] : terms_) {
      Coeff term = c;
      for (std::size_t k = 0; k < N; ++k) {
        for (unsigned e = 0; e < m[k]; ++e) term *= point[k];
      }
      sum += term;
    }
    return sum;
  }

  /// Human-readable form like "x^2 - 2*n*a + 3/2"; "0" for the zero polynomial.
  std::string to_string(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      Coeff mag = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t k = 0; k < N; ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[k];
        if (m[k] > 1) mono += "^" + std::to_string(m[k]);
      }
      if (mono.empty()) {
        out += nestrad::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += nestrad::to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace nestrad
