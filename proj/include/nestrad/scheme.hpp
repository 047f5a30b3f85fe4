#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nestrad/errors.hpp"
#include "nestrad/numeric.hpp"
#include "nestrad/seqspec.hpp"

namespace nestrad {

/// Iteration schemes: P1 (degree 2, F(x) = x), P2 (root degree 3/2, G(x) = x^2),
/// P3 (degree 2 with sqrt(x^2 + S) shifts, H(x) = x).
enum class SchemeKind { P1, P2, P3 };

inline std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::P1:
      return "p1";
    case SchemeKind::P2:
      return "p2";
    case SchemeKind::P3:
      return "p3";
  }
  return "?";
}

/// Exact number alpha*sqrt(s) + beta with s >= 0.
struct QuadraticValue {
  Rational alpha{0};
  Rational s{0};
  Rational beta{0};

  static QuadraticValue rational(Rational value) { return {Rational(0), Rational(0), std::move(value)}; }
  static QuadraticValue surd(Rational alpha, Rational s, Rational beta) {
    if (s < 0) throw std::invalid_argument("QuadraticValue radicand must be nonnegative");
    return {std::move(alpha), std::move(s), std::move(beta)};
  }

  bool is_rational() const { return alpha == 0; }

  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
    return a.alpha == b.alpha && a.s == b.s && a.beta == b.beta;
  }
};

inline nlohmann::ordered_json to_json(const QuadraticValue& q) {
  nlohmann::ordered_json j;
  j["alpha"] = to_string(q.alpha);
  j["s"] = to_string(q.s);
  j["beta"] = to_string(q.beta);
  return j;
}

class SchemeInstance {
 public:
  /// Throws std::invalid_argument for P3 with x < 0.
  SchemeInstance(SchemeKind kind, Rational x, SequenceSpec a, SequenceSpec n)
      : kind_(kind), x_(std::move(x)), a_(std::move(a)), n_(std::move(n)) {
    if (kind_ == SchemeKind::P3 && x_ < 0) {
      throw std::invalid_argument("scheme p3 requires x >= 0");
    }
  }

  /// P2 has no a-sequence.
  static SchemeInstance p2(Rational x, SequenceSpec n) {
    return SchemeInstance(SchemeKind::P2, std::move(x), SequenceSpec::constant(Rational(0)), std::move(n));
  }

  SchemeKind kind() const noexcept { return kind_; }
  const Rational& x() const noexcept { return x_; }
  const SequenceSpec& a() const noexcept { return a_; }
  const SequenceSpec& n() const noexcept { return n_; }

  /// Root degree of every level: 2, or 3/2 for P2.
  Rational root_degree() const { return kind_ == SchemeKind::P2 ? Rational(3, 2) : Rational(2); }

  /// The value every truncation approximates: x for P1/P3, x^2 for P2.
  Rational limit() const { return kind_ == SchemeKind::P2 ? Rational(x_ * x_) : x_; }

 private:
  SchemeKind kind_;
  Rational x_;
  SequenceSpec a_;
  SequenceSpec n_;
};

/// One nesting level: the radicand at depth i is c + m * (value of level i+1).
struct Term {
  std::uint64_t depth;
  QuadraticValue c;
  QuadraticValue m;
  Rational root_degree;
  Rational cumulative_sum;  // S_i = n_1 + ... + n_i
};

inline nlohmann::ordered_json to_json(const Term& t) {
  nlohmann::ordered_json j;
  j["i"] = t.depth;
  j["c"] = to_json(t.c);
  j["m"] = to_json(t.m);
  j["root"] = to_string(t.root_degree);
  j["S"] = to_string(t.cumulative_sum);
  return j;
}

/// Produces terms at depths 1, 2, 3, ... in order, carrying the running sum
/// S_{i-1} so the shifted argument x + S_{i-1} costs O(1) per level.
class TermGenerator {
 public:
  explicit TermGenerator(const SchemeInstance& inst) : inst_(&inst) {}
  explicit TermGenerator(SchemeInstance&&) = delete;

  std::uint64_t depth() const noexcept { return depth_; }
  const Rational& cumulative_sum() const noexcept { return sum_; }

  Term next() {
    const std::uint64_t i = depth_ + 1;
    const Rational n = inst_->n().at(i);
    const Rational& x = inst_->x();
    const Rational shifted = x + sum_;
    Term t{i, {}, {}, inst_->root_degree(), Rational(sum_ + n)};
    switch (inst_->kind()) {
      case SchemeKind::P1: {
        const Rational a = inst_->a().at(i);
        t.c = QuadraticValue::rational(n * n + a * n + a * shifted);
        t.m = QuadraticValue::rational(shifted - n - a);
        break;
      }
      case SchemeKind::P2:
        t.c = QuadraticValue::rational(2 * n * n * n + 3 * n * n * shifted);
        t.m = QuadraticValue::rational(shifted - 2 * n);
        break;
      case SchemeKind::P3: {
        const Rational a = inst_->a().at(i);
        const Rational s = x * x + t.cumulative_sum;
        if (s < 0) throw NegativeRadicand(i, "x^2 + S_i = " + to_string(s) + " < 0");
        t.c = QuadraticValue{a, s, Rational(-n)};
        t.m = QuadraticValue{Rational(1), s, Rational(-a)};
        break;
      }
    }
    depth_ = i;
    sum_ = t.cumulative_sum;
    return t;
  }

 private:
  const SchemeInstance* inst_;
  std::uint64_t depth_ = 0;
  Rational sum_{0};
};

/// Terms at depths 1..k.
inline std::vector<Term> terms(const SchemeInstance& inst, std::uint64_t k) {
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(k));
  TermGenerator gen(inst);
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(gen.next());
  return out;
}

/// Exact coefficients of the i-th nested term (i >= 1).
inline Term term_at(const SchemeInstance& inst, std::uint64_t i) {
  if (i < 1) throw std::invalid_argument("term depth must be >= 1");
  TermGenerator gen(inst);
  for (std::uint64_t k = 1; k < i; ++k) gen.next();
  return gen.next();
}

/// S_k = n_1 + ... + n_k.
inline Rational cumulative_sum(const SchemeInstance& inst, std::uint64_t k) {
  Rational sum(0);
  for (std::uint64_t i = 1; i <= k; ++i) sum += inst.n().at(i);
  return sum;
}

/// Fixed-point tail given S_k directly: x + S_k (P1), (x + S_k)^2 (P2),
/// sqrt(x^2 + S_k) (P3). `k` only labels errors.
inline QuadraticValue fixed_point_at_sum(const SchemeInstance& inst, const Rational& sum, std::uint64_t k) {
  switch (inst.kind()) {
    case SchemeKind::P1:
      return QuadraticValue::rational(inst.x() + sum);
    case SchemeKind::P2: {
      const Rational shifted = inst.x() + sum;
      return QuadraticValue::rational(shifted * shifted);
    }
    case SchemeKind::P3: {
      const Rational s = inst.x() * inst.x() + sum;
      if (s < 0) throw NegativeRadicand(k, "x^2 + S_k = " + to_string(s) + " < 0");
      return QuadraticValue{Rational(1), s, Rational(0)};
    }
  }
  throw std::logic_error("unreachable scheme kind");
}

/// Exact value of the iterated function at truncation depth k.
inline QuadraticValue fixed_point_tail(const SchemeInstance& inst, std::uint64_t k) {
  return fixed_point_at_sum(inst, cumulative_sum(inst, k), k);
}

/// Named instances reproducing the classic radical and the four corollaries.
enum class Preset { Classic, Cor1, Cor2, Cor3, Cor4 };

inline constexpr std::array<Preset, 5> kAllPresets{Preset::Cor1, Preset::Cor2, Preset::Cor3, Preset::Cor4,
                                                   Preset::Classic};

inline std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Classic:
      return "classic";
    case Preset::Cor1:
      return "cor1";
    case Preset::Cor2:
      return "cor2";
    case Preset::Cor3:
      return "cor3";
    case Preset::Cor4:
      return "cor4";
  }
  return "?";
}

/// Closed-form multiplier at depth i for a preset, written independently of
/// the generator so it can serve as a cross-check:
///   cor1: 5 + i^2 - 4i    cor2: i^2 - 3(i - 1)    cor3: i
///   cor4: sqrt(i + 1) - 1 classic: i + 1
inline QuadraticValue corollary_coefficient(Preset p, std::uint64_t i) {
  const Rational k(Integer(std::to_string(i), 10));
  switch (p) {
    case Preset::Cor1:
      return QuadraticValue::rational(5 + k * k - 4 * k);
    case Preset::Cor2:
      return QuadraticValue::rational(k * k - 3 * (k - 1));
    case Preset::Cor3:
      return QuadraticValue::rational(k);
    case Preset::Cor4:
      return QuadraticValue{Rational(1), Rational(k + 1), Rational(-1)};
    case Preset::Classic:
      return QuadraticValue::rational(k + 1);
  }
  throw std::logic_error("unreachable preset");
}

}  // namespace nestrad
