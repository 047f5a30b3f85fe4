#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "nestrad/errors.hpp"
#include "nestrad/numeric.hpp"
#include "nestrad/scheme.hpp"
#include "nestrad/seqspec.hpp"

namespace nestrad {

/// Flat scheme description as read from a config file:
///
///   # Corollary 1
///   kind = p1
///   x = 3
///   a = 0
///   n = 2*i-1
///
/// Sequence values are an expression in i, a rational constant, or a comma list.
struct Config {
  std::string kind;
  std::string x;
  std::optional<std::string> a;
  std::string n;
};

inline Config parse_config(std::string_view text) {
  Config cfg;
  bool seen_kind = false, seen_x = false, seen_n = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key=value");
    }
    const std::string key(detail::trim(body.substr(0, eq)));
    const std::string value(detail::trim(body.substr(eq + 1)));
    const auto claim = [&](bool& seen) {
      if (seen) throw ConfigError(key, "duplicate key");
      seen = true;
    };
    if (key == "kind") {
      claim(seen_kind);
      cfg.kind = value;
    } else if (key == "x") {
      claim(seen_x);
      cfg.x = value;
    } else if (key == "a") {
      if (cfg.a) throw ConfigError(key, "duplicate key");
      cfg.a = value;
    } else if (key == "n") {
      claim(seen_n);
      cfg.n = value;
    } else {
      throw ConfigError(key.empty() ? "line " + std::to_string(line_no) : key, "unknown key");
    }
  }
  if (!seen_kind) throw ConfigError("kind", "missing");
  if (!seen_x) throw ConfigError("x", "missing");
  if (!seen_n) throw ConfigError("n", "missing");
  return cfg;
}

inline Config load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_config(buf.str());
}

namespace detail {

inline SequenceSpec config_sequence(const std::string& key, const std::string& text) {
  try {
    return SequenceSpec::parse(text);
  } catch (const Error& err) {
    throw ConfigError(key, err.what());
  } catch (const std::invalid_argument& err) {
    throw ConfigError(key, err.what());
  }
}

}  // namespace detail

/// Validates a config; every failure is a ConfigError naming the offending key.
/// The a-sequence is ignored for p2.
inline SchemeInstance make_instance(const Config& cfg) {
  SchemeKind kind;
  if (cfg.kind == "p1") {
    kind = SchemeKind::P1;
  } else if (cfg.kind == "p2") {
    kind = SchemeKind::P2;
  } else if (cfg.kind == "p3") {
    kind = SchemeKind::P3;
  } else {
    throw ConfigError("kind", "expected p1, p2 or p3, got '" + cfg.kind + "'");
  }
  Rational x;
  try {
    x = parse_rational(cfg.x);
  } catch (const std::invalid_argument& err) {
    throw ConfigError("x", err.what());
  }
  SequenceSpec n = detail::config_sequence("n", cfg.n);
  if (kind == SchemeKind::P2) return SchemeInstance::p2(std::move(x), std::move(n));
  if (!cfg.a) throw ConfigError("a", "missing (required for " + cfg.kind + ")");
  SequenceSpec a = detail::config_sequence("a", *cfg.a);
  try {
    return SchemeInstance(kind, std::move(x), std::move(a), std::move(n));
  } catch (const std::invalid_argument& err) {
    throw ConfigError("x", err.what());
  }
}

inline std::optional<Preset> parse_preset(std::string_view name) {
  for (Preset p : kAllPresets) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

inline Config preset_config(Preset p) {
  switch (p) {
    case Preset::Classic:
      return {"p1", "3", "0", "1"};
    case Preset::Cor1:
      return {"p1", "3", "0", "2*i-1"};
    case Preset::Cor2:
      return {"p1", "3", "0", "2*i"};
    case Preset::Cor3:
      return {"p2", "3", std::nullopt, "1"};
    case Preset::Cor4:
      return {"p3", "1", "1", "1"};
  }
  throw std::logic_error("unreachable preset");
}

inline SchemeInstance preset_instance(Preset p) { return make_instance(preset_config(p)); }

}  // namespace nestrad
