#pragma once

// Command-line front end, kept in a header so tests can drive it in-process.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nestrad/nestrad.hpp"

namespace nestrad::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

struct Options {
  std::string config_path;
  std::string preset;
  std::uint64_t depth = 0;
  std::uint64_t max_depth = 0;
  std::string tail = "zero";
  std::size_t precision = 30;
  std::string format = "text";
  bool no_ellipsis = false;
};

inline void add_source(CLI::App* cmd, Options& o) {
  auto* cfg = cmd->add_option("--config", o.config_path, "Scheme config file (key=value lines)");
  std::vector<std::string> names;
  for (Preset p : kAllPresets) names.emplace_back(to_string(p));
  auto* pre = cmd->add_option("--preset", o.preset, "Built-in scheme")->check(CLI::IsMember(names));
  cfg->excludes(pre);
  pre->excludes(cfg);
  cmd->callback([cmd, cfg, pre] {
    if (cfg->count() == 0 && pre->count() == 0) {
      throw CLI::RequiredError(cmd->get_name() + ": one of --config or --preset");
    }
  });
}

inline void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

inline SchemeInstance load_instance(const Options& o) {
  if (!o.preset.empty()) return preset_instance(*parse_preset(o.preset));
  return make_instance(load_config(o.config_path));
}

inline std::string term_text(const Term& t) {
  return "i=" + std::to_string(t.depth) + " c=" + nestrad::detail::text_value(t.c) +
         " m=" + nestrad::detail::text_value(t.m) + " root=" + to_string(t.root_degree) +
         " S=" + to_string(t.cumulative_sum);
}

inline std::string term_csv(const Term& t) {
  return std::to_string(t.depth) + "," + to_string(t.c.alpha) + "," + to_string(t.c.s) + "," + to_string(t.c.beta) +
         "," + to_string(t.m.alpha) + "," + to_string(t.m.s) + "," + to_string(t.m.beta) + "," +
         to_string(t.root_degree) + "," + to_string(t.cumulative_sum);
}

}  // namespace detail

/// Runs one invocation. Exit codes: 0 success, 1 domain error, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, evaluate and render generalized nested radicals", "nestrad"};
  app.require_subcommand(1);
  detail::Options o;

  auto* verify = app.add_subcommand("verify-identities", "Check the three telescoping relations by exact expansion");
  detail::add_format(verify, o.format, {"text", "json"});

  auto* terms_cmd = app.add_subcommand("terms", "Dump exact term coefficients for depths 1..K");
  detail::add_source(terms_cmd, o);
  terms_cmd->add_option("--depth", o.depth, "Number of terms")->required();
  detail::add_format(terms_cmd, o.format, {"text", "json", "csv"});

  auto* eval = app.add_subcommand("eval", "Evaluate a depth-K truncation");
  detail::add_source(eval, o);
  eval->add_option("--depth", o.depth, "Truncation depth")->required();
  eval->add_option("--tail", o.tail, "zero | fixed | const:<decimal>");
  eval->add_option("--precision", o.precision, "Significant digits")->check(CLI::PositiveNumber);
  detail::add_format(eval, o.format, {"text", "json", "csv"});

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every depth 1..K");
  detail::add_source(sweep_cmd, o);
  sweep_cmd->add_option("--max-depth", o.max_depth, "Deepest truncation")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--tail", o.tail, "zero | fixed | const:<decimal>");
  sweep_cmd->add_option("--precision", o.precision, "Significant digits")->check(CLI::PositiveNumber);
  detail::add_format(sweep_cmd, o.format, {"text", "json", "csv"});

  auto* render_cmd = app.add_subcommand("render", "Render a depth-K truncation as text or LaTeX");
  detail::add_source(render_cmd, o);
  render_cmd->add_option("--depth", o.depth, "Truncation depth")->required()->check(CLI::PositiveNumber);
  render_cmd->add_flag("--no-ellipsis", o.no_ellipsis, "Write the zero tail instead of an ellipsis");
  detail::add_format(render_cmd, o.format, {"text", "latex"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::optional<TailMode> tail;
  try {
    tail = TailMode::parse(o.tail);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (verify->parsed()) {
      bool all = true;
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      for (Identity id : kAllIdentities) {
        const IdentityReport r = expand_identity(id);
        all = all && r.holds;
        if (o.format == "json") {
          reports.push_back(to_json(r));
        } else if (r.holds) {
          out << to_string(id) << " OK\n";
        } else {
          out << to_string(id) << " FAIL residual: " << r.residual.to_string(kIdentityVariables) << "\n";
        }
      }
      if (o.format == "json") out << reports.dump() << "\n";
      return all ? kOk : kDomainError;
    }

    const SchemeInstance inst = detail::load_instance(o);

    if (terms_cmd->parsed()) {
      TermGenerator gen(inst);
      if (o.format == "csv") out << "i,c_alpha,c_s,c_beta,m_alpha,m_s,m_beta,root,S\n";
      for (std::uint64_t i = 0; i < o.depth; ++i) {
        const Term t = gen.next();
        if (o.format == "json") {
          out << to_json(t).dump() << "\n";
        } else if (o.format == "csv") {
          out << detail::term_csv(t) << "\n";
        } else {
          out << detail::term_text(t) << "\n";
        }
      }
      return kOk;
    }

    if (eval->parsed()) {
      const EvalResult r = evaluate(inst, EvalSettings{o.precision, o.depth, *tail});
      if (o.format == "json") {
        out << to_json(r).dump() << "\n";
      } else if (o.format == "csv") {
        out << to_csv(std::span<const EvalResult>(&r, 1));
      } else {
        out << r.value << "\n";
      }
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      const std::vector<EvalResult> rows = sweep(inst, o.max_depth, *tail, o.precision);
      if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump() << "\n";
      } else if (o.format == "csv") {
        out << to_csv(rows);
      } else {
        for (const auto& r : rows) out << r.depth << "  " << r.value << "  " << r.abs_error << "\n";
      }
      return kOk;
    }

    if (render_cmd->parsed()) {
      RenderFormat fmt;
      fmt.style = o.format == "latex" ? RenderFormat::Style::Latex : RenderFormat::Style::Text;
      fmt.ellipsis = !o.no_ellipsis;
      out << render(inst, o.depth, fmt) << "\n";
      return kOk;
    }
  } catch (const nestrad::Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace nestrad::cli
