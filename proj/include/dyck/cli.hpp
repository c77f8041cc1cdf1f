#pragma once

// Command-line front end. Data goes to the output stream, diagnostics to
// the error stream. Exit codes: 0 success, 1 invalid word input, 2 a
// verification check failed, 3 usage error (including exhaustive-limit
// refusals). DYCKZETA_MAX_N overrides the default exhaustive limit; the
// verify subcommand's --limit flag wins over both.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "area_sequence.hpp"
#include "lab.hpp"
#include "render.hpp"
#include "serialize.hpp"
#include "statistics.hpp"
#include "text.hpp"
#include "zeta.hpp"

namespace dyck::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 1;
inline constexpr int exit_verification_failure = 2;
inline constexpr int exit_usage = 3;

inline constexpr const char* limit_env_var = "DYCKZETA_MAX_N";

namespace detail {

inline int parse_word_arg(const std::string& text, std::ostream& err,
                          area_sequence& out_word) {
  const auto parsed = parse_word_text(text);
  if (!parsed.ok) {
    err << "error: cannot parse word at letter " << parsed.position << ": "
        << parsed.message << "\n";
    return exit_invalid_input;
  }
  const auto report = validate(parsed.letters);
  if (!report.valid) {
    err << "error: not a valid area sequence: position "
        << report.violation->position << ": " << describe(report.violation->rule)
        << "\n";
    return exit_invalid_input;
  }
  out_word = area_sequence::unchecked(parsed.letters);
  return exit_ok;
}

inline int resolve_limit(const std::optional<int>& flag, std::ostream& err,
                         int& out_limit) {
  out_limit = lab::default_exhaustive_limit;
  if (const char* raw = std::getenv(limit_env_var)) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(raw, &used);
      if (used != std::string(raw).size() || value < 0)
        throw std::invalid_argument(raw);
      out_limit = value;
    } catch (const std::exception&) {
      err << "error: " << limit_env_var << "='" << raw
          << "' is not a non-negative integer\n";
      return exit_usage;
    }
  }
  if (flag) out_limit = *flag;
  return exit_ok;
}

inline void emit_json(const json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
}

inline int reject_csv(const std::string& subcommand, std::ostream& err) {
  err << "error: --format csv is not supported for '" << subcommand
      << "' (use text or json)\n";
  return exit_usage;
}

inline std::string csv_quoted(const std::string& field) {
  return "\"" + field + "\"";
}

template <typename Sequence>
std::string join(const Sequence& values) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out.push_back(',');
    out += std::to_string(v);
    first = false;
  }
  return out;
}

// --- subcommand bodies ------------------------------------------------------

inline int run_stats(const std::string& word_text, const std::string& format,
                     std::ostream& out, std::ostream& err) {
  area_sequence w;
  if (int code = parse_word_arg(word_text, err, w)) return code;
  if (format == "csv") return reject_csv("stats", err);
  if (format == "json") {
    emit_json(stats_report_json(w), out);
    return exit_ok;
  }
  const auto dp = dinv_profile::of(w);
  const auto bp = bounce_profile::of(w);
  out << "w               = " << to_text(w) << "\n"
      << "n               = " << w.size() << "\n"
      << "area            = " << area(w) << "\n"
      << "dinv            = " << dp.total << "\n"
      << "dinv_profile    = " << join(dp.d) << "\n"
      << "bounce          = " << bp.bounce << "\n"
      << "bounce_sequence = " << join(bp.b) << "\n"
      << "bounces         = " << join(bp.bounces) << "\n";
  return exit_ok;
}

inline int run_map(const std::string& word_text, bool with_trace,
                   const std::string& format, std::ostream& out,
                   std::ostream& err) {
  area_sequence w;
  if (int code = parse_word_arg(word_text, err, w)) return code;
  if (format == "csv") return reject_csv("map", err);
  if (with_trace) {
    const auto trace = zeta_inverse_trace(w);
    if (format == "json") {
      emit_json(map_report_json(w, trace.final_image(), &trace), out);
      return exit_ok;
    }
    for (const auto& s : trace.steps)
      out << "letter " << s.letter << " -> position " << s.position << " : "
          << to_text(s.image) << "\n";
    out << to_text(trace.final_image()) << "\n";
    return exit_ok;
  }
  const auto image = zeta_inverse(w);
  if (format == "json") {
    emit_json(map_report_json(w, image), out);
    return exit_ok;
  }
  out << to_text(image) << "\n";
  return exit_ok;
}

inline int run_unmap(const std::string& word_text, const std::string& format,
                     std::ostream& out, std::ostream& err) {
  area_sequence w;
  if (int code = parse_word_arg(word_text, err, w)) return code;
  if (format == "csv") return reject_csv("unmap", err);
  const auto image = zeta(w);
  if (format == "json") {
    emit_json(map_report_json(w, image), out);
    return exit_ok;
  }
  out << to_text(image) << "\n";
  return exit_ok;
}

inline int run_insertions(const std::string& word_text,
                          const std::string& format, std::ostream& out,
                          std::ostream& err) {
  area_sequence w;
  if (int code = parse_word_arg(word_text, err, w)) return code;
  if (format == "csv") return reject_csv("insertions", err);
  const auto admissible = admissible_insertions::of(w);
  if (format == "json") {
    emit_json(insertions_report_json(w, admissible), out);
    return exit_ok;
  }
  out << "maxb  = " << join(admissible.maxb) << "\n"
      << "maxa  = " << join(admissible.maxa) << "\n"
      << "i0    = "
      << (admissible.i0 ? std::to_string(*admissible.i0) : std::string("none"))
      << "\n"
      << "order = " << join(admissible.order) << "\n";
  return exit_ok;
}

inline int run_enumerate(int n, bool with_stats, const std::string& format,
                         std::ostream& out, std::ostream& err) {
  int limit = 0;
  if (int code = resolve_limit(std::nullopt, err, limit)) return code;
  try {
    lab::require_within_limit(n, limit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (format == "json") {
    json j;
    j["n"] = n;
    j["count"] = catalan(n);
    json words = json::array();
    for_each_area_sequence(n, [&](const area_sequence& w) {
      if (with_stats) {
        json entry;
        entry["w"] = w.to_vector();
        entry["area"] = area(w);
        entry["dinv"] = dinv(w);
        entry["bounce"] = bounce(w);
        words.push_back(std::move(entry));
      } else {
        words.push_back(w.to_vector());
      }
    });
    j["words"] = std::move(words);
    emit_json(j, out);
    return exit_ok;
  }
  if (format == "csv") {
    out << (with_stats ? "w,area,dinv,bounce\n" : "w\n");
    for_each_area_sequence(n, [&](const area_sequence& w) {
      out << csv_quoted(to_text(w));
      if (with_stats)
        out << "," << area(w) << "," << dinv(w) << "," << bounce(w);
      out << "\n";
    });
    return exit_ok;
  }
  for_each_area_sequence(n, [&](const area_sequence& w) {
    out << to_text(w);
    if (with_stats)
      out << " " << area(w) << " " << dinv(w) << " " << bounce(w);
    out << "\n";
  });
  return exit_ok;
}

inline int run_verify(int n, const std::string& checks_text,
                      const std::optional<int>& limit_flag,
                      const std::string& format, std::ostream& out,
                      std::ostream& err) {
  int limit = 0;
  if (int code = resolve_limit(limit_flag, err, limit)) return code;
  if (format == "csv") return reject_csv("verify", err);

  std::vector<lab::check> checks;
  if (checks_text == "all" || checks_text.empty()) {
    checks.assign(lab::all_checks.begin(), lab::all_checks.end());
  } else {
    std::size_t begin = 0;
    while (begin <= checks_text.size()) {
      const std::size_t end =
          std::min(checks_text.find(',', begin), checks_text.size());
      const std::string token = checks_text.substr(begin, end - begin);
      const auto parsed = lab::parse_check(token);
      if (!parsed) {
        err << "error: unknown check '" << token
            << "' (valid: count, roundtrip, bijection, inverse, dinv_area, "
               "bounce_area, eq3, prop4, dual, symmetry, or 'all')\n";
        return exit_usage;
      }
      checks.push_back(*parsed);
      if (end == checks_text.size()) break;
      begin = end + 1;
    }
  }

  lab::verify_report report;
  try {
    lab::verify_options options;
    options.limit = limit;
    report = lab::verify(n, checks, options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (format == "json") {
    emit_json(verify_report_json(report), out);
  } else {
    out << "n = " << report.n << " (" << catalan(report.n) << " sequences)\n";
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (c.counterexample)
        out << "  counterexample = " << to_text(*c.counterexample);
      out << "\n";
    }
    out << "elapsed " << report.elapsed.count() << " ms\n";
  }
  if (!report.all_pass()) {
    err << "verification failed\n";
    return exit_verification_failure;
  }
  return exit_ok;
}

inline int run_matrix(int n, const std::string& pair_text,
                      const std::string& format, std::ostream& out,
                      std::ostream& err) {
  int limit = 0;
  if (int code = resolve_limit(std::nullopt, err, limit)) return code;

  const auto comma = pair_text.find(',');
  const auto s1 = lab::parse_statistic(pair_text.substr(0, comma));
  const auto s2 = comma == std::string::npos
                      ? std::nullopt
                      : lab::parse_statistic(pair_text.substr(comma + 1));
  if (!s1 || !s2) {
    err << "error: --pair expects two of area,dinv,bounce (got '" << pair_text
        << "')\n";
    return exit_usage;
  }

  lab::qt_matrix matrix;
  try {
    matrix = lab::qt_matrix::build(n, *s1, *s2, limit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (format == "json") {
    emit_json(matrix_report_json(matrix), out);
    return exit_ok;
  }
  if (format == "csv") {
    out << matrix.to_csv();
    return exit_ok;
  }
  // Aligned table for humans.
  std::uint64_t widest = 1;
  for (const auto& row : matrix.counts())
    for (std::uint64_t cell : row) widest = std::max(widest, cell);
  const int cell_width = static_cast<int>(std::to_string(widest).size()) + 1;
  const int label_width =
      static_cast<int>(std::to_string(matrix.side() - 1).size());
  out << lab::to_string(matrix.row_statistic()) << "\\"
      << lab::to_string(matrix.col_statistic()) << "\n";
  out << std::setw(label_width) << "";
  for (int c = 0; c < matrix.side(); ++c)
    out << std::setw(cell_width) << c;
  out << "\n";
  for (int r = 0; r < matrix.side(); ++r) {
    out << std::setw(label_width) << r;
    for (int c = 0; c < matrix.side(); ++c)
      out << std::setw(cell_width) << matrix.at(r, c);
    out << "\n";
  }
  return exit_ok;
}

inline int run_render(const std::string& word_text, bool with_bounce,
                      const std::string& format, std::ostream& out,
                      std::ostream& err) {
  area_sequence w;
  if (int code = parse_word_arg(word_text, err, w)) return code;
  if (format == "csv") return reject_csv("render", err);
  std::string grid;
  try {
    grid = render_grid(w, {with_bounce});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  if (format == "json") {
    json j;
    j["w"] = w.to_vector();
    json rows = json::array();
    std::size_t begin = 0;
    while (begin < grid.size()) {
      const std::size_t end = std::min(grid.find('\n', begin), grid.size());
      rows.push_back(grid.substr(begin, end - begin));
      begin = end + 1;
    }
    j["grid"] = std::move(rows);
    emit_json(j, out);
    return exit_ok;
  }
  if (!grid.empty()) out << grid << "\n";
  return exit_ok;
}

}  // namespace detail

/// Parses argv-style arguments (program name excluded) and dispatches.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Dyck path statistics and the zeta map on area sequences"};
  app.name("dyckzeta");
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int exit_code = exit_ok;

  std::string stats_word;
  auto* stats_cmd =
      app.add_subcommand("stats", "area, dinv and bounce of a word");
  stats_cmd->fallthrough();
  stats_cmd->add_option("word", stats_word, "area sequence")->required();
  stats_cmd->callback(
      [&] { exit_code = detail::run_stats(stats_word, format, out, err); });

  std::string map_word;
  bool map_trace = false;
  auto* map_cmd = app.add_subcommand(
      "map", "image under the inverse zeta map (area -> dinv)");
  map_cmd->fallthrough();
  map_cmd->add_option("word", map_word, "area sequence")->required();
  map_cmd->add_flag("--trace", map_trace, "print one line per insertion");
  map_cmd->callback([&] {
    exit_code = detail::run_map(map_word, map_trace, format, out, err);
  });

  std::string unmap_word;
  auto* unmap_cmd =
      app.add_subcommand("unmap", "image under the zeta map (dinv -> area)");
  unmap_cmd->fallthrough();
  unmap_cmd->add_option("word", unmap_word, "area sequence")->required();
  unmap_cmd->callback(
      [&] { exit_code = detail::run_unmap(unmap_word, format, out, err); });

  std::string insertions_word;
  auto* insertions_cmd = app.add_subcommand(
      "insertions", "admissible insertion positions of a word");
  insertions_cmd->fallthrough();
  insertions_cmd->add_option("word", insertions_word, "area sequence")
      ->required();
  insertions_cmd->callback([&] {
    exit_code = detail::run_insertions(insertions_word, format, out, err);
  });

  int enumerate_n = 0;
  bool enumerate_stats = false;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "all area sequences of a size");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("n", enumerate_n, "path size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--with-stats", enumerate_stats,
                          "append area, dinv and bounce");
  enumerate_cmd->callback([&] {
    exit_code =
        detail::run_enumerate(enumerate_n, enumerate_stats, format, out, err);
  });

  int verify_n = 0;
  std::string verify_checks = "all";
  std::optional<int> verify_limit;
  auto* verify_cmd =
      app.add_subcommand("verify", "run invariant suites exhaustively");
  verify_cmd->fallthrough();
  verify_cmd->add_option("n", verify_n, "path size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--checks", verify_checks,
                         "comma-separated check names, or 'all'");
  verify_cmd->add_option("--limit", verify_limit,
                         "override the exhaustive size limit");
  verify_cmd->callback([&] {
    exit_code = detail::run_verify(verify_n, verify_checks, verify_limit,
                                   format, out, err);
  });

  int matrix_n = 0;
  std::string matrix_pair;
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "joint distribution matrix of two statistics");
  matrix_cmd->fallthrough();
  matrix_cmd->add_option("n", matrix_n, "path size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix_cmd->add_option("--pair", matrix_pair, "statistic pair, e.g. dinv,area")
      ->required();
  matrix_cmd->callback([&] {
    exit_code = detail::run_matrix(matrix_n, matrix_pair, format, out, err);
  });

  std::string render_word;
  bool render_bounce = false;
  auto* render_cmd =
      app.add_subcommand("render", "draw the path on its grid");
  render_cmd->fallthrough();
  render_cmd->add_option("word", render_word, "area sequence")->required();
  render_cmd->add_flag("--bounce", render_bounce, "overlay the bounce path");
  render_cmd->callback([&] {
    exit_code = detail::run_render(render_word, render_bounce, format, out, err);
  });

  try {
    std::reverse(args.begin(), args.end());  // CLI11 consumes args backwards
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_code;
}

}  // namespace dyck::cli
