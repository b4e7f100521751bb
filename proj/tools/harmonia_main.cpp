// Command-line front end: chord transformation, cadence enumeration, pivot
// inspection, path search, lead-sheet analysis, theory verification and DOT
// export.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "harmonia/analyze.h"
#include "harmonia/cadence.h"
#include "harmonia/chordsym.h"
#include "harmonia/dot_export.h"
#include "harmonia/modulation.h"
#include "harmonia/pitch.h"
#include "harmonia/transform.h"

namespace {

using namespace harmonia;

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

std::string pass_fail(bool ok) {
  if (!use_color()) return ok ? "[PASS]" : "[FAIL]";
  return ok ? "\x1b[32m[PASS]\x1b[0m" : "\x1b[31m[FAIL]\x1b[0m";
}

Tonality key_from_flag(const std::string& root) {
  auto pc = parse_root_name(root);
  if (!pc) throw Error("unknown key root '" + root + "'");
  return Tonality(*pc);
}

int run_transform(const std::string& chord, const std::string& word_text) {
  const auto [realized, quality] = realize_chord(parse_chord(chord));
  (void)quality;
  const TransformationWord word = parse_word(word_text);
  std::cout << chord_symbol(apply_word(word, realized)) << "\n";
  return 0;
}

int run_cadences(const std::string& key_root, int arity_flag) {
  const Tonality key = key_from_flag(key_root);
  const Arity arity = arity_flag == 3 ? Arity::Triadic : Arity::Tetradic;
  auto sets = minimal_cadential_sets(key, arity);
  std::sort(sets.begin(), sets.end(), [](const CadentialSet& a, const CadentialSet& b) {
    return a.name.value_or("~") < b.name.value_or("~");
  });
  for (const auto& s : sets) {
    std::cout << s.name.value_or("(unnamed)") << " " << to_string(s) << "  region "
              << region_letter(region_of(s)) << "  chords:";
    for (int d : s.degrees) {
      std::cout << " " << chord_symbol(degree_chord(key, {d}, arity));
    }
    std::cout << "\n";
  }
  return 0;
}

int run_pivots(const std::string& from_root, const std::string& to_root,
               const std::string& table_path) {
  const Tonality from = key_from_flag(from_root);
  const Tonality to = key_from_flag(to_root);
  const PivotTable table =
      table_path.empty() ? PivotTable::shipped() : PivotTable::load_file(table_path);

  const int interval = (to.root().value() - from.root().value() + 12) % 12;
  std::cout << "interval: +" << interval << "\n";
  std::cout << "common degree chords:\n";
  const auto common = common_degree_chords(from, to, Arity::Tetradic);
  if (common.empty()) std::cout << "  none\n";
  for (const auto& c : common) {
    std::cout << "  " << chord_symbol(c.chord) << "  "
              << roman_numeral(c.degree_in_first.index) << " in "
              << flat_name(from.root()) << " / "
              << roman_numeral(c.degree_in_second.index) << " in "
              << flat_name(to.root()) << "\n";
  }
  if (const auto* required = table.find(interval)) {
    std::cout << "quantized when degrees";
    for (int d : *required) std::cout << " " << roman_numeral(d);
    std::cout << " of " << flat_name(to.root()) << " are presented\n";
  } else {
    std::cout << "no pivot-table entry for interval +" << interval
              << " (modulation classifies as non-quantized)\n";
  }
  return 0;
}

int run_path(const std::string& from, const std::string& to,
             const std::string& gens_text) {
  const auto [from_chord, fq] = realize_chord(parse_chord(from));
  const auto [to_chord, tq] = realize_chord(parse_chord(to));
  (void)fq;
  (void)tq;
  std::vector<Generator> gens = default_path_generators();
  if (!gens_text.empty()) gens = parse_word(gens_text).gens;

  const auto word = shortest_path(from_chord, to_chord, gens);
  if (!word) {
    std::cout << "no path\n";
    return 1;
  }
  if (word->empty()) {
    std::cout << "identity (empty word)\n";
  } else {
    std::cout << to_string(*word) << "  (length " << word->size() << ")\n";
  }
  return 0;
}

int run_verify(const std::string& check) {
  std::vector<VerificationReport> reports;
  if (check == "all") {
    for (const auto& id : verification_check_ids()) {
      reports.push_back(verify_theory(id));
    }
    reports.push_back(verify_cadence_enumeration());
  } else if (check == "cadences") {
    reports.push_back(verify_cadence_enumeration());
  } else {
    reports.push_back(verify_theory(check));
  }

  bool all_ok = true;
  for (const auto& report : reports) {
    const bool ok = report.passed();
    all_ok = all_ok && ok;
    std::cout << pass_fail(ok) << " " << report.check_id << "  ("
              << report.cases_checked << " cases";
    if (!ok) std::cout << ", " << report.failures.size() << " failures";
    std::cout << ")\n";
    for (const auto& f : report.failures) {
      std::cout << "    " << f.context << ": expected " << chord_symbol(f.expected)
                << ", got " << chord_symbol(f.got) << "\n";
    }
  }
  std::cout << (all_ok ? "all checks passed" : "checks FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int run_analyze(const std::vector<std::string>& files, const AnalyzeConfig& cfg,
                const std::string& format) {
  for (size_t i = 0; i < files.size(); ++i) {
    const Progression p = parse_leadsheet_file(files[i]);
    const AnalysisReport report = analyze(p, cfg);
    if (format == "structured") {
      std::cout << to_structured_json(report);
    } else {
      if (files.size() > 1) std::cout << "== " << files[i] << " ==\n";
      std::cout << to_text(report);
    }
  }
  return 0;
}

int run_export_dot(const std::string& what, const std::string& key_root) {
  const Tonality key = key_from_flag(key_root);
  if (what == "conglomerate") {
    std::cout << conglomerate_dot(key);
  } else if (what == "prism") {
    std::cout << prism_dot(key);
  } else if (what == "cayley") {
    std::cout << cayley_dot();
  } else {
    throw Error("unknown export '" + what + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetradic neo-Riemannian harmony toolkit"};
  app.require_subcommand(1);

  std::string chord, word_text;
  auto* transform_cmd =
      app.add_subcommand("transform", "apply a transformation word to a chord");
  transform_cmd->add_option("--chord", chord, "chord symbol, e.g. Fmaj7")->required();
  transform_cmd
      ->add_option("--word", word_text,
                   "comma-separated generators applied left to right "
                   "(R42,L13,L42,P42,R,T1..T11)")
      ->required();

  std::string key_root = "C";
  int arity_flag = 4;
  auto* cadences_cmd =
      app.add_subcommand("cadences", "minimal cadential sets of a major key");
  cadences_cmd->add_option("--key", key_root, "key root, e.g. C or Bb");
  cadences_cmd->add_option("--arity", arity_flag, "3 (triads) or 4 (sevenths)")
      ->check(CLI::IsMember({3, 4}));

  std::string from_root, to_root, pivot_table_path;
  auto* pivots_cmd =
      app.add_subcommand("pivots", "common degree chords and pivot requirements");
  pivots_cmd->add_option("--from", from_root, "source key root")->required();
  pivots_cmd->add_option("--to", to_root, "target key root")->required();
  pivots_cmd->add_option("--pivot-table", pivot_table_path,
                         "pivot table config file");

  std::string path_from, path_to, gens_text;
  auto* path_cmd =
      app.add_subcommand("path", "shortest generator word between two chords");
  path_cmd->add_option("--from", path_from, "start chord symbol")->required();
  path_cmd->add_option("--to", path_to, "target chord symbol")->required();
  path_cmd->add_option("--gens", gens_text,
                       "generator set (default R42,L13,L42,P42)");

  std::vector<std::string> analyze_files;
  std::string mode_text = "degree_root", format = "text", analyze_table_path;
  int window = 4, radius = 2, cover_span = 2;
  bool no_sixth_as_tonic = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze lead-sheet files");
  analyze_cmd->add_option("files", analyze_files, "lead-sheet files (.ls)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--mode", mode_text,
                          "activation matching: exact, degree_root or cover");
  analyze_cmd->add_option("--window", window, "key/activation window in measures");
  analyze_cmd->add_option("--radius", radius,
                          "measures searched around a key change");
  analyze_cmd->add_option("--cover-span", cover_span,
                          "consecutive events pooled by cover matching");
  analyze_cmd->add_flag("--no-sixth-as-tonic", no_sixth_as_tonic,
                        "do not let sixth chords stand in for maj7");
  analyze_cmd->add_option("--pivot-table", analyze_table_path,
                          "pivot table config file");
  analyze_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string check = "all";
  auto* verify_cmd =
      app.add_subcommand("verify", "run the theory verification suite");
  verify_cmd->add_option("--check", check,
                         "check id (triangles, prism, r42_t_commute, "
                         "triadic_diagram, involutions, p42_supertonic, "
                         "cadences) or 'all'");

  std::string what = "conglomerate", dot_key = "C";
  auto* export_cmd = app.add_subcommand("export-dot", "write DOT graphs to stdout");
  export_cmd->add_option("--what", what, "conglomerate, prism or cayley")
      ->check(CLI::IsMember({"conglomerate", "prism", "cayley"}));
  export_cmd->add_option("--key", dot_key, "key root for labeled graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*transform_cmd) return run_transform(chord, word_text);
    if (*cadences_cmd) return run_cadences(key_root, arity_flag);
    if (*pivots_cmd) return run_pivots(from_root, to_root, pivot_table_path);
    if (*path_cmd) return run_path(path_from, path_to, gens_text);
    if (*verify_cmd) return run_verify(check);
    if (*export_cmd) return run_export_dot(what, dot_key);
    if (*analyze_cmd) {
      AnalyzeConfig cfg;
      auto mode = parse_match_mode(mode_text);
      if (!mode) throw Error("unknown match mode '" + mode_text + "'");
      cfg.mode = *mode;
      cfg.window_measures = window;
      cfg.passage_radius = radius;
      cfg.cover_span = cover_span;
      cfg.sixth_as_tonic = !no_sixth_as_tonic;
      if (!analyze_table_path.empty()) {
        cfg.pivot_table = PivotTable::load_file(analyze_table_path);
      }
      return run_analyze(analyze_files, cfg, format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
