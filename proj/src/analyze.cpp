#include "harmonia/analyze.h"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "harmonia/transform.h"

namespace harmonia {

std::string_view match_mode_name(MatchMode m) {
  switch (m) {
    case MatchMode::Exact: return "exact";
    case MatchMode::DegreeRoot: return "degree_root";
    case MatchMode::Cover: return "cover";
  }
  return "?";
}

std::optional<MatchMode> parse_match_mode(std::string_view text) {
  if (text == "exact") return MatchMode::Exact;
  if (text == "degree_root") return MatchMode::DegreeRoot;
  if (text == "cover") return MatchMode::Cover;
  return std::nullopt;
}

std::vector<Event> realize_events(const Progression& p) {
  std::vector<Event> events;
  int index = 0;
  for (size_t m = 0; m < p.measures.size(); ++m) {
    const auto& measure = p.measures[m];
    for (const auto& chord : measure) {
      Event e;
      e.measure = static_cast<int>(m) + 1;
      e.event_index = index++;
      e.chord = chord;
      auto [realized, quality] = realize_chord(chord);
      e.realized = realized;
      e.quality = quality.label;
      e.weight = 1.0 / static_cast<double>(measure.size());
      events.push_back(std::move(e));
    }
  }
  return events;
}

namespace {

struct KeyContext {
  Tonality key;
  std::array<RootedChord, 7> tetrads;
  std::array<int, 12> degree_of_pc{};  // 0 = not a degree root, else 1..7

  explicit KeyContext(const Tonality& k)
      : key(k),
        tetrads{degree_chord(k, {1}, Arity::Tetradic),
                degree_chord(k, {2}, Arity::Tetradic),
                degree_chord(k, {3}, Arity::Tetradic),
                degree_chord(k, {4}, Arity::Tetradic),
                degree_chord(k, {5}, Arity::Tetradic),
                degree_chord(k, {6}, Arity::Tetradic),
                degree_chord(k, {7}, Arity::Tetradic)} {
    for (int d = 1; d <= 7; ++d) {
      degree_of_pc[tetrads[d - 1].root().value()] = d;
    }
  }
};

// Altered and extended chords realize to Other and never match by root.
bool eligible_for_root_match(const Event& e) {
  return e.quality != Quality::Other;
}

int kind_rank(MatchMode m) {
  switch (m) {
    case MatchMode::Exact: return 0;
    case MatchMode::DegreeRoot: return 1;
    case MatchMode::Cover: return 2;
  }
  return 3;
}

void sort_matches(std::vector<DegreeMatch>& matches) {
  std::sort(matches.begin(), matches.end(),
            [](const DegreeMatch& a, const DegreeMatch& b) {
              if (a.measure != b.measure) return a.measure < b.measure;
              if (a.event_index != b.event_index) {
                return a.event_index < b.event_index;
              }
              if (a.degree.index != b.degree.index) {
                return a.degree.index < b.degree.index;
              }
              return kind_rank(a.kind) < kind_rank(b.kind);
            });
}

void add_event_match(const Event& e, const KeyContext& ctx, MatchMode mode,
                     const AnalyzeConfig& cfg, std::vector<DegreeMatch>& out) {
  const int d = ctx.degree_of_pc[e.realized.root().value()];
  if (d == 0) return;
  const bool exact = e.realized == ctx.tetrads[d - 1];
  if (mode == MatchMode::Exact && !exact) return;
  if (mode == MatchMode::DegreeRoot && !exact && !eligible_for_root_match(e)) {
    return;
  }

  DegreeMatch m;
  m.measure = e.measure;
  m.end_measure = e.measure;
  m.event_index = e.event_index;
  m.chord = e.chord;
  m.degree = {d};
  m.kind = exact ? MatchMode::Exact : MatchMode::DegreeRoot;
  m.strength = exact ? 2 : 1;
  if (!exact && cfg.sixth_as_tonic && e.quality == Quality::Sixth && d == 1) {
    m.tonic_substitute = true;
    m.note = "sixth chord standing in for the tonic seventh";
  } else if (!exact && e.quality == Quality::AugDom7 && d == 5) {
    m.note = "augmented dominant heard as V by root";
  }
  out.push_back(std::move(m));
}

void add_cover_matches(const std::vector<Event>& events, const KeyContext& ctx,
                       const AnalyzeConfig& cfg, int first_m, int last_m,
                       std::vector<DegreeMatch>& out) {
  std::vector<const Event*> in_range;
  for (const auto& e : events) {
    if (e.measure >= first_m && e.measure <= last_m) in_range.push_back(&e);
  }
  if (in_range.empty()) return;
  const int span = std::max(1, cfg.cover_span);
  const int runs = std::max(1, static_cast<int>(in_range.size()) - span + 1);

  for (int start = 0; start < runs; ++start) {
    const int end = std::min<int>(start + span, static_cast<int>(in_range.size()));
    std::set<int> union_pcs;
    std::string run_text;
    for (int i = start; i < end; ++i) {
      for (int pc : in_range[i]->realized.pitch_classes()) union_pcs.insert(pc);
      if (!run_text.empty()) run_text += "+";
      run_text += render_chord(in_range[i]->chord);
    }
    for (int d = 1; d <= 7; ++d) {
      bool covered = true;
      for (int pc : ctx.tetrads[d - 1].pitch_classes()) {
        if (!union_pcs.contains(pc)) {
          covered = false;
          break;
        }
      }
      if (!covered) continue;
      DegreeMatch m;
      m.measure = in_range[start]->measure;
      m.end_measure = in_range[end - 1]->measure;
      m.event_index = in_range[start]->event_index;
      m.chord = in_range[start]->chord;
      m.degree = {d};
      m.kind = MatchMode::Cover;
      m.strength = 1;
      m.note = "covered by " + run_text;
      out.push_back(std::move(m));
    }
  }
}

std::vector<DegreeMatch> matches_in_range(const std::vector<Event>& events,
                                          const KeyContext& ctx, MatchMode mode,
                                          const AnalyzeConfig& cfg, int first_m,
                                          int last_m) {
  std::vector<DegreeMatch> out;
  if (mode == MatchMode::Cover) {
    add_cover_matches(events, ctx, cfg, first_m, last_m, out);
  } else {
    for (const auto& e : events) {
      if (e.measure < first_m || e.measure > last_m) continue;
      add_event_match(e, ctx, mode, cfg, out);
    }
  }
  sort_matches(out);
  return out;
}

double window_score(const std::vector<Event>& events, const KeyContext& ctx,
                    int first_m, int last_m) {
  double score = 0.0;
  for (const auto& e : events) {
    if (e.measure < first_m || e.measure > last_m) continue;
    const int d = ctx.degree_of_pc[e.realized.root().value()];
    if (d == 0) continue;
    if (e.realized == ctx.tetrads[d - 1]) {
      score += 2.0;
    } else if (eligible_for_root_match(e)) {
      score += 1.0;
    }
  }
  return score;
}

}  // namespace

std::vector<DegreeMatch> match_degrees(const Progression& p, const Tonality& key,
                                       MatchMode mode, const AnalyzeConfig& cfg) {
  const auto events = realize_events(p);
  KeyContext ctx(key);
  return matches_in_range(events, ctx, mode, cfg, 1, p.measure_count());
}

std::vector<ActivatedSet> activated_cadences(
    const std::vector<DegreeMatch>& matches, const Tonality& key) {
  std::set<int> degrees;
  for (const auto& m : matches) degrees.insert(m.degree.index);

  std::vector<ActivatedSet> out;
  for (const auto& set : minimal_cadential_sets(key, Arity::Tetradic)) {
    if (!set.name) continue;
    if (std::includes(degrees.begin(), degrees.end(), set.degrees.begin(),
                      set.degrees.end())) {
      out.push_back({set, region_of(set)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ActivatedSet& a, const ActivatedSet& b) {
    return a.set.name.value_or("") < b.set.name.value_or("");
  });
  return out;
}

namespace {

// Measure of the exact tonic arrival when `key` displays a tonic-containing
// minimal cadential set entirely through exact matches inside the window.
std::optional<int> tonic_cadence_assertion(const std::vector<Event>& events,
                                           const KeyContext& ctx, int first_m,
                                           int last_m) {
  std::set<int> exact_degrees;
  std::optional<int> tonic_measure;
  for (const auto& e : events) {
    if (e.measure < first_m || e.measure > last_m) continue;
    const int d = ctx.degree_of_pc[e.realized.root().value()];
    if (d == 0 || e.realized != ctx.tetrads[d - 1]) continue;
    exact_degrees.insert(d);
    if (d == 1 && !tonic_measure) tonic_measure = e.measure;
  }
  if (!tonic_measure) return std::nullopt;

  for (const auto& set : minimal_cadential_sets(ctx.key, Arity::Tetradic)) {
    if (!set.name || region_of(set) != Region::B) continue;
    if (std::includes(exact_degrees.begin(), exact_degrees.end(),
                      set.degrees.begin(), set.degrees.end())) {
      return tonic_measure;
    }
  }
  return std::nullopt;
}

const std::array<KeyContext, 12>& major_key_contexts() {
  static const std::array<KeyContext, 12> contexts = [] {
    return std::array<KeyContext, 12>{
        KeyContext(Tonality(PitchClass(0))),  KeyContext(Tonality(PitchClass(1))),
        KeyContext(Tonality(PitchClass(2))),  KeyContext(Tonality(PitchClass(3))),
        KeyContext(Tonality(PitchClass(4))),  KeyContext(Tonality(PitchClass(5))),
        KeyContext(Tonality(PitchClass(6))),  KeyContext(Tonality(PitchClass(7))),
        KeyContext(Tonality(PitchClass(8))),  KeyContext(Tonality(PitchClass(9))),
        KeyContext(Tonality(PitchClass(10))), KeyContext(Tonality(PitchClass(11))),
    };
  }();
  return contexts;
}

}  // namespace

KeyTimeline infer_keys(const Progression& p, const AnalyzeConfig& cfg) {
  const auto events = realize_events(p);
  const int total = p.measure_count();
  const auto& keys = major_key_contexts();

  int current = -1;
  if (p.declared_key) {
    if (auto pc = parse_root_name(*p.declared_key)) current = pc->value();
  }
  if (current < 0) {
    double best = -1.0;
    current = 0;
    for (int k = 0; k < 12; ++k) {
      const double s = window_score(events, keys[k], 1, total);
      if (s > best) {
        best = s;
        current = k;
      }
    }
  }

  KeyTimeline timeline;
  timeline.initial = keys[current].key;

  const int window = std::max(1, cfg.window_measures);
  const int window_count = std::max(1, total - window + 1);
  int prev_change_measure = 0;

  for (int start = 1; start <= window_count; ++start) {
    const int first_m = start;
    const int last_m = std::min(total, start + window - 1);

    std::array<double, 12> scores{};
    for (int k = 0; k < 12; ++k) {
      scores[k] = window_score(events, keys[k], first_m, last_m);
    }
    int candidate = current;
    for (int k = 0; k < 12; ++k) {
      if (scores[k] > scores[candidate]) candidate = k;
    }

    if (candidate != current) {
      auto tonic_measure =
          tonic_cadence_assertion(events, keys[candidate], first_m, last_m);
      if (tonic_measure) {
        const int effective =
            std::min(total, std::max(*tonic_measure, prev_change_measure + 1));
        timeline.changes.push_back({effective, keys[current].key,
                                    keys[candidate].key, first_m, last_m});
        prev_change_measure = effective;
        current = candidate;
      }
    }
    timeline.window_keys.push_back({{first_m, last_m}, keys[current].key});
  }

  int span_start = 1;
  int span_key = timeline.initial.root().value();
  auto flush_span = [&](int span_end) {
    if (span_end < span_start) return;
    KeySpan span;
    span.first_measure = span_start;
    span.last_measure = span_end;
    span.key = keys[span_key].key;
    span.score = window_score(events, keys[span_key], span_start, span_end);
    timeline.spans.push_back(span);
  };
  for (const auto& change : timeline.changes) {
    flush_span(change.measure - 1);
    span_start = change.measure;
    span_key = change.to.root().value();
  }
  flush_span(total);
  return timeline;
}

std::vector<ModulationEvent> detect_modulations(const Progression& p,
                                                const AnalyzeConfig& cfg,
                                                const KeyTimeline& timeline) {
  const auto events = realize_events(p);
  std::vector<ModulationEvent> out;
  for (const auto& change : timeline.changes) {
    const KeyContext ctx(change.to);
    const int first_m = std::max(1, change.measure - cfg.passage_radius);
    const int last_m = std::min(p.measure_count(), change.measure + cfg.passage_radius);

    std::vector<DegreeMatch> evidence =
        matches_in_range(events, ctx, MatchMode::DegreeRoot, cfg, first_m, last_m);
    auto covers =
        matches_in_range(events, ctx, MatchMode::Cover, cfg, first_m, last_m);
    evidence.insert(evidence.end(), covers.begin(), covers.end());
    sort_matches(evidence);

    std::set<int> presented;
    for (const auto& m : evidence) presented.insert(m.degree.index);

    ModulationEvent event{change,
                          classify_modulation(change.from, change.to, presented,
                                              cfg.pivot_table),
                          std::move(evidence)};
    out.push_back(std::move(event));
  }
  return out;
}

std::vector<BridgeEvent> detect_bridges(const Progression& p,
                                        const AnalyzeConfig& cfg) {
  const auto events = realize_events(p);
  std::vector<BridgeEvent> out;
  for (size_t i = 0; i + 1 < events.size(); ++i) {
    const Event& a = events[i];
    const Event& b = events[i + 1];

    RootedChord source = a.realized;
    if (a.quality == Quality::Sixth && cfg.sixth_as_tonic) {
      source = make_chord(a.realized.root(), quality_intervals(Quality::Maj7));
    } else if (a.quality != Quality::Maj7) {
      continue;
    }
    auto bridged = try_apply_generator(Generator::p42(), source);
    if (!bridged || b.realized != *bridged) continue;

    BridgeEvent event;
    event.from_measure = a.measure;
    event.to_measure = b.measure;
    event.from_chord = a.chord;
    event.to_chord = b.chord;
    event.bridge = p42_bridge(source);
    out.push_back(std::move(event));
  }
  return out;
}

AnalysisReport analyze(const Progression& p, const AnalyzeConfig& cfg) {
  AnalysisReport report;
  report.title = p.title;
  report.declared_key = p.declared_key;
  report.config = cfg;

  const auto events = realize_events(p);
  report.key_timeline = infer_keys(p, cfg);

  for (const auto& [span, key] : report.key_timeline.window_keys) {
    WindowReport window;
    window.first_measure = span.first;
    window.last_measure = span.second;
    window.key = key;

    const KeyContext ctx(key);
    auto mode_matches =
        matches_in_range(events, ctx, cfg.mode, cfg, span.first, span.second);
    window.activated = activated_cadences(mode_matches, key);

    window.matches = std::move(mode_matches);
    if (cfg.mode != MatchMode::Cover) {
      auto covers =
          matches_in_range(events, ctx, MatchMode::Cover, cfg, span.first, span.second);
      window.matches.insert(window.matches.end(), covers.begin(), covers.end());
      sort_matches(window.matches);
    }
    report.windows.push_back(std::move(window));
  }

  report.modulations = detect_modulations(p, cfg, report.key_timeline);
  report.bridges = detect_bridges(p, cfg);

  report.region_stats = {{'A', 0.0}, {'B', 0.0}, {'C', 0.0}};
  int activated_windows = 0;
  for (const auto& window : report.windows) {
    if (window.activated.empty()) continue;
    ++activated_windows;
    const double share = 1.0 / static_cast<double>(window.activated.size());
    for (const auto& a : window.activated) {
      report.region_stats[region_letter(a.region)] += share;
    }
  }
  if (activated_windows > 0) {
    for (auto& [region, value] : report.region_stats) {
      value /= static_cast<double>(activated_windows);
    }
  }

  for (const auto& e : events) {
    const Tonality* active = nullptr;
    for (const auto& span : report.key_timeline.spans) {
      if (e.measure >= span.first_measure && e.measure <= span.last_measure) {
        active = &span.key;
        break;
      }
    }
    if (active == nullptr) continue;
    const KeyContext ctx(*active);
    const int d = ctx.degree_of_pc[e.realized.root().value()];
    const bool matched =
        d != 0 && (e.realized == ctx.tetrads[d - 1] || eligible_for_root_match(e));
    if (!matched) report.chromatic.push_back({e.measure, e.chord});
  }

  report.legend = {
      "degree matching is root-functional: plain tetrads and triads match the "
      "degree on their root; exact matches (chord equals the degree tetrad) "
      "are tagged and score double",
      "altered and extended chords (7b9, 9th chords, ...) carry no degree of "
      "their own; they appear under 'chromatic' and may still supply cover "
      "evidence",
      "cover evidence pools " + std::to_string(cfg.cover_span) +
          " consecutive events and matches a degree tetrad contained in the "
          "pooled pitch classes",
      "sixth chords on the tonic are annotated as tonic substitutes "
      "(sixth_as_tonic " + std::string(cfg.sixth_as_tonic ? "on" : "off") + ")",
      "a key change requires the new key to win the window score and display "
      "a tonic-containing minimal cadential set exactly; root-level "
      "activations (e.g. J2 from bare sevenths) are reported but do not move "
      "the key",
      "region fractions average over windows with at least one activated set",
  };
  return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string degree_list(const std::set<int>& degrees) {
  std::string out = "{";
  bool first = true;
  for (int d : degrees) {
    if (!first) out += ",";
    out += roman_numeral(d);
    first = false;
  }
  return out + "}";
}

std::string match_line(const DegreeMatch& m) {
  std::ostringstream out;
  out << "m." << m.measure;
  if (m.end_measure != m.measure) out << "-" << m.end_measure;
  out << " " << render_chord(m.chord) << " -> " << roman_numeral(m.degree.index)
      << " (" << match_mode_name(m.kind);
  if (m.tonic_substitute) out << ", tonic substitute";
  out << ")";
  if (!m.note.empty() && m.kind == MatchMode::Cover) out << " [" << m.note << "]";
  return out.str();
}

std::string key_name(const Tonality& t) { return flat_name(t.root()); }

}  // namespace

std::string to_text(const AnalysisReport& report) {
  std::ostringstream out;
  if (!report.title.empty()) out << "analysis: " << report.title << "\n";
  if (report.declared_key) out << "declared key: " << *report.declared_key << "\n";

  out << "\nkey timeline:\n";
  for (const auto& span : report.key_timeline.spans) {
    out << "  mm." << span.first_measure << "-" << span.last_measure << "  "
        << key_name(span.key) << "  (score " << span.score << ")\n";
  }

  out << "\nwindows:\n";
  for (const auto& window : report.windows) {
    out << "  mm." << window.first_measure << "-" << window.last_measure << " ["
        << key_name(window.key) << "]";
    if (window.activated.empty()) {
      out << "  (no activated cadential sets)\n";
    } else {
      out << "  activated:";
      for (const auto& a : window.activated) {
        out << " " << a.set.name.value_or(to_string(a.set)) << "="
            << degree_list(a.set.degrees) << "(" << region_letter(a.region) << ")";
      }
      out << "\n";
    }
    for (const auto& m : window.matches) {
      out << "      " << match_line(m) << "\n";
    }
  }

  out << "\nmodulations:\n";
  if (report.modulations.empty()) out << "  none\n";
  for (const auto& m : report.modulations) {
    out << "  m." << m.change.measure << "  " << key_name(m.change.from) << " -> "
        << key_name(m.change.to) << "  interval +" << m.classification.interval
        << "  " << verdict_name(m.classification.verdict);
    if (const auto* required =
            report.config.pivot_table.find(m.classification.interval)) {
      out << "  required " << degree_list(*required);
    }
    if (!m.classification.missing.empty()) {
      out << "  missing " << degree_list(m.classification.missing);
    }
    out << "\n";
    for (const auto& e : m.evidence) {
      out << "      " << match_line(e) << "\n";
    }
  }

  out << "\nbridges:\n";
  if (report.bridges.empty()) out << "  none\n";
  for (const auto& b : report.bridges) {
    out << "  m." << b.from_measure << " -> m." << b.to_measure << "  "
        << render_chord(b.from_chord) << " -> " << render_chord(b.to_chord)
        << "  (P42 bridge; target key " << key_name(b.bridge.target_key)
        << ", degree " << roman_numeral(b.bridge.target_degree.index) << ")\n";
  }

  out << "\nregion stats:\n";
  for (const auto& [region, value] : report.region_stats) {
    out << "  " << region << "  " << value << "\n";
  }

  if (!report.chromatic.empty()) {
    out << "\nchromatic events:\n";
    for (const auto& c : report.chromatic) {
      out << "  m." << c.measure << "  " << render_chord(c.chord) << "\n";
    }
  }

  out << "\nlegend:\n";
  for (const auto& line : report.legend) out << "  - " << line << "\n";
  return out.str();
}

std::string to_structured_json(const AnalysisReport& report) {
  using json = nlohmann::ordered_json;

  auto degrees_json = [](const std::set<int>& degrees) {
    json out = json::array();
    for (int d : degrees) out.push_back(roman_numeral(d));
    return out;
  };
  auto match_json = [](const DegreeMatch& m) {
    json out;
    out["measure"] = m.measure;
    if (m.end_measure != m.measure) out["end_measure"] = m.end_measure;
    out["chord"] = render_chord(m.chord);
    out["degree"] = roman_numeral(m.degree.index);
    out["kind"] = match_mode_name(m.kind);
    out["strength"] = m.strength;
    if (m.tonic_substitute) out["tonic_substitute"] = true;
    if (!m.note.empty()) out["note"] = m.note;
    return out;
  };

  json doc;
  doc["title"] = report.title;
  doc["declared_key"] = report.declared_key ? json(*report.declared_key) : json();
  {
    json config;
    config["mode"] = match_mode_name(report.config.mode);
    config["window_measures"] = report.config.window_measures;
    config["passage_radius"] = report.config.passage_radius;
    config["cover_span"] = report.config.cover_span;
    config["sixth_as_tonic"] = report.config.sixth_as_tonic;
    doc["config"] = std::move(config);
  }

  {
    json timeline;
    timeline["initial"] = key_name(report.key_timeline.initial);
    timeline["spans"] = json::array();
    for (const auto& span : report.key_timeline.spans) {
      json s;
      s["measures"] = {span.first_measure, span.last_measure};
      s["key"] = key_name(span.key);
      s["score"] = span.score;
      timeline["spans"].push_back(std::move(s));
    }
    timeline["changes"] = json::array();
    for (const auto& change : report.key_timeline.changes) {
      json c;
      c["measure"] = change.measure;
      c["from"] = key_name(change.from);
      c["to"] = key_name(change.to);
      timeline["changes"].push_back(std::move(c));
    }
    doc["key_timeline"] = std::move(timeline);
  }

  doc["windows"] = json::array();
  for (const auto& window : report.windows) {
    json w;
    w["measures"] = {window.first_measure, window.last_measure};
    w["key"] = key_name(window.key);
    w["matches"] = json::array();
    for (const auto& m : window.matches) w["matches"].push_back(match_json(m));
    w["activated"] = json::array();
    for (const auto& a : window.activated) {
      json s;
      s["name"] = a.set.name.value_or("");
      s["degrees"] = degrees_json(a.set.degrees);
      s["region"] = std::string(1, region_letter(a.region));
      w["activated"].push_back(std::move(s));
    }
    doc["windows"].push_back(std::move(w));
  }

  doc["modulations"] = json::array();
  for (const auto& m : report.modulations) {
    json e;
    e["measure"] = m.change.measure;
    e["from"] = key_name(m.change.from);
    e["to"] = key_name(m.change.to);
    e["interval"] = m.classification.interval;
    e["verdict"] = std::string(verdict_name(m.classification.verdict));
    if (const auto* required =
            report.config.pivot_table.find(m.classification.interval)) {
      e["required"] = degrees_json(*required);
    }
    e["presented"] = degrees_json(m.classification.presented_degrees);
    if (!m.classification.missing.empty()) {
      e["missing"] = degrees_json(m.classification.missing);
    }
    e["evidence"] = json::array();
    for (const auto& ev : m.evidence) e["evidence"].push_back(match_json(ev));
    doc["modulations"].push_back(std::move(e));
  }

  doc["bridges"] = json::array();
  for (const auto& b : report.bridges) {
    json e;
    e["from_measure"] = b.from_measure;
    e["to_measure"] = b.to_measure;
    e["from"] = render_chord(b.from_chord);
    e["to"] = render_chord(b.to_chord);
    e["target_key"] = key_name(b.bridge.target_key);
    e["target_degree"] = roman_numeral(b.bridge.target_degree.index);
    doc["bridges"].push_back(std::move(e));
  }

  {
    json stats;
    for (const auto& [region, value] : report.region_stats) {
      stats[std::string(1, region)] = value;
    }
    doc["region_stats"] = std::move(stats);
  }

  doc["chromatic"] = json::array();
  for (const auto& c : report.chromatic) {
    json e;
    e["measure"] = c.measure;
    e["chord"] = render_chord(c.chord);
    doc["chromatic"].push_back(std::move(e));
  }

  doc["legend"] = report.legend;
  return doc.dump(2) + "\n";
}

}  // namespace harmonia
