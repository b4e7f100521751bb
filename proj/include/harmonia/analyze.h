#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "harmonia/cadence.h"
#include "harmonia/chordsym.h"
#include "harmonia/modulation.h"
#include "harmonia/pitch.h"

namespace harmonia {

enum class MatchMode { Exact, DegreeRoot, Cover };

std::string_view match_mode_name(MatchMode m);
std::optional<MatchMode> parse_match_mode(std::string_view text);

struct AnalyzeConfig {
  MatchMode mode = MatchMode::DegreeRoot;  // matching used for activation
  int window_measures = 4;                 // sliding key/activation window
  int passage_radius = 2;                  // measures around a key change
  int cover_span = 2;                      // consecutive events pooled by cover
  bool sixth_as_tonic = true;              // sixth chords stand in for maj7
  PivotTable pivot_table = PivotTable::shipped();
};

/// One chord occurrence with its realization.
struct Event {
  int measure = 1;       // 1-based
  int event_index = 0;   // global order across the sheet
  ParsedChord chord;
  RootedChord realized;
  Quality quality = Quality::Other;
  double weight = 1.0;   // 1 / chords-in-measure
};

std::vector<Event> realize_events(const Progression& p);

/// A chord (or short event run, for cover) heard as a scale degree of a key.
///
/// exact: the realized chord equals the degree tetrad. degree_root: roots
/// agree and the chord is a plain named quality (altered and extended
/// chords never match by root). cover: the degree tetrad's pitch classes
/// are contained in the union of a run of consecutive events.
struct DegreeMatch {
  int measure = 1;       // first measure involved
  int end_measure = 1;   // differs from measure only for cover matches
  int event_index = 0;   // first event involved
  ParsedChord chord;     // first chord involved
  ScaleDegree degree{1};
  MatchMode kind = MatchMode::DegreeRoot;
  int strength = 1;      // exact 2, degree_root 1, cover 1
  bool tonic_substitute = false;  // sixth chord standing in for the tonic
  std::string note;
};

/// All matches of one mode against a fixed key, over the whole progression.
std::vector<DegreeMatch> match_degrees(const Progression& p, const Tonality& key,
                                       MatchMode mode,
                                       const AnalyzeConfig& cfg = {});

struct ActivatedSet {
  CadentialSet set;
  Region region = Region::A;
};

/// Named minimal cadential sets of `key` whose degrees are all matched.
std::vector<ActivatedSet> activated_cadences(const std::vector<DegreeMatch>& matches,
                                             const Tonality& key);

struct KeySpan {
  int first_measure = 1;
  int last_measure = 1;
  Tonality key{PitchClass(0)};
  double score = 0.0;  // summed match strength of this key over the span
};

struct KeyChange {
  int measure = 1;  // first measure governed by the new key
  Tonality from{PitchClass(0)};
  Tonality to{PitchClass(0)};
  int window_first = 1;  // window that confirmed the change
  int window_last = 1;
};

struct KeyTimeline {
  Tonality initial{PitchClass(0)};
  std::vector<KeySpan> spans;
  std::vector<KeyChange> changes;
  /// Active key per window, in window order (post-decision).
  std::vector<std::pair<std::pair<int, int>, Tonality>> window_keys;
};

/// Sliding-window key inference over the 12 major keys.
///
/// The initial key is the declared header when present, otherwise the best
/// whole-piece scorer. A later window hands the timeline to a different key
/// only when that key wins the window's score and displays a tonic-containing
/// minimal cadential set with every degree matched exactly inside the window;
/// the change takes effect at the exact tonic arrival. Score ties retain the
/// incumbent, then prefer the smaller root pitch class.
KeyTimeline infer_keys(const Progression& p, const AnalyzeConfig& cfg = {});

struct ModulationEvent {
  KeyChange change;
  ModulationClassification classification;
  std::vector<DegreeMatch> evidence;
};

/// Classifies each key change of the timeline from the degrees of the new
/// key matched (by every mode) within `passage_radius` measures of it.
std::vector<ModulationEvent> detect_modulations(const Progression& p,
                                                const AnalyzeConfig& cfg,
                                                const KeyTimeline& timeline);

struct BridgeEvent {
  int from_measure = 1;
  int to_measure = 1;
  ParsedChord from_chord;
  ParsedChord to_chord;
  BridgeResult bridge;
};

/// Consecutive event pairs where the second chord is P42 of the first
/// (sixth chords stand in for maj7 when configured).
std::vector<BridgeEvent> detect_bridges(const Progression& p,
                                        const AnalyzeConfig& cfg = {});

struct WindowReport {
  int first_measure = 1;
  int last_measure = 1;
  Tonality key{PitchClass(0)};
  std::vector<DegreeMatch> matches;  // configured mode plus cover, tagged
  std::vector<ActivatedSet> activated;
};

struct ChromaticEvent {
  int measure = 1;
  ParsedChord chord;
};

struct AnalysisReport {
  std::string title;
  std::optional<std::string> declared_key;
  AnalyzeConfig config;
  KeyTimeline key_timeline;
  std::vector<WindowReport> windows;
  std::vector<ModulationEvent> modulations;
  std::vector<BridgeEvent> bridges;
  std::map<char, double> region_stats;  // 'A'/'B'/'C' -> window fraction
  std::vector<ChromaticEvent> chromatic;
  std::vector<std::string> legend;
};

AnalysisReport analyze(const Progression& p, const AnalyzeConfig& cfg = {});

std::string to_text(const AnalysisReport& report);

/// Structured JSON document with stable field order:
/// key_timeline, windows, modulations, bridges, region_stats, chromatic,
/// legend. Byte-identical for identical inputs and configuration.
std::string to_structured_json(const AnalysisReport& report);

}  // namespace harmonia
