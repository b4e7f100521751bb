#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "harmonia/cadence.h"
#include "harmonia/chordsym.h"
#include "harmonia/pitch.h"

namespace harmonia {

/// Pivot degrees (interpreted in the target key) required for a quantized
/// modulation at a given root interval. Ships with the two known entries:
/// a fourth up (+5) requires {II, VII}; a fifth up (+7) requires {III, V}.
class PivotTable {
 public:
  static PivotTable shipped();

  /// Plain-text format, one entry per line:
  ///   interval=<0..11> degrees=<comma-separated Roman numerals>
  /// '#' comments and blank lines allowed. Unknown numerals are rejected.
  static PivotTable load(std::istream& in);
  static PivotTable load_file(const std::string& path);

  void set(int interval, std::set<int> degrees);
  const std::set<int>* find(int interval) const;
  const std::map<int, std::set<int>>& entries() const { return entries_; }

 private:
  std::map<int, std::set<int>> entries_;
};

enum class Verdict {
  Quantized,
  NonQuantizedMissing,  // table entry exists, pivot degrees not all shown
  NonQuantizedNoEntry,  // no table entry for the interval
};

std::string_view verdict_name(Verdict v);

struct ModulationClassification {
  Tonality from{PitchClass(0)};
  Tonality to{PitchClass(0)};
  int interval = 0;  // target root - source root, mod 12
  std::set<int> presented_degrees;
  Verdict verdict = Verdict::NonQuantizedNoEntry;
  std::set<int> missing;  // populated for NonQuantizedMissing
};

/// `presented` are degrees of `to` shown around the modulation.
ModulationClassification classify_modulation(const Tonality& from,
                                             const Tonality& to,
                                             const std::set<int>& presented,
                                             const PivotTable& table);

/// P42 sends the tonic seventh of a key to the supertonic seventh of the key
/// a whole step below; the bridge chord plus the local dominant (or tonic)
/// then establishes the new key.
struct BridgeResult {
  RootedChord source_chord;               // maj7
  RootedChord bridge_chord;               // min7, same root
  Tonality target_key{PitchClass(0)};     // a whole step below the source root
  ScaleDegree target_degree{2};
  std::vector<CadentialSet> establishing; // {II,V} (cadential, not minimal) and J1
};

/// Throws DomainError unless c is a major seventh chord.
BridgeResult p42_bridge(const RootedChord& c);

/// Iterated ii-V-I (or ii-I when `fast`) descending by whole steps, linked by
/// the P42 bridge. One measure per key.
Progression descending_chain(const Tonality& start, int length, bool fast);

/// Degree chords shared by two keys, with the degree each one occupies in
/// either key.
struct CommonChord {
  RootedChord chord;
  ScaleDegree degree_in_first{1};
  ScaleDegree degree_in_second{1};
};

std::vector<CommonChord> common_degree_chords(const Tonality& k1,
                                              const Tonality& k2, Arity arity);

}  // namespace harmonia
