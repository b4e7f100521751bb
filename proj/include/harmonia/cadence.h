#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/pitch.h"
#include "harmonia/transform.h"

namespace harmonia {

/// cadence_pair_morphism was asked about a pair with no linking morphism.
struct UnlinkedPair : Error {
  using Error::Error;
};

enum class Arity { Triadic = 3, Tetradic = 4 };

/// A scale pattern transposed to a root. The default pattern is the major
/// scale. Non-heptatonic patterns are accepted (they matter only to the
/// enumeration operations); degree chords require seven notes.
class Tonality {
 public:
  static const std::vector<int>& major_pattern();

  explicit Tonality(PitchClass root);
  Tonality(PitchClass root, std::vector<int> pattern);

  PitchClass root() const { return root_; }
  const std::vector<int>& pattern() const { return pattern_; }
  int note_count() const { return static_cast<int>(pattern_.size()); }
  bool heptatonic() const { return pattern_.size() == 7; }
  bool is_major() const { return pattern_ == major_pattern(); }

  /// Pitch class of 1-based scale position.
  PitchClass note_at(int position) const;
  bool contains_pc(PitchClass pc) const;

  friend bool operator==(const Tonality&, const Tonality&) = default;

 private:
  PitchClass root_;
  std::vector<int> pattern_;
};

/// 1-based scale degree, rendered as a Roman numeral I..VII.
struct ScaleDegree {
  int index = 1;

  friend constexpr auto operator<=>(ScaleDegree, ScaleDegree) = default;
};

std::string roman_numeral(int degree);
std::optional<int> parse_roman_numeral(std::string_view text);

/// Chord on a scale degree, stacking scale thirds (3 notes triadic,
/// 4 tetradic). Requires a heptatonic tonality.
RootedChord degree_chord(const Tonality& t, ScaleDegree d, Arity arity);

/// All 12 transpositions of `pattern` whose degree chords (at the given
/// arity) include c, compared as rooted chords.
std::vector<Tonality> scales_containing(
    const RootedChord& c, const std::vector<int>& pattern = Tonality::major_pattern(),
    Arity arity = Arity::Tetradic);

/// A set of scale degrees at one arity. Named sets carry the conventional
/// label for the major pattern (k1..k5 triadic, J1..J6 tetradic).
struct CadentialSet {
  std::set<int> degrees;
  Arity arity = Arity::Tetradic;
  std::optional<std::string> name;

  friend bool operator==(const CadentialSet&, const CadentialSet&) = default;
};

std::string to_string(const CadentialSet& s);

/// True when the only transposition of t's pattern containing every degree
/// chord of `degrees` is t itself.
bool is_cadential(const Tonality& t, const std::set<int>& degrees, Arity arity);

/// Cadential, and no proper subset is.
bool is_minimal_cadential(const Tonality& t, const std::set<int>& degrees,
                          Arity arity);

/// Brute-force enumeration of all minimal cadential sets, sorted by size then
/// degree order. Names are attached for the major pattern only.
std::vector<CadentialSet> minimal_cadential_sets(const Tonality& t, Arity arity);

enum class Region { A, B, C };

char region_letter(Region r);

/// B when the set contains the tonic degree, else C for singletons, else A.
/// Reproduces the conventional labels for the major tetradic family.
Region region_of(const CadentialSet& s);

/// A pair of cadential sets linked by a generator: applying the morphism to
/// each non-anchor degree chord of `from` yields exactly the non-anchor
/// degree chords of `to`.
struct PairLink {
  CadentialSet from;
  CadentialSet to;
  std::set<int> anchor;
  Generator morphism;
  std::vector<std::pair<int, int>> mapped;
};

/// Linked pairs: (J3,J4) and (J1,J2) via R42, (J5,J6) via L13, in either
/// order. Throws UnlinkedPair for anything else.
PairLink cadence_pair_morphism(const CadentialSet& a, const CadentialSet& b,
                               const Tonality& t);

struct CadenceImageEntry {
  int degree_from = 1;
  RootedChord image;
  std::optional<int> degree_to;  // nullopt = foreign to the tonality
};

/// Elementwise image of a cadential set under a generator, with each image
/// chord re-identified as a degree of t when diatonic.
std::vector<CadenceImageEntry> cadence_image(const CadentialSet& s,
                                             const Generator& g,
                                             const Tonality& t);

/// Cross-check that enumeration reproduces the named k/J sets for all 12
/// major keys at both arities.
VerificationReport verify_cadence_enumeration();

}  // namespace harmonia
