#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harmonia/pitch.h"

namespace harmonia {

/// A chord token or sheet could not be parsed. `span` names the offending
/// text; line/column are 1-based and zero when parsing a bare token.
struct ParseError : Error {
  enum class Kind { UnknownRoot, UnknownQuality, TrailingGarbage, BadHeader };

  ParseError(Kind kind, const std::string& message, std::string span,
             int line = 0, int column = 0)
      : Error(message), kind(kind), span(std::move(span)), line(line),
        column(column) {}

  Kind kind;
  std::string span;
  int line;
  int column;
};

struct EmptySheet : Error {
  using Error::Error;
};

/// realize_chord met alterations that force incompatible chord members.
struct ContradictoryAlterations : Error {
  using Error::Error;
};

enum class QualityToken {
  PlainMajor,  // bare root
  Maj,
  Min,
  Dim,
  Dim7,
  Aug,
  AugDom7,  // "+7"
  HalfDim,  // "m7b5"
  Sixth,
  MinSixth,
  Dom7,
  Maj7,
  Min7,
  Dom9,
  Maj9,
  Min9,
  Dom13,
  Sus2,
  Sus4,
};

enum class Alteration { FlatFive, SharpFive, FlatNine, SharpNine, SharpEleven, FlatThirteen };

/// A chord symbol at the spelling level. Equality is structural; parsing the
/// rendered form of a ParsedChord reproduces it exactly.
struct ParsedChord {
  std::string root_spelling;               // "A".."G" plus optional 'b'/'#'
  QualityToken quality = QualityToken::PlainMajor;
  std::vector<Alteration> alterations;     // deduped, canonical order
  std::optional<std::string> slash_bass;

  friend bool operator==(const ParsedChord&, const ParsedChord&) = default;
};

/// Parses one chord token, e.g. "A7b9", "F+7", "Bbmaj7", "C#m7/E".
/// Unicode flat/sharp signs are accepted as aliases of 'b'/'#'.
ParsedChord parse_chord(std::string_view text);

/// Canonical spelling; parse(render_chord(p)) == p.
std::string render_chord(const ParsedChord& p);

/// Pitch realization. The slash bass never changes the root.
std::pair<RootedChord, ChordQuality> realize_chord(const ParsedChord& p);

PitchClass parsed_root_pc(const ParsedChord& p);

/// "C", "Db", ..., "Bb", "B" — flats preferred on the black keys.
std::string flat_name(PitchClass pc);

/// Parses a bare root spelling such as "Eb" or "F#".
std::optional<PitchClass> parse_root_name(std::string_view text);

/// Renders an arbitrary rooted chord as a symbol with flat-preferred
/// spelling ("Dm7", "F+7", ...). Unnamed qualities list their pitch classes.
std::string chord_symbol(const RootedChord& c);

/// A parsed lead sheet: measures of chords, each chord weighted
/// 1/(chords in its measure).
struct Progression {
  std::string title;
  std::optional<std::string> declared_key;
  std::vector<std::vector<ParsedChord>> measures;  // 1-based in reports

  int measure_count() const { return static_cast<int>(measures.size()); }
};

/// Lead-sheet text format: optional "title:" and "key:" header lines, '#'
/// comments (start of line or after whitespace), then measures separated by
/// '|' with chords separated by spaces. Bar lines merge across line breaks.
Progression parse_leadsheet(std::string_view text);
Progression parse_leadsheet_file(const std::string& path);

/// The same progression moved by n semitones, flat-preferred respelling.
/// The declared key moves with it.
Progression transposed(const Progression& p, int n);

}  // namespace harmonia
