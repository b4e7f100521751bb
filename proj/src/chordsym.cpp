#include "harmonia/chordsym.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace harmonia {

namespace {

constexpr std::string_view kFlatSign = "\xE2\x99\xAD";   // U+266D
constexpr std::string_view kSharpSign = "\xE2\x99\xAF";  // U+266F

const std::array<std::string, 12> kFlatNames = {
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B"};

int letter_pc(char letter) {
  switch (letter) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    case 'B': return 11;
    default: return -1;
  }
}

// Consumes a root spelling at `pos`; returns the canonical "letter[b|#]"
// form or nullopt when text[pos] is not a note letter.
std::optional<std::string> take_root(std::string_view text, size_t& pos) {
  if (pos >= text.size() || letter_pc(text[pos]) < 0) return std::nullopt;
  std::string spelling(1, text[pos]);
  ++pos;
  if (pos < text.size()) {
    if (text[pos] == 'b' || text[pos] == '#') {
      spelling += text[pos];
      ++pos;
    } else if (text.substr(pos, kFlatSign.size()) == kFlatSign) {
      spelling += 'b';
      pos += kFlatSign.size();
    } else if (text.substr(pos, kSharpSign.size()) == kSharpSign) {
      spelling += '#';
      pos += kSharpSign.size();
    }
  }
  return spelling;
}

struct QualityAlias {
  std::string_view text;
  QualityToken token;
};

// Longest match first; "mi"/"min" are aliases of "m".
const std::vector<QualityAlias>& quality_aliases() {
  static const std::vector<QualityAlias> aliases = {
      {"min7b5", QualityToken::HalfDim}, {"mi7b5", QualityToken::HalfDim},
      {"m7b5", QualityToken::HalfDim},
      {"maj9", QualityToken::Maj9},    {"maj7", QualityToken::Maj7},
      {"maj", QualityToken::Maj},
      {"min9", QualityToken::Min9},    {"mi9", QualityToken::Min9},
      {"m9", QualityToken::Min9},
      {"min7", QualityToken::Min7},    {"mi7", QualityToken::Min7},
      {"m7", QualityToken::Min7},
      {"min6", QualityToken::MinSixth}, {"mi6", QualityToken::MinSixth},
      {"m6", QualityToken::MinSixth},
      {"min", QualityToken::Min},      {"mi", QualityToken::Min},
      {"m", QualityToken::Min},
      {"dim7", QualityToken::Dim7},    {"dim", QualityToken::Dim},
      {"o7", QualityToken::Dim7},      {"o", QualityToken::Dim},
      {"aug7", QualityToken::AugDom7}, {"aug", QualityToken::Aug},
      {"+7", QualityToken::AugDom7},   {"+", QualityToken::Aug},
      {"\xC3\xB8""7", QualityToken::HalfDim},  // ø7
      {"\xC3\xB8", QualityToken::HalfDim},     // ø
      {"\xCE\x94", QualityToken::Maj7},        // Δ
      {"sus2", QualityToken::Sus2},    {"sus4", QualityToken::Sus4},
      {"13", QualityToken::Dom13},     {"9", QualityToken::Dom9},
      {"7", QualityToken::Dom7},       {"6", QualityToken::Sixth},
  };
  return aliases;
}

struct AlterationAlias {
  std::string_view text;
  Alteration alteration;
};

// Longest match first; unicode flat/sharp spellings alias 'b'/'#'.
const std::vector<AlterationAlias>& alteration_aliases() {
  static const std::vector<AlterationAlias> aliases = {
      {"\xE2\x99\xAF""11", Alteration::SharpEleven},
      {"\xE2\x99\xAD""13", Alteration::FlatThirteen},
      {"#11", Alteration::SharpEleven},
      {"b13", Alteration::FlatThirteen},
      {"\xE2\x99\xAD""5", Alteration::FlatFive},
      {"\xE2\x99\xAF""5", Alteration::SharpFive},
      {"\xE2\x99\xAD""9", Alteration::FlatNine},
      {"\xE2\x99\xAF""9", Alteration::SharpNine},
      {"b5", Alteration::FlatFive},
      {"#5", Alteration::SharpFive},
      {"b9", Alteration::FlatNine},
      {"#9", Alteration::SharpNine},
  };
  return aliases;
}

int alteration_order(Alteration a) {
  switch (a) {
    case Alteration::FlatFive: return 0;
    case Alteration::SharpFive: return 1;
    case Alteration::FlatNine: return 2;
    case Alteration::SharpNine: return 3;
    case Alteration::SharpEleven: return 4;
    case Alteration::FlatThirteen: return 5;
  }
  return 6;
}

std::string_view alteration_text(Alteration a) {
  switch (a) {
    case Alteration::FlatFive: return "b5";
    case Alteration::SharpFive: return "#5";
    case Alteration::FlatNine: return "b9";
    case Alteration::SharpNine: return "#9";
    case Alteration::SharpEleven: return "#11";
    case Alteration::FlatThirteen: return "b13";
  }
  return "?";
}

std::string_view quality_suffix(QualityToken q) {
  switch (q) {
    case QualityToken::PlainMajor: return "";
    case QualityToken::Maj: return "maj";
    case QualityToken::Min: return "m";
    case QualityToken::Dim: return "dim";
    case QualityToken::Dim7: return "dim7";
    case QualityToken::Aug: return "aug";
    case QualityToken::AugDom7: return "+7";
    case QualityToken::HalfDim: return "m7b5";
    case QualityToken::Sixth: return "6";
    case QualityToken::MinSixth: return "m6";
    case QualityToken::Dom7: return "7";
    case QualityToken::Maj7: return "maj7";
    case QualityToken::Min7: return "m7";
    case QualityToken::Dom9: return "9";
    case QualityToken::Maj9: return "maj9";
    case QualityToken::Min9: return "m9";
    case QualityToken::Dom13: return "13";
    case QualityToken::Sus2: return "sus2";
    case QualityToken::Sus4: return "sus4";
  }
  return "";
}

std::vector<int> quality_token_intervals(QualityToken q) {
  switch (q) {
    case QualityToken::PlainMajor:
    case QualityToken::Maj: return {0, 4, 7};
    case QualityToken::Min: return {0, 3, 7};
    case QualityToken::Dim: return {0, 3, 6};
    case QualityToken::Dim7: return {0, 3, 6, 9};
    case QualityToken::Aug: return {0, 4, 8};
    case QualityToken::AugDom7: return {0, 4, 8, 10};
    case QualityToken::HalfDim: return {0, 3, 6, 10};
    case QualityToken::Sixth: return {0, 4, 7, 9};
    case QualityToken::MinSixth: return {0, 3, 7, 9};
    case QualityToken::Dom7: return {0, 4, 7, 10};
    case QualityToken::Maj7: return {0, 4, 7, 11};
    case QualityToken::Min7: return {0, 3, 7, 10};
    case QualityToken::Dom9: return {0, 2, 4, 7, 10};
    case QualityToken::Maj9: return {0, 2, 4, 7, 11};
    case QualityToken::Min9: return {0, 2, 3, 7, 10};
    case QualityToken::Dom13: return {0, 2, 4, 7, 9, 10};
    case QualityToken::Sus2: return {0, 2, 7};
    case QualityToken::Sus4: return {0, 5, 7};
  }
  return {0, 4, 7};
}

}  // namespace

ParsedChord parse_chord(std::string_view text) {
  if (text.empty()) {
    throw ParseError(ParseError::Kind::UnknownRoot, "empty chord token", "");
  }
  size_t pos = 0;
  ParsedChord chord;

  auto root = take_root(text, pos);
  if (!root) {
    throw ParseError(ParseError::Kind::UnknownRoot,
                     "unknown chord root in '" + std::string(text) + "'",
                     std::string(text));
  }
  chord.root_spelling = *root;

  for (const auto& alias : quality_aliases()) {
    if (text.substr(pos, alias.text.size()) == alias.text) {
      chord.quality = alias.token;
      pos += alias.text.size();
      break;
    }
  }

  std::set<Alteration> alterations;
  bool matched = true;
  while (matched && pos < text.size()) {
    matched = false;
    for (const auto& alias : alteration_aliases()) {
      if (text.substr(pos, alias.text.size()) == alias.text) {
        alterations.insert(alias.alteration);
        pos += alias.text.size();
        matched = true;
        break;
      }
    }
  }
  for (Alteration a : alterations) chord.alterations.push_back(a);
  std::sort(chord.alterations.begin(), chord.alterations.end(),
            [](Alteration a, Alteration b) {
              return alteration_order(a) < alteration_order(b);
            });

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    auto bass = take_root(text, pos);
    if (!bass) {
      throw ParseError(ParseError::Kind::UnknownRoot,
                       "unknown slash bass in '" + std::string(text) + "'",
                       std::string(text.substr(pos)));
    }
    chord.slash_bass = *bass;
  }

  if (pos < text.size()) {
    std::string garbage(text.substr(pos));
    ParseError::Kind kind = chord.quality == QualityToken::PlainMajor &&
                                    chord.alterations.empty()
                                ? ParseError::Kind::UnknownQuality
                                : ParseError::Kind::TrailingGarbage;
    throw ParseError(kind,
                     "unrecognized text '" + garbage + "' in chord '" +
                         std::string(text) + "'",
                     garbage);
  }
  return chord;
}

std::string render_chord(const ParsedChord& p) {
  std::string out = p.root_spelling;
  out += quality_suffix(p.quality);
  for (Alteration a : p.alterations) out += alteration_text(a);
  if (p.slash_bass) {
    out += '/';
    out += *p.slash_bass;
  }
  return out;
}

PitchClass parsed_root_pc(const ParsedChord& p) {
  int pc = letter_pc(p.root_spelling[0]);
  if (p.root_spelling.size() > 1) {
    pc += p.root_spelling[1] == '#' ? 1 : -1;
  }
  return PitchClass(pc);
}

std::pair<RootedChord, ChordQuality> realize_chord(const ParsedChord& p) {
  std::vector<int> intervals = quality_token_intervals(p.quality);
  std::set<Alteration> alts(p.alterations.begin(), p.alterations.end());

  if (alts.contains(Alteration::FlatFive) && alts.contains(Alteration::SharpFive)) {
    throw ContradictoryAlterations("b5 and #5 both alter the fifth of '" +
                                   render_chord(p) + "'");
  }
  auto replace_fifth = [&intervals, &p](int replacement) {
    auto it = std::find(intervals.begin(), intervals.end(), 7);
    if (it == intervals.end()) {
      throw ContradictoryAlterations("no perfect fifth to alter in '" +
                                     render_chord(p) + "'");
    }
    *it = replacement;
  };

  for (Alteration a : alts) {
    switch (a) {
      case Alteration::FlatFive: replace_fifth(6); break;
      case Alteration::SharpFive: replace_fifth(8); break;
      case Alteration::FlatNine:
        std::erase(intervals, 2);
        intervals.push_back(1);
        break;
      case Alteration::SharpNine:
        std::erase(intervals, 2);
        intervals.push_back(3);
        break;
      case Alteration::SharpEleven: intervals.push_back(6); break;
      case Alteration::FlatThirteen: intervals.push_back(8); break;
    }
  }

  std::sort(intervals.begin(), intervals.end());
  intervals.erase(std::unique(intervals.begin(), intervals.end()),
                  intervals.end());
  RootedChord chord = make_chord(parsed_root_pc(p), std::move(intervals));
  return {chord, classify_quality(chord)};
}

std::string flat_name(PitchClass pc) { return kFlatNames[pc.value()]; }

std::optional<PitchClass> parse_root_name(std::string_view text) {
  size_t pos = 0;
  auto spelling = take_root(text, pos);
  if (!spelling || pos != text.size()) return std::nullopt;
  ParsedChord p;
  p.root_spelling = *spelling;
  return parsed_root_pc(p);
}

std::string chord_symbol(const RootedChord& c) {
  const ChordQuality q = classify_quality(c);
  std::string root = flat_name(c.root());
  switch (q.label) {
    case Quality::MajorTriad: return root;
    case Quality::MinorTriad: return root + "m";
    case Quality::DimTriad: return root + "dim";
    case Quality::AugTriad: return root + "aug";
    case Quality::Maj7: return root + "maj7";
    case Quality::Dom7: return root + "7";
    case Quality::Min7: return root + "m7";
    case Quality::HalfDim7: return root + "m7b5";
    case Quality::Dim7: return root + "dim7";
    case Quality::AugDom7: return root + "+7";
    case Quality::Sixth: return root + "6";
    case Quality::MinSixth: return root + "m6";
    case Quality::Other: break;
  }
  std::string out = root + "(";
  const auto pcs = c.pitch_classes();
  for (size_t i = 0; i < pcs.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(pcs[i]);
  }
  return out + ")";
}

namespace {

// '#' starts a comment at line start or after whitespace; inside a token it
// is a sharp sign.
std::string_view strip_comment(std::string_view line) {
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
      return line.substr(0, i);
    }
  }
  return line;
}

bool has_header(std::string_view line, std::string_view key,
                std::string_view& value) {
  if (line.size() < key.size()) return false;
  for (size_t i = 0; i < key.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) != key[i]) return false;
  }
  std::string_view rest = line.substr(key.size());
  size_t start = rest.find_first_not_of(" \t");
  value = start == std::string_view::npos ? std::string_view{} : rest.substr(start);
  size_t end = value.find_last_not_of(" \t");
  if (end != std::string_view::npos) value = value.substr(0, end + 1);
  return true;
}

}  // namespace

Progression parse_leadsheet(std::string_view text) {
  Progression p;
  int line_no = 0;
  size_t offset = 0;

  while (offset <= text.size()) {
    size_t newline = text.find('\n', offset);
    std::string_view raw_line = text.substr(
        offset, newline == std::string_view::npos ? text.size() - offset
                                                  : newline - offset);
    ++line_no;
    offset = newline == std::string_view::npos ? text.size() + 1 : newline + 1;

    std::string_view line = strip_comment(raw_line);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    std::string_view body = line.substr(first, last - first + 1);

    std::string_view value;
    if (has_header(body, "title:", value)) {
      p.title = std::string(value);
      continue;
    }
    if (has_header(body, "key:", value)) {
      if (!parse_root_name(value)) {
        throw ParseError(ParseError::Kind::BadHeader,
                         "bad key header '" + std::string(value) + "'",
                         std::string(value), line_no, 1);
      }
      p.declared_key = std::string(value);
      continue;
    }

    // Measure content: split on '|', then whitespace. Empty segments (from
    // leading/trailing/doubled bars) are skipped, which also merges bar
    // lines across line breaks.
    size_t seg_start = 0;
    const std::string_view segsrc = line;  // keep columns relative to the line
    while (seg_start <= segsrc.size()) {
      size_t bar = segsrc.find('|', seg_start);
      std::string_view segment = segsrc.substr(
          seg_start,
          bar == std::string_view::npos ? segsrc.size() - seg_start
                                        : bar - seg_start);
      std::vector<ParsedChord> measure;
      size_t tok_start = 0;
      while (tok_start < segment.size()) {
        size_t ws = segment.find_first_of(" \t\r", tok_start);
        std::string_view token = segment.substr(
            tok_start, ws == std::string_view::npos ? segment.size() - tok_start
                                                    : ws - tok_start);
        if (!token.empty()) {
          try {
            measure.push_back(parse_chord(token));
          } catch (const ParseError& e) {
            throw ParseError(e.kind, std::string(e.what()), e.span, line_no,
                             static_cast<int>(seg_start + tok_start) + 1);
          }
        }
        if (ws == std::string_view::npos) break;
        tok_start = ws + 1;
      }
      if (!measure.empty()) p.measures.push_back(std::move(measure));
      if (bar == std::string_view::npos) break;
      seg_start = bar + 1;
    }
  }

  if (p.measures.empty()) {
    throw EmptySheet("lead sheet contains no measures");
  }
  return p;
}

Progression parse_leadsheet_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lead sheet '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_leadsheet(buf.str());
}

Progression transposed(const Progression& p, int n) {
  Progression out = p;
  auto shift = [n](const std::string& spelling) {
    ParsedChord tmp;
    tmp.root_spelling = spelling;
    return flat_name(parsed_root_pc(tmp).plus(n));
  };
  if (out.declared_key) out.declared_key = shift(*out.declared_key);
  for (auto& measure : out.measures) {
    for (auto& chord : measure) {
      chord.root_spelling = shift(chord.root_spelling);
      if (chord.slash_bass) chord.slash_bass = shift(*chord.slash_bass);
    }
  }
  return out;
}

}  // namespace harmonia
