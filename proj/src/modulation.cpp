#include "harmonia/modulation.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "harmonia/transform.h"

namespace harmonia {

PivotTable PivotTable::shipped() {
  PivotTable t;
  t.set(5, {2, 7});
  t.set(7, {3, 5});
  return t;
}

void PivotTable::set(int interval, std::set<int> degrees) {
  if (interval < 0 || interval > 11) {
    throw Error("pivot interval must lie in 0..11");
  }
  if (degrees.empty()) throw Error("pivot entry needs at least one degree");
  entries_[interval] = std::move(degrees);
}

const std::set<int>* PivotTable::find(int interval) const {
  auto it = entries_.find(interval);
  return it == entries_.end() ? nullptr : &it->second;
}

PivotTable PivotTable::load(std::istream& in) {
  PivotTable t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string field;
    std::optional<int> interval;
    std::optional<std::set<int>> degrees;
    while (fields >> field) {
      auto fail = [&](const std::string& why) {
        throw Error("pivot table line " + std::to_string(line_no) + ": " + why);
      };
      if (field.starts_with("interval=")) {
        try {
          interval = std::stoi(field.substr(9));
        } catch (const std::exception&) {
          fail("bad interval '" + field.substr(9) + "'");
        }
      } else if (field.starts_with("degrees=")) {
        degrees.emplace();
        std::istringstream list(field.substr(8));
        std::string numeral;
        while (std::getline(list, numeral, ',')) {
          auto d = parse_roman_numeral(numeral);
          if (!d) fail("unknown Roman numeral '" + numeral + "'");
          degrees->insert(*d);
        }
      } else {
        fail("unrecognized field '" + field + "'");
      }
    }
    if (!interval && !degrees) continue;  // blank or comment line
    if (!interval || !degrees) {
      throw Error("pivot table line " + std::to_string(line_no) +
                  ": needs both interval= and degrees=");
    }
    t.set(*interval, std::move(*degrees));
  }
  return t;
}

PivotTable PivotTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pivot table '" + path + "'");
  return load(in);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Quantized: return "quantized";
    case Verdict::NonQuantizedMissing: return "non-quantized (pivots missing)";
    case Verdict::NonQuantizedNoEntry: return "non-quantized (no table entry)";
  }
  return "?";
}

ModulationClassification classify_modulation(const Tonality& from,
                                             const Tonality& to,
                                             const std::set<int>& presented,
                                             const PivotTable& table) {
  ModulationClassification out;
  out.from = from;
  out.to = to;
  out.interval = (to.root().value() - from.root().value() + 12) % 12;
  out.presented_degrees = presented;

  const std::set<int>* required = table.find(out.interval);
  if (required == nullptr) {
    out.verdict = Verdict::NonQuantizedNoEntry;
    return out;
  }
  for (int d : *required) {
    if (!presented.contains(d)) out.missing.insert(d);
  }
  out.verdict = out.missing.empty() ? Verdict::Quantized
                                    : Verdict::NonQuantizedMissing;
  return out;
}

BridgeResult p42_bridge(const RootedChord& c) {
  if (classify_quality(c).label != Quality::Maj7) {
    throw DomainError("P42 bridge needs a major seventh chord, got " +
                      std::string(quality_name(classify_quality(c).label)));
  }
  BridgeResult out;
  out.source_chord = c;
  out.bridge_chord = apply_generator(Generator::p42(), c);
  out.target_key = Tonality(c.root().plus(-2));
  out.establishing = {
      CadentialSet{{2, 5}, Arity::Tetradic, std::nullopt},  // cadential, not minimal
      CadentialSet{{1, 2}, Arity::Tetradic, "J1"},
  };
  return out;
}

namespace {

QualityToken token_for(Quality q) {
  switch (q) {
    case Quality::Maj7: return QualityToken::Maj7;
    case Quality::Min7: return QualityToken::Min7;
    case Quality::Dom7: return QualityToken::Dom7;
    case Quality::HalfDim7: return QualityToken::HalfDim;
    default: throw Error("no symbol token for this quality");
  }
}

ParsedChord symbol_for(const RootedChord& c) {
  ParsedChord p;
  p.root_spelling = flat_name(c.root());
  p.quality = token_for(classify_quality(c).label);
  return p;
}

}  // namespace

Progression descending_chain(const Tonality& start, int length, bool fast) {
  if (length < 1) throw Error("chain length must be at least 1");
  if (!start.heptatonic()) throw Error("chain needs a heptatonic key");

  Progression p;
  p.title = fast ? "fast descending chain" : "descending ii-V-I chain";
  p.declared_key = flat_name(start.root());

  Tonality key = start;
  for (int i = 0; i < length; ++i) {
    std::vector<ParsedChord> measure;
    measure.push_back(symbol_for(degree_chord(key, {2}, Arity::Tetradic)));
    if (!fast) {
      measure.push_back(symbol_for(degree_chord(key, {5}, Arity::Tetradic)));
    }
    measure.push_back(symbol_for(degree_chord(key, {1}, Arity::Tetradic)));
    p.measures.push_back(std::move(measure));
    key = Tonality(key.root().plus(-2), key.pattern());
  }
  return p;
}

std::vector<CommonChord> common_degree_chords(const Tonality& k1,
                                              const Tonality& k2, Arity arity) {
  if (!k1.heptatonic() || !k2.heptatonic()) {
    throw Error("common degree chords need heptatonic keys");
  }
  std::vector<CommonChord> out;
  for (int d1 = 1; d1 <= 7; ++d1) {
    const RootedChord c = degree_chord(k1, {d1}, arity);
    for (int d2 = 1; d2 <= 7; ++d2) {
      if (degree_chord(k2, {d2}, arity) == c) {
        out.push_back({c, {d1}, {d2}});
        break;
      }
    }
  }
  return out;
}

}  // namespace harmonia
