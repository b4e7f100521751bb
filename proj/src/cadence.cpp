#include "harmonia/cadence.h"

#include <algorithm>
#include <array>
#include <map>

namespace harmonia {

const std::vector<int>& Tonality::major_pattern() {
  static const std::vector<int> pattern = {0, 2, 4, 5, 7, 9, 11};
  return pattern;
}

Tonality::Tonality(PitchClass root) : Tonality(root, major_pattern()) {}

Tonality::Tonality(PitchClass root, std::vector<int> pattern)
    : root_(root), pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw Error("scale pattern must be non-empty");
  if (pattern_.front() != 0) throw Error("scale pattern must start at 0");
  for (size_t i = 0; i < pattern_.size(); ++i) {
    if (pattern_[i] < 0 || pattern_[i] >= 12) {
      throw Error("scale pattern offsets must lie in 0..11");
    }
    if (i > 0 && pattern_[i] <= pattern_[i - 1]) {
      throw Error("scale pattern must be strictly increasing");
    }
  }
}

PitchClass Tonality::note_at(int position) const {
  if (position < 1 || position > note_count()) {
    throw Error("scale position out of range");
  }
  return root_.plus(pattern_[position - 1]);
}

bool Tonality::contains_pc(PitchClass pc) const {
  for (int off : pattern_) {
    if (root_.plus(off) == pc) return true;
  }
  return false;
}

namespace {

const std::array<const char*, 7> kRomans = {"I",  "II", "III", "IV",
                                            "V",  "VI", "VII"};

// Chord on 1-based degree `d`, stacking `count` scale thirds. Duplicate
// pitch classes (possible for non-heptatonic patterns) collapse.
RootedChord stacked_degree_chord(const Tonality& t, int d, int count) {
  const int n = t.note_count();
  std::vector<int> pcs;
  pcs.reserve(count);
  for (int i = 0; i < count; ++i) {
    int position = ((d - 1 + 2 * i) % n) + 1;
    pcs.push_back(t.note_at(position).value());
  }
  return chord_from_pcs(t.note_at(d), pcs);
}

int stack_count(Arity arity) { return arity == Arity::Tetradic ? 4 : 3; }

}  // namespace

std::string roman_numeral(int degree) {
  if (degree < 1 || degree > 7) return "?" + std::to_string(degree);
  return kRomans[degree - 1];
}

std::optional<int> parse_roman_numeral(std::string_view text) {
  for (int d = 1; d <= 7; ++d) {
    if (text == kRomans[d - 1]) return d;
  }
  return std::nullopt;
}

RootedChord degree_chord(const Tonality& t, ScaleDegree d, Arity arity) {
  if (!t.heptatonic()) throw Error("degree chords require a heptatonic scale");
  if (d.index < 1 || d.index > 7) throw Error("scale degree out of range 1..7");
  return stacked_degree_chord(t, d.index, stack_count(arity));
}

std::vector<Tonality> scales_containing(const RootedChord& c,
                                        const std::vector<int>& pattern,
                                        Arity arity) {
  std::vector<Tonality> out;
  for (int root = 0; root < 12; ++root) {
    Tonality t(PitchClass(root), pattern);
    for (int d = 1; d <= t.note_count(); ++d) {
      if (stacked_degree_chord(t, d, stack_count(arity)) == c) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

std::string to_string(const CadentialSet& s) {
  std::string out = "{";
  bool first = true;
  for (int d : s.degrees) {
    if (!first) out += ",";
    out += roman_numeral(d);
    first = false;
  }
  out += "}";
  return out;
}

namespace {

// Degree chords of every transposition of t's pattern, indexed by root.
std::array<std::vector<RootedChord>, 12> all_transposition_chords(
    const Tonality& t, Arity arity) {
  std::array<std::vector<RootedChord>, 12> out;
  const int count = stack_count(arity);
  for (int root = 0; root < 12; ++root) {
    Tonality other(PitchClass(root), t.pattern());
    for (int d = 1; d <= other.note_count(); ++d) {
      out[root].push_back(stacked_degree_chord(other, d, count));
    }
  }
  return out;
}

bool contains_all(const std::vector<RootedChord>& haystack,
                  const std::vector<const RootedChord*>& needles) {
  for (const RootedChord* n : needles) {
    if (std::find(haystack.begin(), haystack.end(), *n) == haystack.end()) {
      return false;
    }
  }
  return true;
}

struct EnumerationContext {
  const Tonality& t;
  std::array<std::vector<RootedChord>, 12> chords;

  bool identifies(unsigned mask) const {
    std::vector<const RootedChord*> subset;
    const auto& own = chords[t.root().value()];
    for (size_t d = 0; d < own.size(); ++d) {
      if (mask & (1u << d)) subset.push_back(&own[d]);
    }
    for (int root = 0; root < 12; ++root) {
      if (root == t.root().value()) continue;
      if (contains_all(chords[root], subset)) return false;
    }
    return true;
  }

  // identifies() is antitone in the containing-scale set, so dropping one
  // degree at a time suffices for the minimality check.
  bool minimal(unsigned mask) const {
    if (!identifies(mask)) return false;
    for (size_t d = 0; d < chords[t.root().value()].size(); ++d) {
      unsigned bit = 1u << d;
      if ((mask & bit) && identifies(mask & ~bit)) return false;
    }
    return true;
  }
};

const std::map<std::set<int>, std::string>& major_names(Arity arity) {
  static const std::map<std::set<int>, std::string> tetradic = {
      {{1, 2}, "J1"}, {{1, 4}, "J2"}, {{2, 3}, "J3"},
      {{3, 4}, "J4"}, {{5}, "J5"},    {{7}, "J6"},
  };
  static const std::map<std::set<int>, std::string> triadic = {
      {{2, 5}, "k1"}, {{2, 3}, "k2"}, {{3, 4}, "k3"},
      {{4, 5}, "k4"}, {{7}, "k5"},
  };
  return arity == Arity::Tetradic ? tetradic : triadic;
}

}  // namespace

bool is_cadential(const Tonality& t, const std::set<int>& degrees, Arity arity) {
  if (degrees.empty()) return false;
  EnumerationContext ctx{t, all_transposition_chords(t, arity)};
  unsigned mask = 0;
  for (int d : degrees) {
    if (d < 1 || d > t.note_count()) throw Error("degree out of range");
    mask |= 1u << (d - 1);
  }
  return ctx.identifies(mask);
}

bool is_minimal_cadential(const Tonality& t, const std::set<int>& degrees,
                          Arity arity) {
  if (degrees.empty()) return false;
  EnumerationContext ctx{t, all_transposition_chords(t, arity)};
  unsigned mask = 0;
  for (int d : degrees) {
    if (d < 1 || d > t.note_count()) throw Error("degree out of range");
    mask |= 1u << (d - 1);
  }
  return ctx.minimal(mask);
}

std::vector<CadentialSet> minimal_cadential_sets(const Tonality& t, Arity arity) {
  EnumerationContext ctx{t, all_transposition_chords(t, arity)};
  const int n = t.note_count();

  std::vector<CadentialSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!ctx.minimal(mask)) continue;
    CadentialSet s;
    s.arity = arity;
    for (int d = 0; d < n; ++d) {
      if (mask & (1u << d)) s.degrees.insert(d + 1);
    }
    out.push_back(std::move(s));
  }

  std::sort(out.begin(), out.end(), [](const CadentialSet& a, const CadentialSet& b) {
    if (a.degrees.size() != b.degrees.size()) {
      return a.degrees.size() < b.degrees.size();
    }
    return std::lexicographical_compare(a.degrees.begin(), a.degrees.end(),
                                        b.degrees.begin(), b.degrees.end());
  });

  if (t.is_major()) {
    const auto& names = major_names(arity);
    for (auto& s : out) {
      auto it = names.find(s.degrees);
      if (it != names.end()) s.name = it->second;
    }
  }
  return out;
}

char region_letter(Region r) {
  switch (r) {
    case Region::A: return 'A';
    case Region::B: return 'B';
    case Region::C: return 'C';
  }
  return '?';
}

Region region_of(const CadentialSet& s) {
  if (s.degrees.contains(1)) return Region::B;
  if (s.degrees.size() == 1) return Region::C;
  return Region::A;
}

PairLink cadence_pair_morphism(const CadentialSet& a, const CadentialSet& b,
                               const Tonality& t) {
  struct LinkRule {
    std::set<int> lhs;
    std::set<int> rhs;
    Generator morphism;
  };
  static const std::vector<LinkRule> rules = {
      {{2, 3}, {3, 4}, Generator::r42()},  // J3 <-> J4
      {{1, 2}, {1, 4}, Generator::r42()},  // J1 <-> J2
      {{5}, {7}, Generator::l13()},        // J5 <-> J6
  };

  const LinkRule* rule = nullptr;
  for (const auto& candidate : rules) {
    if ((a.degrees == candidate.lhs && b.degrees == candidate.rhs) ||
        (a.degrees == candidate.rhs && b.degrees == candidate.lhs)) {
      rule = &candidate;
      break;
    }
  }
  if (rule == nullptr || a.arity != Arity::Tetradic || b.arity != Arity::Tetradic) {
    throw UnlinkedPair("no morphism links " + to_string(a) + " and " +
                       to_string(b));
  }

  PairLink link;
  link.from = a;
  link.to = b;
  link.morphism = rule->morphism;
  std::set_intersection(a.degrees.begin(), a.degrees.end(), b.degrees.begin(),
                        b.degrees.end(),
                        std::inserter(link.anchor, link.anchor.begin()));

  for (int d : a.degrees) {
    if (link.anchor.contains(d)) continue;
    const RootedChord image =
        apply_generator(link.morphism, degree_chord(t, {d}, Arity::Tetradic));
    bool found = false;
    for (int e : b.degrees) {
      if (link.anchor.contains(e)) continue;
      if (degree_chord(t, {e}, Arity::Tetradic) == image) {
        link.mapped.emplace_back(d, e);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("pair morphism failed to map degree " + roman_numeral(d));
    }
  }
  return link;
}

std::vector<CadenceImageEntry> cadence_image(const CadentialSet& s,
                                             const Generator& g,
                                             const Tonality& t) {
  std::vector<CadenceImageEntry> out;
  for (int d : s.degrees) {
    CadenceImageEntry entry;
    entry.degree_from = d;
    entry.image = apply_generator(g, degree_chord(t, {d}, s.arity));
    for (int e = 1; e <= 7; ++e) {
      if (degree_chord(t, {e}, s.arity) == entry.image) {
        entry.degree_to = e;
        break;
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

VerificationReport verify_cadence_enumeration() {
  VerificationReport report;
  report.check_id = "cadences";

  const std::vector<std::set<int>> expected_tetradic = {
      {5}, {7}, {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  const std::vector<std::set<int>> expected_triadic = {
      {7}, {2, 3}, {2, 5}, {3, 4}, {4, 5}};

  for (int root = 0; root < 12; ++root) {
    const Tonality t{PitchClass(root)};
    for (Arity arity : {Arity::Tetradic, Arity::Triadic}) {
      ++report.cases_checked;
      const auto& expected = arity == Arity::Tetradic ? expected_tetradic
                                                      : expected_triadic;
      const auto sets = minimal_cadential_sets(t, arity);
      bool ok = sets.size() == expected.size();
      if (ok) {
        for (size_t i = 0; i < sets.size(); ++i) {
          if (sets[i].degrees != expected[i] || !sets[i].name) ok = false;
        }
      }
      if (!ok) {
        VerificationReport::Failure f;
        f.context = "enumeration mismatch for key root " + std::to_string(root) +
                    (arity == Arity::Tetradic ? " (tetradic)" : " (triadic)");
        report.failures.push_back(std::move(f));
      }
    }
  }
  return report;
}

}  // namespace harmonia
