#include "harmonia/transform.h"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace harmonia {

Generator Generator::transpose_by(int n) {
  int r = ((n % 12) + 12) % 12;
  if (r == 0) {
    throw std::invalid_argument("T0 is not a generator; use the empty word");
  }
  return {Kind::Transpose, r};
}

int Generator::rank() const {
  switch (kind) {
    case Kind::R42: return 0;
    case Kind::L13: return 1;
    case Kind::L42: return 2;
    case Kind::P42: return 3;
    case Kind::Transpose: return 3 + steps;  // T1..T11 -> 4..14
    case Kind::TriadR: return 15;
  }
  return 15;
}

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::R42: return "R42";
    case Generator::Kind::L13: return "L13";
    case Generator::Kind::L42: return "L42";
    case Generator::Kind::P42: return "P42";
    case Generator::Kind::TriadR: return "R";
    case Generator::Kind::Transpose: return "T" + std::to_string(g.steps);
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view token) {
  if (token == "R42") return Generator::r42();
  if (token == "L13") return Generator::l13();
  if (token == "L42") return Generator::l42();
  if (token == "P42") return Generator::p42();
  if (token == "R") return Generator::triad_r();
  if (token.size() >= 2 && token.front() == 'T') {
    int n = 0;
    for (char ch : token.substr(1)) {
      if (ch < '0' || ch > '9') return std::nullopt;
      n = n * 10 + (ch - '0');
    }
    if (n >= 1 && n <= 11) return Generator::transpose_by(n);
    return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(const TransformationWord& w) {
  std::string out;
  for (size_t i = 0; i < w.gens.size(); ++i) {
    if (i) out += ",";
    out += to_string(w.gens[i]);
  }
  return out;
}

TransformationWord parse_word(std::string_view csv) {
  TransformationWord w;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string_view token = csv.substr(
        pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    if (!token.empty()) {
      auto g = parse_generator(token);
      if (!g) throw Error("unknown generator token '" + std::string(token) + "'");
      w.gens.push_back(*g);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

namespace {

RootedChord on_root(int root, Quality q) {
  return make_chord(PitchClass(root), quality_intervals(q));
}

std::vector<RootedChord> chords_of(Quality q) {
  std::vector<RootedChord> out;
  out.reserve(12);
  for (int r = 0; r < 12; ++r) out.push_back(on_root(r, q));
  return out;
}

}  // namespace

std::optional<RootedChord> try_apply_generator(const Generator& g,
                                               const RootedChord& c) {
  if (g.kind == Generator::Kind::Transpose) return transpose(c, g.steps);

  const Quality q = classify_quality(c).label;
  const int root = c.root().value();
  switch (g.kind) {
    case Generator::Kind::R42:
      if (q == Quality::Maj7) return on_root(root + 9, Quality::Min7);
      if (q == Quality::Min7) return on_root(root + 3, Quality::Maj7);
      return std::nullopt;
    case Generator::Kind::L13:
      if (q == Quality::Dom7) return on_root(root + 4, Quality::HalfDim7);
      if (q == Quality::HalfDim7) return on_root(root + 8, Quality::Dom7);
      return std::nullopt;
    case Generator::Kind::L42:
      if (q == Quality::Maj7) return on_root(root + 4, Quality::Min7);
      if (q == Quality::Min7) return on_root(root + 8, Quality::Maj7);
      return std::nullopt;
    case Generator::Kind::P42:
      if (q == Quality::Maj7) return on_root(root, Quality::Min7);
      if (q == Quality::Min7) return on_root(root, Quality::Maj7);
      return std::nullopt;
    case Generator::Kind::TriadR:
      if (q == Quality::MajorTriad) return on_root(root + 9, Quality::MinorTriad);
      if (q == Quality::MinorTriad) return on_root(root + 3, Quality::MajorTriad);
      return std::nullopt;
    case Generator::Kind::Transpose:
      break;
  }
  return std::nullopt;
}

RootedChord apply_generator(const Generator& g, const RootedChord& c) {
  auto out = try_apply_generator(g, c);
  if (!out) {
    throw DomainError(to_string(g) + " is undefined on a " +
                      std::string(quality_name(classify_quality(c).label)) +
                      " chord");
  }
  return *out;
}

RootedChord apply_word(const TransformationWord& w, const RootedChord& c) {
  RootedChord cur = c;
  for (size_t i = 0; i < w.gens.size(); ++i) {
    auto next = try_apply_generator(w.gens[i], cur);
    if (!next) {
      throw DomainError("word undefined at position " + std::to_string(i) +
                        " (" + to_string(w.gens[i]) + " on a " +
                        std::string(quality_name(classify_quality(cur).label)) +
                        " chord)");
    }
    cur = *next;
  }
  return cur;
}

TransformationWord invert_word(const TransformationWord& w) {
  TransformationWord inv;
  inv.gens.reserve(w.gens.size());
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    if (it->kind == Generator::Kind::Transpose) {
      inv.gens.push_back(Generator::transpose_by(12 - it->steps));
    } else {
      inv.gens.push_back(*it);  // involution
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Theory verification
// ---------------------------------------------------------------------------

namespace {

// Prism nodes. 0: I7, 1: IV7 (rear), 2: II7 (rear), 3: II7 (front),
// 4: IV7 (front), 5: III7.
constexpr int kPrismI = 0;
constexpr int kPrismIVRear = 1;
constexpr int kPrismIIRear = 2;
constexpr int kPrismIIFront = 3;
constexpr int kPrismIVFront = 4;
constexpr int kPrismIII = 5;

TransformationWord word_of(std::initializer_list<Generator> gens) {
  return TransformationWord{std::vector<Generator>(gens)};
}

}  // namespace

const PrismDiagram& prism_diagram() {
  static const PrismDiagram diagram = [] {
    PrismDiagram d;
    d.node_labels = {"I7", "IV7", "II7", "II7'", "IV7'", "III7"};
    auto T = [](int n) { return Generator::transpose_by(n); };
    auto R = Generator::r42();
    d.edges = {
        {kPrismI, kPrismIVRear, word_of({T(5)})},
        {kPrismI, kPrismIIFront, word_of({T(5), R})},   // forced composite
        {kPrismI, kPrismIII, word_of({R, T(7)})},       // T7 after R42
        {kPrismIVRear, kPrismIIRear, word_of({R})},
        {kPrismIVRear, kPrismIIFront, word_of({R})},
        {kPrismIIRear, kPrismIVFront, word_of({R})},
        {kPrismIIFront, kPrismIVFront, word_of({R})},
        {kPrismIII, kPrismIIRear, word_of({T(10)})},
        {kPrismIII, kPrismIVFront, word_of({T(10), R})},  // forced composite
    };
    return d;
  }();
  return diagram;
}

RootedChord prism_node_chord(PitchClass key, int node) {
  const int k = key.value();
  switch (node) {
    case kPrismI: return on_root(k, Quality::Maj7);
    case kPrismIVRear:
    case kPrismIVFront: return on_root(k + 5, Quality::Maj7);
    case kPrismIIRear:
    case kPrismIIFront: return on_root(k + 2, Quality::Min7);
    case kPrismIII: return on_root(k + 4, Quality::Min7);
    default: throw Error("prism node out of range");
  }
}

namespace {

std::optional<RootedChord> apply_word_with(const GeneratorApplier& apply,
                                           const TransformationWord& w,
                                           const RootedChord& c) {
  RootedChord cur = c;
  for (const auto& g : w.gens) {
    auto next = apply(g, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

// Enumerates every directed path of the prism DAG and checks that evaluating
// the concatenated edge words on the start node's chord lands on the end
// node's chord.
void check_prism_paths(const GeneratorApplier& apply, int key,
                       VerificationReport& report) {
  const auto& diagram = prism_diagram();

  struct Frame {
    int node;
    TransformationWord word;
  };

  for (int start = 0; start < 6; ++start) {
    std::vector<Frame> stack{{start, {}}};
    while (!stack.empty()) {
      Frame frame = stack.back();
      stack.pop_back();
      for (const auto& edge : diagram.edges) {
        if (edge.from != frame.node) continue;
        Frame next{edge.to, frame.word};
        next.word.gens.insert(next.word.gens.end(), edge.word.gens.begin(),
                              edge.word.gens.end());
        ++report.cases_checked;
        const RootedChord source = prism_node_chord(PitchClass(key), start);
        const RootedChord expected = prism_node_chord(PitchClass(key), next.node);
        auto got = apply_word_with(apply, next.word, source);
        if (!got || *got != expected) {
          report.failures.push_back(
              {source, expected, got ? *got : source,
               "key " + std::to_string(key) + ": path " +
                   diagram.node_labels[start] + " -> " +
                   diagram.node_labels[next.node] + " via [" +
                   to_string(next.word) + "]" + (got ? "" : " (undefined)")});
        }
        stack.push_back(std::move(next));
      }
    }
  }
}

VerificationReport check_triangles() {
  VerificationReport report;
  report.check_id = "triangles";
  for (int k = 0; k < 12; ++k) {
    const RootedChord tonic7 = on_root(k, Quality::Maj7);
    const RootedChord ii7 = on_root(k + 2, Quality::Min7);
    const RootedChord iii7 = on_root(k + 4, Quality::Min7);
    const RootedChord iv7 = on_root(k + 5, Quality::Maj7);

    ++report.cases_checked;
    RootedChord got = apply_word(parse_word("T5,R42"), tonic7);
    if (got != ii7) {
      report.failures.push_back({tonic7, ii7, got,
                                 "key " + std::to_string(k) + ": R42*T5 on I7"});
    }
    ++report.cases_checked;
    got = apply_word(parse_word("T10,R42"), iii7);
    if (got != iv7) {
      report.failures.push_back(
          {iii7, iv7, got, "key " + std::to_string(k) + ": R42*T10 on III7"});
    }
  }
  return report;
}

VerificationReport check_r42_t_commute() {
  VerificationReport report;
  report.check_id = "r42_t_commute";
  std::vector<RootedChord> domain = chords_of(Quality::Maj7);
  for (const auto& c : chords_of(Quality::Min7)) domain.push_back(c);
  const Generator r = Generator::r42();
  for (const auto& c : domain) {
    for (int n = 0; n < 12; ++n) {
      ++report.cases_checked;
      const RootedChord lhs = apply_generator(r, transpose(c, n));
      const RootedChord rhs = transpose(apply_generator(r, c), n);
      if (lhs != rhs) {
        report.failures.push_back(
            {c, rhs, lhs, "R42 vs T" + std::to_string(n)});
      }
    }
  }
  return report;
}

VerificationReport check_triadic_diagram() {
  VerificationReport report;
  report.check_id = "triadic_diagram";
  std::vector<RootedChord> domain = chords_of(Quality::MajorTriad);
  for (const auto& c : chords_of(Quality::MinorTriad)) domain.push_back(c);
  const Generator r = Generator::triad_r();
  for (const auto& c : domain) {
    for (int n : {5, 7}) {
      ++report.cases_checked;
      const RootedChord lhs = apply_generator(r, transpose(c, n));
      const RootedChord rhs = transpose(apply_generator(r, c), n);
      if (lhs != rhs) {
        report.failures.push_back({c, rhs, lhs, "R vs T" + std::to_string(n)});
      }
    }
  }
  return report;
}

VerificationReport check_involutions() {
  VerificationReport report;
  report.check_id = "involutions";
  struct Case {
    Generator g;
    std::vector<Quality> domain;
  };
  const std::vector<Case> cases = {
      {Generator::r42(), {Quality::Maj7, Quality::Min7}},
      {Generator::l13(), {Quality::Dom7, Quality::HalfDim7}},
      {Generator::l42(), {Quality::Maj7, Quality::Min7}},
      {Generator::p42(), {Quality::Maj7, Quality::Min7}},
      {Generator::triad_r(), {Quality::MajorTriad, Quality::MinorTriad}},
  };
  for (const auto& [g, domain] : cases) {
    for (Quality q : domain) {
      for (const auto& c : chords_of(q)) {
        ++report.cases_checked;
        const RootedChord twice = apply_generator(g, apply_generator(g, c));
        if (twice != c) {
          report.failures.push_back({c, c, twice, to_string(g) + " twice"});
        }
      }
    }
  }
  return report;
}

VerificationReport check_p42_supertonic() {
  VerificationReport report;
  report.check_id = "p42_supertonic";
  for (int k = 0; k < 12; ++k) {
    ++report.cases_checked;
    const RootedChord tonic7 = on_root(k, Quality::Maj7);
    // II7 of the key a whole step below k is the min7 rooted two steps above
    // k-2, i.e. on k itself.
    const RootedChord expected = on_root(k, Quality::Min7);
    const RootedChord got = apply_generator(Generator::p42(), tonic7);
    if (got != expected) {
      report.failures.push_back(
          {tonic7, expected, got, "P42 on I7 of key " + std::to_string(k)});
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_prism_with(const GeneratorApplier& apply) {
  VerificationReport report;
  report.check_id = "prism";
  for (int k = 0; k < 12; ++k) check_prism_paths(apply, k, report);
  return report;
}

const std::vector<std::string>& verification_check_ids() {
  static const std::vector<std::string> ids = {
      "triangles",  "prism", "r42_t_commute", "triadic_diagram",
      "involutions", "p42_supertonic",
  };
  return ids;
}

VerificationReport verify_theory(std::string_view check_id) {
  if (check_id == "triangles") return check_triangles();
  if (check_id == "prism") return verify_prism_with(try_apply_generator);
  if (check_id == "r42_t_commute") return check_r42_t_commute();
  if (check_id == "triadic_diagram") return check_triadic_diagram();
  if (check_id == "involutions") return check_involutions();
  if (check_id == "p42_supertonic") return check_p42_supertonic();
  throw UnknownCheckId("unknown check id '" + std::string(check_id) + "'");
}

// ---------------------------------------------------------------------------
// Path search
// ---------------------------------------------------------------------------

const std::vector<Generator>& default_path_generators() {
  static const std::vector<Generator> gens = {
      Generator::r42(), Generator::l13(), Generator::l42(), Generator::p42()};
  return gens;
}

std::optional<TransformationWord> shortest_path(const RootedChord& from,
                                                const RootedChord& to,
                                                std::vector<Generator> gens) {
  if (gens.empty()) throw EmptyGeneratorSet("path search needs generators");
  std::sort(gens.begin(), gens.end(),
            [](const Generator& a, const Generator& b) {
              return a.rank() < b.rank();
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  if (from == to) return TransformationWord{};

  // FIFO expansion in canonical generator order yields the lexicographically
  // smallest minimum-length word.
  std::map<RootedChord, std::pair<RootedChord, Generator>> parent;
  std::deque<RootedChord> queue{from};
  parent.emplace(from, std::make_pair(from, Generator::r42()));

  while (!queue.empty()) {
    RootedChord cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = try_apply_generator(g, cur);
      if (!next || parent.contains(*next)) continue;
      parent.emplace(*next, std::make_pair(cur, g));
      if (*next == to) {
        TransformationWord w;
        RootedChord walk = to;
        while (walk != from) {
          const auto& [prev, gen] = parent.at(walk);
          w.gens.push_back(gen);
          walk = prev;
        }
        std::reverse(w.gens.begin(), w.gens.end());
        return w;
      }
      queue.push_back(*next);
    }
  }
  return std::nullopt;
}

}  // namespace harmonia
