// Acceptance suite: one pass/fail line per criterion, exact integer
// arithmetic throughout, nonzero exit when anything fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "harmonia/analyze.h"
#include "harmonia/cadence.h"
#include "harmonia/chordsym.h"
#include "harmonia/dot_export.h"
#include "harmonia/modulation.h"
#include "harmonia/pitch.h"
#include "harmonia/transform.h"

using namespace harmonia;

namespace {

int g_failures_in_criterion = 0;

void expect(bool condition, const char* what) {
  if (!condition) {
    ++g_failures_in_criterion;
    std::printf("      failed: %s\n", what);
  }
}

#define EXPECT(cond) expect((cond), #cond)

RootedChord on(int root, Quality q) {
  return make_chord(PitchClass(root), quality_intervals(q));
}

std::string data_file(const char* name) {
  return std::string(HARMONIA_DATA_DIR) + "/" + name;
}

// --------------------------------------------------------------------------
// 1. Tetradic cadence enumeration, brute force oracle, all 12 roots.
// --------------------------------------------------------------------------
void criterion_tetradic_cadences() {
  const std::set<std::set<int>> expected = {{1, 2}, {1, 4}, {2, 3},
                                            {3, 4}, {5},    {7}};
  const std::map<std::set<int>, std::string> names = {
      {{1, 2}, "J1"}, {{1, 4}, "J2"}, {{2, 3}, "J3"},
      {{3, 4}, "J4"}, {{5}, "J5"},    {{7}, "J6"}};

  for (int root = 0; root < 12; ++root) {
    const Tonality t{PitchClass(root)};
    std::set<std::set<int>> got;
    for (const auto& s : minimal_cadential_sets(t, Arity::Tetradic)) {
      got.insert(s.degrees);
      auto it = names.find(s.degrees);
      EXPECT(it != names.end() && s.name == it->second);
    }
    EXPECT(got == expected);

    // Brute force over all 2^7 subsets and 12 transpositions, straight from
    // the definitions.
    for (unsigned mask = 1; mask < (1u << 7); ++mask) {
      std::set<int> degrees;
      for (int d = 0; d < 7; ++d) {
        if (mask & (1u << d)) degrees.insert(d + 1);
      }
      const bool minimal = is_minimal_cadential(t, degrees, Arity::Tetradic);
      EXPECT(minimal == (expected.count(degrees) == 1));
    }
  }
}

// --------------------------------------------------------------------------
// 2. Triadic cadence enumeration.
// --------------------------------------------------------------------------
void criterion_triadic_cadences() {
  const std::set<std::set<int>> expected = {{2, 5}, {2, 3}, {3, 4}, {4, 5}, {7}};
  const std::map<std::set<int>, std::string> names = {
      {{2, 5}, "k1"}, {{2, 3}, "k2"}, {{3, 4}, "k3"}, {{4, 5}, "k4"}, {{7}, "k5"}};

  for (int root = 0; root < 12; ++root) {
    std::set<std::set<int>> got;
    for (const auto& s :
         minimal_cadential_sets(Tonality(PitchClass(root)), Arity::Triadic)) {
      got.insert(s.degrees);
      auto it = names.find(s.degrees);
      EXPECT(it != names.end() && s.name == it->second);
    }
    EXPECT(got == expected);
  }
}

// --------------------------------------------------------------------------
// 3. Generator fidelity.
// --------------------------------------------------------------------------
void criterion_generator_fidelity() {
  // R42(Fmaj7) = Dm7.
  EXPECT(apply_generator(Generator::r42(), on(5, Quality::Maj7)) ==
         on(2, Quality::Min7));

  // L13(G7) has pitch classes {9,11,2,5}.
  const RootedChord l13 = apply_generator(Generator::l13(), on(7, Quality::Dom7));
  auto pcs = l13.pitch_classes();
  std::sort(pcs.begin(), pcs.end());
  EXPECT(pcs == (std::vector<int>{2, 5, 9, 11}));
  EXPECT(classify_quality(l13).label == Quality::HalfDim7);

  // P42(Bmaj7) = Bm7.
  EXPECT(apply_generator(Generator::p42(), on(11, Quality::Maj7)) ==
         on(11, Quality::Min7));

  // T8 after L42 equals P42 on every maj7 chord.
  const TransformationWord composite = parse_word("L42,T8");
  for (int root = 0; root < 12; ++root) {
    EXPECT(apply_word(composite, on(root, Quality::Maj7)) ==
           apply_generator(Generator::p42(), on(root, Quality::Maj7)));
  }
}

// --------------------------------------------------------------------------
// 4. Prism theorem plus mutation sanity.
// --------------------------------------------------------------------------
void criterion_prism() {
  const VerificationReport report = verify_theory("prism");
  EXPECT(report.passed());
  EXPECT(report.cases_checked >= 12);

  const GeneratorApplier mutated = [](const Generator& g, const RootedChord& c)
      -> std::optional<RootedChord> {
    if (g.kind == Generator::Kind::R42 &&
        classify_quality(c).label == Quality::Maj7) {
      return make_chord(c.root().plus(8), quality_intervals(Quality::Min7));
    }
    return try_apply_generator(g, c);
  };
  EXPECT(!verify_prism_with(mutated).failures.empty());
}

// --------------------------------------------------------------------------
// 5. Commutation and involutions.
// --------------------------------------------------------------------------
void criterion_commutation_involutions() {
  const VerificationReport commute = verify_theory("r42_t_commute");
  EXPECT(commute.passed());
  EXPECT(commute.cases_checked == 288);
  EXPECT(verify_theory("involutions").passed());
  EXPECT(verify_theory("triadic_diagram").passed());
  EXPECT(verify_theory("triangles").passed());
}

// --------------------------------------------------------------------------
// 6. P42 supertonic law.
// --------------------------------------------------------------------------
void criterion_p42_supertonic() {
  EXPECT(verify_theory("p42_supertonic").passed());
  for (int k = 0; k < 12; ++k) {
    const Tonality below{PitchClass(k - 2)};
    EXPECT(apply_generator(Generator::p42(), on(k, Quality::Maj7)) ==
           degree_chord(below, {2}, Arity::Tetradic));
  }
}

// --------------------------------------------------------------------------
// 7. Blues for Alice reproduction.
// --------------------------------------------------------------------------
void criterion_blues_for_alice() {
  const AnalysisReport report =
      analyze(parse_leadsheet_file(data_file("blues_for_alice.ls")));

  // Keyed F throughout.
  EXPECT(report.key_timeline.spans.size() == 1);
  EXPECT(report.key_timeline.spans[0].key.root().value() == 5);

  auto region_name = [&report](const char* name) -> char {
    for (const auto& w : report.windows) {
      for (const auto& a : w.activated) {
        if (a.set.name == name) return region_letter(a.region);
      }
    }
    return '?';
  };
  auto first_activation = [&report](const char* name) {
    for (const auto& w : report.windows) {
      for (const auto& a : w.activated) {
        if (a.set.name == name) return w.first_measure;
      }
    }
    return 1 << 20;
  };
  auto activated_in = [&report](const char* name, int lo, int hi) {
    for (const auto& w : report.windows) {
      if (w.first_measure > lo || w.last_measure < hi) continue;
      for (const auto& a : w.activated) {
        if (a.set.name == name) return true;
      }
    }
    return false;
  };

  EXPECT(activated_in("J1", 1, 3));   // window covering mm.1-3
  EXPECT(activated_in("J2", 4, 5));   // window covering mm.4-5
  EXPECT(activated_in("J4", 7, 7));   // window reaching m.7
  bool j3_at_9_12 = false;
  for (const auto& w : report.windows) {
    if (w.first_measure == 9 && w.last_measure == 12) {
      for (const auto& a : w.activated) {
        if (a.set.name == "J3") j3_at_9_12 = true;
      }
    }
  }
  EXPECT(j3_at_9_12);

  // First activations in order, region path B -> B -> A -> A.
  EXPECT(first_activation("J1") < first_activation("J2"));
  EXPECT(first_activation("J2") < first_activation("J4"));
  EXPECT(first_activation("J4") < first_activation("J3"));
  EXPECT(region_name("J1") == 'B');
  EXPECT(region_name("J2") == 'B');
  EXPECT(region_name("J4") == 'A');
  EXPECT(region_name("J3") == 'A');
}

// --------------------------------------------------------------------------
// 8. Cherokee reproduction.
// --------------------------------------------------------------------------
void criterion_cherokee() {
  const AnalysisReport report =
      analyze(parse_leadsheet_file(data_file("cherokee.ls")));

  // Bb -> Eb quantized with {II, VII}: Fm7 exact, VII by cover.
  const ModulationEvent* to_eb = nullptr;
  const ModulationEvent* to_bb = nullptr;
  int non_quantized = 0;
  for (const auto& m : report.modulations) {
    if (m.classification.interval == 5 && m.change.to.root().value() == 3) {
      to_eb = &m;
    } else if (m.classification.interval == 7 &&
               m.change.to.root().value() == 10) {
      to_bb = &m;
    } else if (m.classification.verdict != Verdict::Quantized) {
      ++non_quantized;
    }
  }
  EXPECT(to_eb != nullptr);
  if (to_eb != nullptr) {
    EXPECT(to_eb->classification.verdict == Verdict::Quantized);
    bool ii_exact = false, vii_cover = false;
    for (const auto& e : to_eb->evidence) {
      if (e.degree.index == 2 && e.kind == MatchMode::Exact &&
          render_chord(e.chord) == "Fm7") {
        ii_exact = true;
      }
      if (e.degree.index == 7 && e.kind == MatchMode::Cover &&
          e.note.find("Ab9") != std::string::npos &&
          e.note.find("Bb6") != std::string::npos) {
        vii_cover = true;
      }
    }
    EXPECT(ii_exact);
    EXPECT(vii_cover);
  }

  EXPECT(to_bb != nullptr);
  if (to_bb != nullptr) {
    EXPECT(to_bb->classification.verdict == Verdict::Quantized);
    bool iii_exact = false, v_root = false;
    for (const auto& e : to_bb->evidence) {
      if (e.degree.index == 3 && e.kind == MatchMode::Exact &&
          render_chord(e.chord) == "Dm7") {
        iii_exact = true;
      }
      if (e.degree.index == 5 && e.kind == MatchMode::DegreeRoot &&
          render_chord(e.chord) == "F+7") {
        v_root = true;
      }
    }
    EXPECT(iii_exact);
    EXPECT(v_root);
  }

  // The whole-step bridge modulations are not quantized.
  EXPECT(non_quantized >= 2);

  // P42 bridges at Bmaj7 -> Bm7 and Amaj7 -> Am7.
  EXPECT(report.bridges.size() == 2);
  if (report.bridges.size() == 2) {
    EXPECT(render_chord(report.bridges[0].from_chord) == "Bmaj7");
    EXPECT(render_chord(report.bridges[0].to_chord) == "Bm7");
    EXPECT(render_chord(report.bridges[1].from_chord) == "Amaj7");
    EXPECT(render_chord(report.bridges[1].to_chord) == "Am7");
  }
}

// --------------------------------------------------------------------------
// 9. {II,V} tetradic: cadential, not minimal.
// --------------------------------------------------------------------------
void criterion_ii_v_not_minimal() {
  for (int root = 0; root < 12; ++root) {
    const Tonality t{PitchClass(root)};
    EXPECT(is_cadential(t, {2, 5}, Arity::Tetradic));
    EXPECT(!is_minimal_cadential(t, {2, 5}, Arity::Tetradic));
    EXPECT(is_minimal_cadential(t, {5}, Arity::Tetradic));
  }
}

// --------------------------------------------------------------------------
// 10. Parser round trip and realization oracles.
// --------------------------------------------------------------------------
void criterion_parser_round_trip() {
  for (const char* file : {"blues_for_alice.ls", "cherokee.ls"}) {
    const Progression p = parse_leadsheet_file(data_file(file));
    for (const auto& measure : p.measures) {
      for (const auto& chord : measure) {
        EXPECT(parse_chord(render_chord(chord)) == chord);
      }
    }
  }

  auto pcs = [](const char* symbol) {
    auto [chord, quality] = realize_chord(parse_chord(symbol));
    (void)quality;
    const auto list = chord.pitch_classes();
    return std::set<int>(list.begin(), list.end());
  };
  EXPECT(pcs("F6") == (std::set<int>{5, 9, 0, 2}));        // F A C D
  EXPECT(pcs("Ab9") == (std::set<int>{8, 0, 3, 6, 10}));   // Ab C Eb Gb Bb
  EXPECT(pcs("F+7") == (std::set<int>{5, 9, 1, 3}));       // F A C# Eb
  EXPECT(pcs("A7b9") == (std::set<int>{9, 1, 4, 7, 10}));  // A C# E G Bb
}

// --------------------------------------------------------------------------
// 11. Pathfinder oracle equivalence.
// --------------------------------------------------------------------------
void criterion_pathfinder() {
  const Quality qualities[] = {Quality::Maj7, Quality::Dom7, Quality::Min7,
                               Quality::HalfDim7, Quality::Dim7};
  std::vector<RootedChord> nodes;
  for (Quality q : qualities) {
    for (int r = 0; r < 12; ++r) nodes.push_back(on(r, q));
  }
  const int n = static_cast<int>(nodes.size());
  std::map<RootedChord, int> index;
  for (int i = 0; i < n; ++i) index[nodes[i]] = i;

  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) dist[i][i] = 0;
  for (int i = 0; i < n; ++i) {
    for (const auto& g : default_path_generators()) {
      auto image = try_apply_generator(g, nodes[i]);
      if (image) dist[i][index.at(*image)] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }

  bool all_equal = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto word = shortest_path(nodes[i], nodes[j]);
      const int got = word ? static_cast<int>(word->size()) : kInf;
      if (got != dist[i][j]) all_equal = false;
    }
  }
  EXPECT(all_equal);

  EXPECT(*shortest_path(on(0, Quality::Maj7), on(9, Quality::Min7)) ==
         parse_word("R42"));
  EXPECT(*shortest_path(on(7, Quality::Dom7), on(11, Quality::HalfDim7)) ==
         parse_word("L13"));
  EXPECT(*shortest_path(on(0, Quality::Maj7), on(0, Quality::Min7)) ==
         parse_word("P42"));
  EXPECT(!shortest_path(on(0, Quality::Maj7), on(0, Quality::Dim7)).has_value());
}

// --------------------------------------------------------------------------
// 12. Transposition equivariance of the analyzer.
// --------------------------------------------------------------------------
void criterion_equivariance() {
  const Progression base = parse_leadsheet_file(data_file("cherokee.ls"));
  const AnalysisReport reference = analyze(base);

  for (int n = 0; n < 12; ++n) {
    const AnalysisReport shifted = analyze(transposed(base, n));

    bool spans_ok = shifted.key_timeline.spans.size() ==
                    reference.key_timeline.spans.size();
    if (spans_ok) {
      for (size_t i = 0; i < reference.key_timeline.spans.size(); ++i) {
        const auto& a = reference.key_timeline.spans[i];
        const auto& b = shifted.key_timeline.spans[i];
        spans_ok = spans_ok && b.key.root() == a.key.root().plus(n) &&
                   b.first_measure == a.first_measure &&
                   b.last_measure == a.last_measure;
      }
    }
    EXPECT(spans_ok);

    bool verdicts_ok =
        shifted.modulations.size() == reference.modulations.size();
    if (verdicts_ok) {
      for (size_t i = 0; i < reference.modulations.size(); ++i) {
        verdicts_ok = verdicts_ok &&
                      shifted.modulations[i].classification.verdict ==
                          reference.modulations[i].classification.verdict;
      }
    }
    EXPECT(verdicts_ok);

    bool sets_ok = shifted.windows.size() == reference.windows.size();
    if (sets_ok) {
      for (size_t i = 0; i < reference.windows.size(); ++i) {
        sets_ok = sets_ok && shifted.windows[i].activated.size() ==
                                 reference.windows[i].activated.size();
        if (!sets_ok) break;
        for (size_t j = 0; j < reference.windows[i].activated.size(); ++j) {
          sets_ok = sets_ok && shifted.windows[i].activated[j].set.name ==
                                   reference.windows[i].activated[j].set.name;
        }
      }
    }
    EXPECT(sets_ok);
    EXPECT(shifted.bridges.size() == reference.bridges.size());
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"tetradic minimal cadential sets are J1..J6 in every key",
       criterion_tetradic_cadences},
      {"triadic minimal cadential sets are k1..k5", criterion_triadic_cadences},
      {"generator fidelity: R42, L13, P42 and T8*L42 = P42",
       criterion_generator_fidelity},
      {"prism commutes in all keys and the harness catches a mutated R42",
       criterion_prism},
      {"R42 commutes with every Tn; all involutions; triadic diagram",
       criterion_commutation_involutions},
      {"P42 sends I7 of K to II7 of K-2 for all K", criterion_p42_supertonic},
      {"Blues for Alice walks J1, J2, J4, J3 with regions B,B,A,A",
       criterion_blues_for_alice},
      {"Cherokee: quantized both ways, bridges non-quantized, P42 bridges",
       criterion_cherokee},
      {"{II,V} tetradic is cadential but not minimal", criterion_ii_v_not_minimal},
      {"parser round trip and realization oracles", criterion_parser_round_trip},
      {"pathfinder matches the all-pairs oracle", criterion_pathfinder},
      {"analyzer is transposition equivariant over all 12 shifts",
       criterion_equivariance},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    g_failures_in_criterion = 0;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      ++g_failures_in_criterion;
      std::printf("      exception: %s\n", e.what());
    }
    const bool ok = g_failures_in_criterion == 0;
    if (!ok) ++failed;
    std::printf("[%s] criterion %2zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].description);
  }
  std::printf("%zu passed, %d failed\n", criteria.size() - failed, failed);
  return failed == 0 ? 0 : 1;
}
