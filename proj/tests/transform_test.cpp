#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>

#include "harmonia/transform.h"

using namespace harmonia;

namespace {

RootedChord on(int root, Quality q) {
  return make_chord(PitchClass(root), quality_intervals(q));
}

std::vector<RootedChord> all_of(Quality q) {
  std::vector<RootedChord> out;
  for (int r = 0; r < 12; ++r) out.push_back(on(r, q));
  return out;
}

}  // namespace

TEST_CASE("generator fidelity on the classic examples") {
  // R42 on Fmaj7 [5,9,0,4] -> Dm7 [2,5,9,0]
  CHECK(apply_generator(Generator::r42(), on(5, Quality::Maj7)) ==
        on(2, Quality::Min7));
  // L13 on G7 [7,11,2,5] -> half-diminished on B, pcs {9,11,2,5}
  const RootedChord l13_image = apply_generator(Generator::l13(), on(7, Quality::Dom7));
  CHECK(l13_image == on(11, Quality::HalfDim7));
  {
    auto pcs = l13_image.pitch_classes();
    std::sort(pcs.begin(), pcs.end());
    CHECK(pcs == std::vector<int>{2, 5, 9, 11});
  }
  // P42 on Bmaj7 [11,3,6,10] -> Bm7 [11,2,6,9]
  const RootedChord bm7 = apply_generator(Generator::p42(), on(11, Quality::Maj7));
  CHECK(bm7 == on(11, Quality::Min7));
  {
    auto pcs = bm7.pitch_classes();
    std::sort(pcs.begin(), pcs.end());
    CHECK(pcs == std::vector<int>{2, 6, 9, 11});
  }
  // Triadic relative: C -> Am, Am -> C
  CHECK(apply_generator(Generator::triad_r(), on(0, Quality::MajorTriad)) ==
        on(9, Quality::MinorTriad));
  CHECK(apply_generator(Generator::triad_r(), on(9, Quality::MinorTriad)) ==
        on(0, Quality::MajorTriad));

  CHECK_THROWS_AS(apply_generator(Generator::r42(), on(7, Quality::Dom7)),
                  DomainError);
}

TEST_CASE("word application and identity") {
  const RootedChord cmaj7 = on(0, Quality::Maj7);
  // T8 after L42 equals P42.
  CHECK(apply_word(parse_word("L42,T8"), cmaj7) == on(0, Quality::Min7));
  CHECK(apply_word(TransformationWord{}, cmaj7) == cmaj7);
  CHECK(apply_word(parse_word("R42,R42"), on(5, Quality::Maj7)) ==
        on(5, Quality::Maj7));

  CHECK_THROWS_AS(apply_word(parse_word("R42,L13,R42"), cmaj7), DomainError);
}

TEST_CASE("P42 equals T8 composed with L42 on every maj7 chord") {
  const TransformationWord composite = parse_word("L42,T8");
  for (const auto& c : all_of(Quality::Maj7)) {
    CHECK(apply_word(composite, c) == apply_generator(Generator::p42(), c));
  }
}

TEST_CASE("invert_word undoes a word") {
  CHECK(invert_word(parse_word("T5")) == parse_word("T7"));
  CHECK(invert_word(parse_word("R42")) == parse_word("R42"));
  CHECK(invert_word(parse_word("L42,T8")) == parse_word("T4,L42"));

  const TransformationWord w = parse_word("L42,T8");
  for (const auto& c : all_of(Quality::Maj7)) {
    CHECK(apply_word(invert_word(w), apply_word(w, c)) == c);
  }
}

TEST_CASE("generators commute with every transposition on their domain") {
  struct Case {
    Generator g;
    std::vector<Quality> domain;
  };
  const Case cases[] = {
      {Generator::r42(), {Quality::Maj7, Quality::Min7}},
      {Generator::l13(), {Quality::Dom7, Quality::HalfDim7}},
      {Generator::l42(), {Quality::Maj7, Quality::Min7}},
      {Generator::p42(), {Quality::Maj7, Quality::Min7}},
      {Generator::triad_r(), {Quality::MajorTriad, Quality::MinorTriad}},
  };
  for (const auto& [g, domain] : cases) {
    for (Quality q : domain) {
      for (const auto& c : all_of(q)) {
        for (int n = 0; n < 12; ++n) {
          CHECK(apply_generator(g, transpose(c, n)) ==
                transpose(apply_generator(g, c), n));
        }
      }
    }
  }
}

TEST_CASE("theory checks pass") {
  for (const auto& id : verification_check_ids()) {
    const VerificationReport report = verify_theory(id);
    CHECK_MESSAGE(report.passed(), "check '" << id << "' failed");
    CHECK(report.cases_checked > 0);
  }
  CHECK(verify_theory("r42_t_commute").cases_checked == 288);
  CHECK(verify_theory("p42_supertonic").cases_checked == 12);
  CHECK_THROWS_AS(verify_theory("nonsense"), UnknownCheckId);
}

TEST_CASE("prism check detects a perturbed R42") {
  // Same semantics except R42 on maj7 lands a semitone short.
  const GeneratorApplier mutated = [](const Generator& g, const RootedChord& c)
      -> std::optional<RootedChord> {
    if (g.kind == Generator::Kind::R42 &&
        classify_quality(c).label == Quality::Maj7) {
      return make_chord(c.root().plus(8), quality_intervals(Quality::Min7));
    }
    return try_apply_generator(g, c);
  };
  const VerificationReport report = verify_prism_with(mutated);
  CHECK(!report.failures.empty());
  CHECK(verify_prism_with(try_apply_generator).passed());
}

TEST_CASE("shortest_path basics") {
  CHECK(*shortest_path(on(0, Quality::Maj7), on(9, Quality::Min7)) ==
        parse_word("R42"));
  CHECK(shortest_path(on(0, Quality::Maj7), on(0, Quality::Maj7))->empty());
  CHECK(!shortest_path(on(0, Quality::Maj7), on(0, Quality::Dim7)).has_value());
  CHECK_THROWS_AS(shortest_path(on(0, Quality::Maj7), on(9, Quality::Min7), {}),
                  EmptyGeneratorSet);

  // Lexicographic tie-break: Cmaj7 -> Cm7 reachable in one step only by P42.
  CHECK(*shortest_path(on(0, Quality::Maj7), on(0, Quality::Min7)) ==
        parse_word("P42"));
}

TEST_CASE("shortest_path with transpositions reaches every maj7") {
  std::vector<Generator> gens = {Generator::transpose_by(1)};
  const auto word = shortest_path(on(0, Quality::Maj7), on(7, Quality::Maj7), gens);
  REQUIRE(word.has_value());
  CHECK(word->size() == 7);
}

TEST_CASE("shortest_path ties break on canonical generator order") {
  // Dm7 is reachable from Cmaj7 via [R42,T5] and [T5,R42]; R42 ranks first.
  std::vector<Generator> gens = {Generator::transpose_by(5), Generator::r42()};
  const auto word = shortest_path(on(0, Quality::Maj7), on(2, Quality::Min7), gens);
  REQUIRE(word.has_value());
  CHECK(*word == parse_word("R42,T5"));
}

TEST_CASE("T0 is not constructible") {
  CHECK_THROWS_AS(Generator::transpose_by(0), std::invalid_argument);
  CHECK_THROWS_AS(Generator::transpose_by(12), std::invalid_argument);
  CHECK(Generator::transpose_by(-1).steps == 11);
}

TEST_CASE("BFS distances agree with Floyd-Warshall over the seventh-chord graph") {
  // Independent oracle: all-pairs shortest paths over the 60-node graph.
  const Quality qualities[] = {Quality::Maj7, Quality::Dom7, Quality::Min7,
                               Quality::HalfDim7, Quality::Dim7};
  std::vector<RootedChord> nodes;
  for (Quality q : qualities) {
    for (int r = 0; r < 12; ++r) nodes.push_back(on(r, q));
  }
  const int n = static_cast<int>(nodes.size());
  REQUIRE(n == 60);
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
        if (dist[i][k] + dist[k][j] < dist[i][j]) {
          dist[i][j] = dist[i][k] + dist[k][j];
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto word = shortest_path(nodes[i], nodes[j]);
      if (dist[i][j] == kInf) {
        CHECK(!word.has_value());
      } else {
        REQUIRE(word.has_value());
        CHECK(static_cast<int>(word->size()) == dist[i][j]);
        CHECK(apply_word(*word, nodes[i]) == nodes[j]);
      }
    }
  }
}

TEST_CASE("generator parsing round-trip") {
  for (const char* token : {"R42", "L13", "L42", "P42", "R", "T1", "T11"}) {
    auto g = parse_generator(token);
    REQUIRE(g.has_value());
    CHECK(to_string(*g) == token);
  }
  CHECK(!parse_generator("T0").has_value());
  CHECK(!parse_generator("T12").has_value());
  CHECK(!parse_generator("Q").has_value());
  CHECK_THROWS_AS(parse_word("R42,nope"), Error);
}
