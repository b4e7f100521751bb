#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmonia/pitch.h"

namespace harmonia {

/// A generator was applied to a chord outside its domain.
struct DomainError : Error {
  using Error::Error;
};

struct UnknownCheckId : Error {
  using Error::Error;
};

struct EmptyGeneratorSet : Error {
  using Error::Error;
};

/// One seventh-chord generator, the triadic relative, or a transposition.
///
/// Generators act as partial maps on rooted chords:
///   R42   maj7 on x  <-> min7 on x+9      (relative)
///   L13   dom7 on x  <-> half-dim on x+4
///   L42   maj7 on x  <-> min7 on x+4
///   P42   maj7 on x  <-> min7 on x        (parallel; equals T8*L42)
///   R     major triad on x <-> minor triad on x+9
///   Tn    any chord, root moved n semitones (total)
struct Generator {
  enum class Kind { R42, L13, L42, P42, TriadR, Transpose };

  Kind kind = Kind::R42;
  int steps = 0;  // Transpose only, 1..11

  static Generator r42() { return {Kind::R42, 0}; }
  static Generator l13() { return {Kind::L13, 0}; }
  static Generator l42() { return {Kind::L42, 0}; }
  static Generator p42() { return {Kind::P42, 0}; }
  static Generator triad_r() { return {Kind::TriadR, 0}; }

  /// Throws std::invalid_argument when n is 0 mod 12; the identity is the
  /// empty word, not a generator.
  static Generator transpose_by(int n);

  /// Position in the canonical tie-break order:
  /// R42 < L13 < L42 < P42 < T1 < ... < T11 < R.
  int rank() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

/// Accepts "R42", "L13", "L42", "P42", "R" and "T1".."T11".
std::optional<Generator> parse_generator(std::string_view token);

/// A sequence of generators applied left to right; the empty word is the
/// identity.
struct TransformationWord {
  std::vector<Generator> gens;

  bool empty() const { return gens.empty(); }
  size_t size() const { return gens.size(); }

  friend bool operator==(const TransformationWord&,
                         const TransformationWord&) = default;
};

std::string to_string(const TransformationWord& w);

/// Parses a comma-separated generator list, e.g. "L42,T8". Throws Error on an
/// unknown token.
TransformationWord parse_word(std::string_view csv);

/// nullopt when c lies outside g's domain.
std::optional<RootedChord> try_apply_generator(const Generator& g,
                                               const RootedChord& c);

/// Throws DomainError when c lies outside g's domain.
RootedChord apply_generator(const Generator& g, const RootedChord& c);

/// Left-to-right composition. DomainError names the failing position.
RootedChord apply_word(const TransformationWord& w, const RootedChord& c);

/// Reversed word with each generator inverted (involutions are self-inverse,
/// Tn becomes T(12-n)). Undoes w wherever w is defined.
TransformationWord invert_word(const TransformationWord& w);

struct VerificationReport {
  struct Failure {
    RootedChord input;
    RootedChord expected;
    RootedChord got;
    std::string context;
  };

  std::string check_id;
  int cases_checked = 0;
  std::vector<Failure> failures;

  bool passed() const { return cases_checked > 0 && failures.empty(); }
};

/// Check ids accepted by verify_theory, in display order.
const std::vector<std::string>& verification_check_ids();

/// Exhaustively checks one of the named claims over all 12 keys:
///   triangles       R42*T5 sends I7 to II7; R42*T10 sends III7 to IV7
///   prism           every directed path of the prism diagram lands on the
///                   target node's chord
///   r42_t_commute   R42 commutes with every Tn on all maj7/min7 chords
///   triadic_diagram the triadic R commutes with T5 and T7 on all triads
///   involutions     R42, L13, L42, P42 and R square to the identity
///   p42_supertonic  P42 maps the tonic seventh of K to the supertonic
///                   seventh of K-2
/// Throws UnknownCheckId.
VerificationReport verify_theory(std::string_view check_id);

/// Applier hook so harness sanity tests can run the prism check with
/// perturbed generator semantics.
using GeneratorApplier =
    std::function<std::optional<RootedChord>(const Generator&,
                                             const RootedChord&)>;

VerificationReport verify_prism_with(const GeneratorApplier& apply);

/// The prism diagram: two commuting triangles on {I7, IV7, II7} and
/// {III7, II7, IV7} joined by relative arrows. Nodes carry the scale degree
/// they realize; edges carry transformation words.
struct PrismDiagram {
  struct Edge {
    int from = 0;
    int to = 0;
    TransformationWord word;
  };

  std::array<std::string, 6> node_labels;
  std::vector<Edge> edges;
};

const PrismDiagram& prism_diagram();

/// Chord realized by prism node `node` in the major key rooted at `key`.
RootedChord prism_node_chord(PitchClass key, int node);

/// Default generator set for path search: {R42, L13, L42, P42}.
const std::vector<Generator>& default_path_generators();

/// Breadth-first search for a minimum-length word sending `from` to `to`.
/// Ties are broken by the canonical generator order. nullopt when `to` is
/// unreachable. Throws EmptyGeneratorSet.
std::optional<TransformationWord> shortest_path(
    const RootedChord& from, const RootedChord& to,
    std::vector<Generator> gens = default_path_generators());

}  // namespace harmonia
