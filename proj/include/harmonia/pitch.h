#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace harmonia {

/// Base type for every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// make_chord rejected an interval list (duplicate, unsorted, out of range,
/// or not starting at 0).
struct NonCanonicalIntervals : Error {
  using Error::Error;
};

/// make_chord received an empty interval list.
struct EmptyChord : Error {
  using Error::Error;
};

/// Semitones above C, always reduced mod 12.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value) : value_(normalize(value)) {}

  constexpr int value() const { return value_; }

  /// Pitch class `semitones` above (or below, if negative) this one.
  constexpr PitchClass plus(int semitones) const {
    return PitchClass(value_ + semitones);
  }

  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  static constexpr int normalize(int v) { return ((v % 12) + 12) % 12; }

  int value_ = 0;
};

enum class Quality {
  MajorTriad,
  MinorTriad,
  DimTriad,
  AugTriad,
  Maj7,
  Dom7,
  Min7,
  HalfDim7,
  Dim7,
  AugDom7,
  Sixth,
  MinSixth,
  Other,
};

/// Classification result. `intervals` carries the exact pattern only when
/// the label is Other.
struct ChordQuality {
  Quality label = Quality::Other;
  std::vector<int> intervals;

  friend bool operator==(const ChordQuality&, const ChordQuality&) = default;
};

/// A pitch-class set with a distinguished root, stored as strictly ascending
/// semitone offsets from the root. intervals()[0] is always 0, so two chords
/// are equal iff their roots and interval lists are equal.
class RootedChord {
 public:
  RootedChord() = default;

  PitchClass root() const { return root_; }
  const std::vector<int>& intervals() const { return intervals_; }
  int size() const { return static_cast<int>(intervals_.size()); }

  /// Realized pitch classes in interval order (root first).
  std::vector<int> pitch_classes() const;
  bool contains_pc(PitchClass pc) const;

  friend bool operator==(const RootedChord&, const RootedChord&) = default;
  friend auto operator<=>(const RootedChord&, const RootedChord&) = default;

 private:
  friend RootedChord make_chord(PitchClass, std::vector<int>);

  PitchClass root_;
  std::vector<int> intervals_{0};
};

/// Validates and builds a rooted chord. Idempotent on canonical input.
/// Throws EmptyChord or NonCanonicalIntervals.
RootedChord make_chord(PitchClass root, std::vector<int> intervals);

/// Builds a rooted chord from realized pitch classes; `root` must be one of
/// them. Duplicate pcs are collapsed.
RootedChord chord_from_pcs(PitchClass root, const std::vector<int>& pcs);

/// Moves the root by n semitones; the interval shape is unchanged.
RootedChord transpose(const RootedChord& c, int n);

ChordQuality classify_quality(const RootedChord& c);

std::string_view quality_name(Quality q);

/// Interval pattern of a named quality. Throws on Other.
const std::vector<int>& quality_intervals(Quality q);

}  // namespace harmonia
