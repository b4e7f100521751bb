#include "harmonia/pitch.h"

#include <algorithm>
#include <array>
#include <utility>

namespace harmonia {

std::vector<int> RootedChord::pitch_classes() const {
  std::vector<int> pcs;
  pcs.reserve(intervals_.size());
  for (int iv : intervals_) pcs.push_back(root_.plus(iv).value());
  return pcs;
}

bool RootedChord::contains_pc(PitchClass pc) const {
  for (int iv : intervals_) {
    if (root_.plus(iv) == pc) return true;
  }
  return false;
}

RootedChord make_chord(PitchClass root, std::vector<int> intervals) {
  if (intervals.empty()) throw EmptyChord("chord needs at least one interval");
  if (intervals.front() != 0) {
    throw NonCanonicalIntervals("interval list must start at 0");
  }
  for (size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i] < 0 || intervals[i] >= 12) {
      throw NonCanonicalIntervals("interval " + std::to_string(intervals[i]) +
                                  " out of range 0..11");
    }
    if (i > 0 && intervals[i] <= intervals[i - 1]) {
      throw NonCanonicalIntervals("intervals must be strictly increasing");
    }
  }
  RootedChord c;
  c.root_ = root;
  c.intervals_ = std::move(intervals);
  return c;
}

RootedChord chord_from_pcs(PitchClass root, const std::vector<int>& pcs) {
  std::vector<int> offsets;
  offsets.reserve(pcs.size());
  for (int pc : pcs) {
    int off = ((pc - root.value()) % 12 + 12) % 12;
    offsets.push_back(off);
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  if (offsets.empty() || offsets.front() != 0) {
    throw NonCanonicalIntervals("root pitch class not among chord members");
  }
  return make_chord(root, std::move(offsets));
}

RootedChord transpose(const RootedChord& c, int n) {
  return make_chord(c.root().plus(n), c.intervals());
}

namespace {

const std::array<std::pair<Quality, std::vector<int>>, 12>& quality_table() {
  static const std::array<std::pair<Quality, std::vector<int>>, 12> table = {{
      {Quality::MajorTriad, {0, 4, 7}},
      {Quality::MinorTriad, {0, 3, 7}},
      {Quality::DimTriad, {0, 3, 6}},
      {Quality::AugTriad, {0, 4, 8}},
      {Quality::Maj7, {0, 4, 7, 11}},
      {Quality::Dom7, {0, 4, 7, 10}},
      {Quality::Min7, {0, 3, 7, 10}},
      {Quality::HalfDim7, {0, 3, 6, 10}},
      {Quality::Dim7, {0, 3, 6, 9}},
      {Quality::AugDom7, {0, 4, 8, 10}},
      {Quality::Sixth, {0, 4, 7, 9}},
      {Quality::MinSixth, {0, 3, 7, 9}},
  }};
  return table;
}

}  // namespace

ChordQuality classify_quality(const RootedChord& c) {
  for (const auto& [label, intervals] : quality_table()) {
    if (c.intervals() == intervals) return {label, {}};
  }
  return {Quality::Other, c.intervals()};
}

std::string_view quality_name(Quality q) {
  switch (q) {
    case Quality::MajorTriad: return "major triad";
    case Quality::MinorTriad: return "minor triad";
    case Quality::DimTriad: return "diminished triad";
    case Quality::AugTriad: return "augmented triad";
    case Quality::Maj7: return "maj7";
    case Quality::Dom7: return "dom7";
    case Quality::Min7: return "min7";
    case Quality::HalfDim7: return "half-dim7";
    case Quality::Dim7: return "dim7";
    case Quality::AugDom7: return "aug-dom7";
    case Quality::Sixth: return "sixth";
    case Quality::MinSixth: return "minor sixth";
    case Quality::Other: return "other";
  }
  return "other";
}

const std::vector<int>& quality_intervals(Quality q) {
  for (const auto& [label, intervals] : quality_table()) {
    if (label == q) return intervals;
  }
  throw Error("quality has no fixed interval pattern");
}

}  // namespace harmonia
