#include "harmonia/dot_export.h"

#include <map>
#include <sstream>

#include "harmonia/chordsym.h"
#include "harmonia/transform.h"

namespace harmonia {

namespace {

std::string chords_of_set(const CadentialSet& s, const Tonality& key) {
  std::string out;
  for (int d : s.degrees) {
    if (!out.empty()) out += " ";
    out += chord_symbol(degree_chord(key, {d}, s.arity));
  }
  return out;
}

}  // namespace

std::string conglomerate_dot(const Tonality& key) {
  std::map<std::string, CadentialSet> named;
  for (const auto& s : minimal_cadential_sets(key, Arity::Tetradic)) {
    if (s.name) named[*s.name] = s;
  }

  std::ostringstream out;
  out << "graph conglomerate {\n";
  out << "  label=\"cadence conglomerate, key " << flat_name(key.root())
      << "\\nsolid: pair morphisms; dashed: prism composites (T5 / T7*R42; "
         "exact correspondence left open)\";\n";
  out << "  node [shape=box];\n";
  for (const auto& [name, set] : named) {
    out << "  " << name << " [label=\"" << name << " " << to_string(set)
        << "\\n" << chords_of_set(set, key) << "\\nregion "
        << region_letter(region_of(set)) << "\"];\n";
  }
  out << "  J3 -- J4 [label=\"R42\"];\n";
  out << "  J1 -- J2 [label=\"R42\"];\n";
  out << "  J5 -- J6 [label=\"L13\"];\n";
  out << "  J1 -- J3 [style=dashed, label=\"T5 / T7*R42\"];\n";
  out << "  J2 -- J4 [style=dashed, label=\"T5 / T7*R42\"];\n";
  out << "}\n";
  return out.str();
}

std::string prism_dot(const Tonality& key) {
  const auto& diagram = prism_diagram();

  std::ostringstream out;
  out << "digraph prism {\n";
  out << "  label=\"prism diagram, key " << flat_name(key.root()) << "\";\n";
  out << "  node [shape=box];\n";
  for (int node = 0; node < 6; ++node) {
    out << "  n" << node << " [label=\"" << diagram.node_labels[node] << " = "
        << chord_symbol(prism_node_chord(key.root(), node)) << "\"];\n";
  }
  for (const auto& edge : diagram.edges) {
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\""
        << to_string(edge.word) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string cayley_dot() {
  const Quality qualities[] = {Quality::Maj7, Quality::Dom7, Quality::Min7,
                               Quality::HalfDim7, Quality::Dim7};

  std::ostringstream out;
  out << "graph cayley {\n";
  out << "  label=\"seventh chords under R42, L13, L42, P42\";\n";
  out << "  node [shape=ellipse];\n";

  std::map<RootedChord, std::string> ids;
  int next_id = 0;
  for (Quality q : qualities) {
    for (int root = 0; root < 12; ++root) {
      RootedChord c = make_chord(PitchClass(root), quality_intervals(q));
      std::string id = "c" + std::to_string(next_id++);
      out << "  " << id << " [label=\"" << chord_symbol(c) << "\"];\n";
      ids.emplace(std::move(c), std::move(id));
    }
  }

  // Generators are involutions, so each unordered pair appears once.
  for (const auto& [chord, id] : ids) {
    for (const auto& g : default_path_generators()) {
      auto image = try_apply_generator(g, chord);
      if (!image || !(chord < *image)) continue;
      out << "  " << id << " -- " << ids.at(*image) << " [label=\""
          << to_string(g) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace harmonia
