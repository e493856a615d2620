#include "powercl/howie_diagram.hpp"

#include <stdexcept>

#include "powercl/text.hpp"

namespace powercl {

std::string_view to_string(DiagramIssueKind k) {
  switch (k) {
    case DiagramIssueKind::shape: return "shape";
    case DiagramIssueKind::not_bipartite: return "not_bipartite";
    case DiagramIssueKind::wrong_factor: return "wrong_factor";
    case DiagramIssueKind::interior_label: return "interior_label";
  }
  return "?";
}

std::vector<DiagramIssue> diagram_issues(const HowieDiagram& d) {
  std::vector<DiagramIssue> issues;
  if (!d.map || !d.spec) {
    issues.push_back({DiagramIssueKind::shape, "missing map or factors"});
    return issues;
  }
  const auto& m = *d.map;
  if (d.spec->size() != 2) {
    issues.push_back({DiagramIssueKind::shape, "diagram needs exactly two factors"});
  }
  if (d.colors.size() != m.num_vertices() || d.exterior.size() != m.num_vertices()) {
    issues.push_back({DiagramIssueKind::shape, "colour/exterior table size"});
  }
  if (d.corner_labels.size() != m.num_darts()) {
    issues.push_back({DiagramIssueKind::shape, "corner label table size"});
  }
  if (!issues.empty()) return issues;

  for (std::size_t e = 0; e < m.num_edges(); ++e) {
    auto [x, y] = m.edge_darts(e);
    if (d.colors[m.vertex_of(x)] == d.colors[m.vertex_of(y)]) {
      issues.push_back({DiagramIssueKind::not_bipartite, "edge " + std::to_string(e)});
    }
  }
  for (std::size_t dart = 0; dart < m.num_darts(); ++dart) {
    const auto& label = d.corner_labels[dart];
    auto factor = static_cast<std::uint32_t>(d.colors[m.vertex_of(static_cast<Dart>(dart))]);
    bool ok = label.same_group(Word(d.spec)) &&
              (label.is_identity() || (label.length() == 1 && label[0].factor == factor));
    if (!ok) {
      issues.push_back({DiagramIssueKind::wrong_factor,
                        "corner " + std::to_string(dart) + " label " + format_word(label)});
    }
  }
  if (!issues.empty()) return issues;

  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    if (d.exterior[v]) continue;
    auto factor = static_cast<std::uint32_t>(d.colors[v]);
    std::int64_t sum = 0;
    for (auto dart : m.vertex_darts(v)) {
      const auto& label = d.corner_labels[static_cast<std::size_t>(dart)];
      if (!label.is_identity()) sum = d.spec->reduce(factor, sum + label[0].exponent);
    }
    if (sum != 0) {
      issues.push_back({DiagramIssueKind::interior_label,
                        "vertex " + std::to_string(v) + " label " +
                            format_word(Word::letter(d.spec, factor, sum))});
    }
  }
  return issues;
}

bool validate_diagram(const HowieDiagram& d) { return diagram_issues(d).empty(); }

Word face_word(const HowieDiagram& d, std::size_t face) {
  Word w(d.spec);
  for (auto dart : d.map->face_darts(face)) {
    w = mul(w, d.corner_labels[static_cast<std::size_t>(dart)]);
  }
  return w;
}

Word face_label(const HowieDiagram& d, std::size_t face) {
  auto w = face_word(d, face);
  if (w.is_identity()) return w;
  return least_rotation(cyclic_reduce(w).core);
}

HowieDiagram figure1_diagram(Order order_a, Order order_b) {
  const std::vector<std::pair<Dart, Dart>> edges{{0, 3}, {1, 4}, {2, 5}};
  const std::vector<std::vector<Dart>> rotations{{0, 1, 2}, {3, 4, 5}};
  HowieDiagram d;
  d.map = std::make_shared<const CombMap>(map_from_cycles(6, edges, rotations));
  d.spec = make_spec({order_a, order_b});
  d.colors = {Color::A, Color::B};
  d.exterior = {false, false};
  auto a = Word::letter(d.spec, 0, 1);
  auto b = Word::letter(d.spec, 1, 1);
  d.corner_labels = {a, a, a, b, b, b};
  return d;
}

}  // namespace powercl
