#pragma once

// Corner-labelled bipartite maps over a free product A * B of two cyclic
// groups. A-vertices carry corner labels from factor 0, B-vertices from
// factor 1.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "powercl/comb_map.hpp"
#include "powercl/words.hpp"

namespace powercl {

enum class Color : std::uint8_t { A = 0, B = 1 };

struct HowieDiagram {
  std::shared_ptr<const CombMap> map;
  SpecPtr spec;                     // exactly two factors
  std::vector<Color> colors;        // per vertex
  std::vector<bool> exterior;       // per vertex
  std::vector<Word> corner_labels;  // per dart: the corner just before it in the rotation
};

enum class DiagramIssueKind {
  shape,           // table sizes or the factor count do not match the map
  not_bipartite,   // an edge joins two vertices of the same colour
  wrong_factor,    // a corner label is not an element of its vertex's factor
  interior_label,  // an interior vertex's label product is not the identity
};

std::string_view to_string(DiagramIssueKind k);

struct DiagramIssue {
  DiagramIssueKind kind;
  std::string where;
};

std::vector<DiagramIssue> diagram_issues(const HowieDiagram& d);
bool validate_diagram(const HowieDiagram& d);

// Product of the corner labels of a face in the order cars travel, starting
// at the face's smallest dart.
Word face_word(const HowieDiagram& d, std::size_t face);

// face_word up to cyclic rotation: the least rotation of its cyclic core.
Word face_label(const HowieDiagram& d, std::size_t face);

// The one-face torus map with two trivalent vertices: darts 0..2 leave the
// A-vertex, 3..5 the B-vertex, edges {i, i+3}, every corner labelled a or b.
HowieDiagram figure1_diagram(Order order_a, Order order_b);

}  // namespace powercl
