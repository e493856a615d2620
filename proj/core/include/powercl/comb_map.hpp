#pragma once

// Maps on closed oriented surfaces as rotation systems.
//
// Darts are 0..D-1. alpha pairs the two darts of each edge, sigma cycles the
// darts leaving each vertex in rotation order. A face is an orbit of
// phi = sigma o alpha, and that orbit order is the direction in which cars
// travel around the face. The corner "of" dart d is the corner at the tail of
// d that precedes d in the rotation; phi visits the corners of a face in
// order.
//
// Vertices, edges and faces are numbered by their smallest dart.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace powercl {

using Dart = std::int32_t;

class CombMap {
 public:
  // Throws std::invalid_argument unless alpha is a fixed-point-free
  // involution and sigma a permutation of the same dart set.
  CombMap(std::vector<Dart> alpha, std::vector<Dart> sigma);

  std::size_t num_darts() const { return alpha_.size(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return alpha_.size() / 2; }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_components() const { return components_; }
  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(num_vertices()) -
           static_cast<std::int64_t>(num_edges()) +
           static_cast<std::int64_t>(num_faces());
  }

  Dart alpha(Dart d) const { return alpha_[static_cast<std::size_t>(d)]; }
  Dart sigma(Dart d) const { return sigma_[static_cast<std::size_t>(d)]; }
  Dart phi(Dart d) const { return sigma(alpha(d)); }

  std::size_t vertex_of(Dart d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
  std::size_t face_of(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }
  std::size_t edge_of(Dart d) const { return edge_of_[static_cast<std::size_t>(d)]; }
  // Position of d within its face cycle.
  std::size_t face_index(Dart d) const { return face_index_[static_cast<std::size_t>(d)]; }

  std::span<const Dart> vertex_darts(std::size_t v) const { return vertices_[v]; }
  std::span<const Dart> face_darts(std::size_t f) const { return faces_[f]; }
  std::pair<Dart, Dart> edge_darts(std::size_t e) const { return edges_[e]; }

  std::size_t degree(std::size_t v) const { return vertices_[v].size(); }
  std::size_t perimeter(std::size_t f) const { return faces_[f].size(); }

  const std::vector<Dart>& alpha_table() const { return alpha_; }
  const std::vector<Dart>& sigma_table() const { return sigma_; }

 private:
  std::vector<Dart> alpha_;
  std::vector<Dart> sigma_;
  std::vector<std::vector<Dart>> vertices_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<std::pair<Dart, Dart>> edges_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> face_index_;
  std::vector<std::size_t> edge_of_;
  std::size_t components_ = 0;
};

// Builds a map from edge pairs and vertex rotation cycles over darts 0..D-1.
CombMap map_from_cycles(std::size_t num_darts,
                        std::span<const std::pair<Dart, Dart>> edges,
                        std::span<const std::vector<Dart>> rotations);

// Splits every edge by a new degree-2 vertex. Original darts keep their ids;
// edge e gets new darts D + 2e (paired with the smaller dart of e) and
// D + 2e + 1, and its midpoint becomes vertex V + e.
CombMap subdivide(const CombMap& map);

// Isomorphism-invariant code (smallest over all roots of a breadth-first
// relabelling). Optional per-dart tags (e.g. vertex colours) are included.
std::vector<std::int32_t> canonical_code(const CombMap& map,
                                         std::span<const std::uint8_t> tags = {});

}  // namespace powercl
