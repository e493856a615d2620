#pragma once

// Test corpora for the motion lemmas: every small connected bipartite map up
// to isomorphism, with all of its uniform motions, and random motions on
// random (not necessarily bipartite) maps.

#include <cstdint>
#include <functional>
#include <vector>

#include "powercl/comb_map.hpp"
#include "powercl/howie_diagram.hpp"
#include "powercl/motion.hpp"
#include "powercl/random.hpp"

namespace powercl {

struct ColoredMap {
  CombMap map;
  std::vector<Color> colors;  // per vertex
};

// Connected bipartite maps with 1..max_edges edges, one per colour-preserving
// isomorphism class, ordered by edge count and then canonical code.
std::vector<ColoredMap> bipartite_maps(std::size_t max_edges);

// Every A-corner labelled g_0, every B-corner g_1. A vertex is interior when
// its degree is a multiple of its letter's order, so the result validates.
HowieDiagram standard_labelling(const ColoredMap& cm, const SpecPtr& spec);

// Periods T admitting a uniform motion: the divisors of the gcd of the face
// perimeters, ascending.
std::vector<std::int64_t> admissible_periods(const CombMap& map);

struct EnumerationLimits {
  std::size_t max_edges = 0;  // 0 yields nothing
  std::size_t max_faces = 0;  // 0 means no limit
  Order order_a = Order::finite(3);
  Order order_b = Order::finite(3);
};

// Calls visit for every diagram from bipartite_maps (labelled as above) and
// every uniform motion on it: each admissible period, face 0 at phase 0 and
// every other face at each phase in [0, T). Returns the number of motions.
std::size_t enumerate_small_diagrams(
    const EnumerationLimits& limits,
    const std::function<void(const HowieDiagram&, const Motion&)>& visit);

// A connected map with the given number of edges, grown by random pendant
// edges and chords (loops and multiple edges allowed).
CombMap random_map(Rng& rng, std::size_t edges);

// A uniform motion on random_map(rng, edges) with a random admissible period
// and random phases.
Motion random_motion(Rng& rng, std::size_t edges);

}  // namespace powercl
