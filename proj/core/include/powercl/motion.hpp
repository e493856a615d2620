#pragma once

// Uniform periodic car motions on a map and their complete collisions.
//
// Every car drives along the cycle of its face at one edge per minute and
// sits on a vertex at integer times. Time is measured in half-steps (half
// minutes): at even half-steps a car is at the tail of a dart, at odd ones
// it is at the midpoint of that dart's edge. A point is a vertex (ids
// 0..V-1) or an edge midpoint (id V + e), matching the vertex numbering of
// subdivide().

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "powercl/comb_map.hpp"
#include "powercl/howie_diagram.hpp"
#include "powercl/words.hpp"

namespace powercl {

using PointId = std::size_t;

struct Car {
  std::size_t face = 0;
  std::int64_t index = 0;  // 0 .. d_face - 1

  friend bool operator==(const Car&, const Car&) = default;
  friend auto operator<=>(const Car&, const Car&) = default;
};

class Motion {
 public:
  // Face f carries cars_per_face[f] >= 1 cars spaced T darts apart, where
  // perimeter(f) = cars_per_face[f] * T for a common period T. Car j of face
  // f starts on the dart at cycle position phases[f] + j T (phases default
  // to 0). Throws std::invalid_argument when no common period exists.
  Motion(std::shared_ptr<const CombMap> map, std::vector<std::int64_t> cars_per_face,
         std::vector<std::int64_t> phases = {});

  const CombMap& map() const { return *map_; }
  const std::shared_ptr<const CombMap>& map_ptr() const { return map_; }
  std::int64_t period() const { return period_; }
  std::int64_t cars(std::size_t face) const { return cars_[face]; }
  std::int64_t phase(std::size_t face) const { return phases_[face]; }
  const std::vector<std::int64_t>& cars_per_face() const { return cars_; }
  const std::vector<std::int64_t>& phases() const { return phases_; }
  std::int64_t total_cars() const;
  std::vector<Car> all_cars() const;

  // The dart a car is at (even half-step) or halfway along (odd half-step).
  Dart dart_at(const Car& car, std::int64_t half_step) const;
  PointId point_at(const Car& car, std::int64_t half_step) const;

  std::size_t num_points() const { return map_->num_vertices() + map_->num_edges(); }
  std::int64_t point_degree(PointId p) const;

 private:
  std::shared_ptr<const CombMap> map_;
  std::vector<std::int64_t> cars_;
  std::vector<std::int64_t> phases_;
  std::int64_t period_ = 0;
};

// "v3" for vertex 3, "m2" for the midpoint of edge 2.
std::string point_name(const CombMap& map, PointId p);

struct Collision {
  PointId point = 0;
  std::int64_t half_step = 0;  // in [0, 2T)
  std::int64_t degree = 0;
  std::vector<Car> cars;
};

struct CollisionReport {
  std::vector<Collision> collisions;  // sorted by (half_step, point)
};

CollisionReport detect_collisions(const Motion& motion);

// Distinct points of complete collision, ascending.
std::vector<PointId> collision_points(const CollisionReport& report);

// The same motion on subdivide(map), with period 2T: the collision at point
// p and half-step h becomes the vertex collision at p and half-step 2h.
Motion subdivide_motion(const Motion& motion);

// Cars follow the labels of u: every face must read u^{d_D} along its cycle
// from some starting corner, and at integer time s each car sits at a corner
// labelled by letter s mod |u| of u. The period is |u| (syllable length).
// Throws std::invalid_argument when a face does not match.
Motion uniform_motion_from_diagram(const HowieDiagram& diagram, const Word& u);

}  // namespace powercl
