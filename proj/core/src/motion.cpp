#include "powercl/motion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "powercl/bounds.hpp"

namespace powercl {

Motion::Motion(std::shared_ptr<const CombMap> map, std::vector<std::int64_t> cars_per_face,
               std::vector<std::int64_t> phases)
    : map_(std::move(map)), cars_(std::move(cars_per_face)), phases_(std::move(phases)) {
  if (!map_) throw std::invalid_argument("motion without a map");
  auto faces = map_->num_faces();
  if (cars_.size() != faces) {
    throw std::invalid_argument("cars_per_face needs one entry per face");
  }
  if (phases_.empty()) phases_.assign(faces, 0);
  if (phases_.size() != faces) throw std::invalid_argument("phases needs one entry per face");
  for (std::size_t f = 0; f < faces; ++f) {
    auto p = static_cast<std::int64_t>(map_->perimeter(f));
    if (cars_[f] < 1) {
      throw std::invalid_argument("face " + std::to_string(f) + " has no car");
    }
    if (p % cars_[f] != 0) {
      throw std::invalid_argument("face " + std::to_string(f) + ": perimeter " +
                                  std::to_string(p) + " not divisible by car count");
    }
    auto t = p / cars_[f];
    if (f == 0) {
      period_ = t;
    } else if (t != period_) {
      throw std::invalid_argument("faces disagree on the period (" + std::to_string(period_) +
                                  " vs " + std::to_string(t) + ")");
    }
    phases_[f] = ((phases_[f] % p) + p) % p;
  }
}

std::int64_t Motion::total_cars() const {
  return std::accumulate(cars_.begin(), cars_.end(), std::int64_t{0});
}

std::vector<Car> Motion::all_cars() const {
  std::vector<Car> out;
  for (std::size_t f = 0; f < cars_.size(); ++f) {
    for (std::int64_t j = 0; j < cars_[f]; ++j) out.push_back({f, j});
  }
  return out;
}

Dart Motion::dart_at(const Car& car, std::int64_t half_step) const {
  auto cycle = map_->face_darts(car.face);
  auto p = static_cast<std::int64_t>(cycle.size());
  auto pos = phases_[car.face] + car.index * period_ + floor_div(half_step, 2);
  pos = ((pos % p) + p) % p;
  return cycle[static_cast<std::size_t>(pos)];
}

PointId Motion::point_at(const Car& car, std::int64_t half_step) const {
  auto d = dart_at(car, half_step);
  if (half_step % 2 == 0) return map_->vertex_of(d);
  return map_->num_vertices() + map_->edge_of(d);
}

std::int64_t Motion::point_degree(PointId p) const {
  if (p < map_->num_vertices()) return static_cast<std::int64_t>(map_->degree(p));
  if (p < num_points()) return 2;
  throw std::out_of_range("point id out of range");
}

std::string point_name(const CombMap& map, PointId p) {
  if (p < map.num_vertices()) return "v" + std::to_string(p);
  return "m" + std::to_string(p - map.num_vertices());
}

CollisionReport detect_collisions(const Motion& motion) {
  CollisionReport report;
  auto cars = motion.all_cars();
  std::vector<std::vector<Car>> at(motion.num_points());
  for (std::int64_t h = 0; h < 2 * motion.period(); ++h) {
    for (auto& v : at) v.clear();
    for (const auto& c : cars) at[motion.point_at(c, h)].push_back(c);
    for (PointId p = 0; p < at.size(); ++p) {
      auto deg = motion.point_degree(p);
      if (!at[p].empty() && static_cast<std::int64_t>(at[p].size()) == deg) {
        report.collisions.push_back({p, h, deg, at[p]});
      }
    }
  }
  return report;
}

std::vector<PointId> collision_points(const CollisionReport& report) {
  std::vector<PointId> pts;
  for (const auto& c : report.collisions) pts.push_back(c.point);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Motion subdivide_motion(const Motion& motion) {
  auto fine = std::make_shared<const CombMap>(subdivide(motion.map()));
  // Original darts keep their ids and stay the smallest dart of every face,
  // so face numbering is unchanged and cycle positions double.
  std::vector<std::int64_t> phases;
  for (auto ph : motion.phases()) phases.push_back(2 * ph);
  return Motion(fine, motion.cars_per_face(), phases);
}

Motion uniform_motion_from_diagram(const HowieDiagram& diagram, const Word& u) {
  if (u.is_identity()) throw std::invalid_argument("u must not be the identity");
  const auto& m = *diagram.map;
  auto t = static_cast<std::int64_t>(u.length());
  std::vector<std::int64_t> cars;
  std::vector<std::int64_t> phases;
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    auto cycle = m.face_darts(f);
    auto p = static_cast<std::int64_t>(cycle.size());
    if (p % t != 0) {
      throw std::invalid_argument("face " + std::to_string(f) + " perimeter " +
                                  std::to_string(p) + " is not a multiple of |u| = " +
                                  std::to_string(t));
    }
    std::optional<std::int64_t> found;
    for (std::int64_t r = 0; r < t && !found; ++r) {
      bool ok = true;
      for (std::int64_t i = 0; i < p && ok; ++i) {
        const auto& label =
            diagram.corner_labels[static_cast<std::size_t>(cycle[static_cast<std::size_t>((r + i) % p)])];
        ok = label.length() == 1 && label[0] == u[static_cast<std::size_t>(i % t)];
      }
      if (ok) found = r;
    }
    if (!found) {
      throw std::invalid_argument("face " + std::to_string(f) +
                                  " does not read a power of u along its boundary");
    }
    cars.push_back(p / t);
    phases.push_back(*found);
  }
  return Motion(diagram.map, cars, phases);
}

}  // namespace powercl
