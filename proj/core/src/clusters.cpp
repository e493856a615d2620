#include "powercl/clusters.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "powercl/bounds.hpp"
#include "powercl/fairpart.hpp"

namespace powercl {

namespace {

struct Candidate {
  ConnectingPath path;
  std::uint64_t mask = 0;  // collision points on the route, as bits
};

std::vector<std::int64_t> sorted_degrees(const Motion& motion, const std::vector<PointId>& pts) {
  std::vector<std::int64_t> deg;
  for (auto p : pts) deg.push_back(motion.point_degree(p));
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::int64_t fp_or_zero(std::span<const std::int64_t> items) {
  return items.empty() ? 0 : fp_exact(items);
}

}  // namespace

ClusterReport cluster_partition(const Motion& motion, const CollisionReport& collisions,
                                std::size_t cap) {
  auto pts = collision_points(collisions);
  auto n = pts.size();
  if (n > cap || n > 63) {
    throw ClusterCapExceeded("cluster search over " + std::to_string(n) +
                             " collision points exceeds the cap of " + std::to_string(cap));
  }
  ClusterReport report;
  if (n == 0) return report;

  std::map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[pts[i]] = i;

  auto period = motion.period();
  std::vector<std::vector<std::vector<Candidate>>> routes(
      n, std::vector<std::vector<Candidate>>(n));
  for (const auto& col : collisions.collisions) {
    auto v = index.at(col.point);
    for (const auto& car : col.cars) {
      std::vector<PointId> route;
      std::uint64_t mask = 0;
      std::uint64_t reached = 0;
      for (std::int64_t s = 1; s < period; ++s) {
        auto p = motion.point_at(car, col.half_step + s);
        route.push_back(p);
        auto it = index.find(p);
        if (it == index.end()) continue;
        auto w = it->second;
        mask |= std::uint64_t{1} << w;
        if (w == v || (reached >> w & 1)) continue;
        reached |= std::uint64_t{1} << w;
        routes[v][w].push_back({{p, car, s, route}, mask});
      }
    }
  }

  struct Choice {
    std::size_t centre;
    const Candidate* candidate;
  };
  // First centre (ascending) with a route to w avoiding the other centres;
  // among its routes the shortest.
  auto choose = [&](std::uint64_t centres, std::size_t w) -> std::optional<Choice> {
    for (std::size_t v = 0; v < n; ++v) {
      if (!(centres >> v & 1)) continue;
      auto others = centres & ~(std::uint64_t{1} << v);
      const Candidate* best = nullptr;
      for (const auto& c : routes[v][w]) {
        if ((c.mask & others) != 0) continue;
        if (!best || c.path.half_steps < best->path.half_steps) best = &c;
      }
      if (best) return Choice{v, best};
    }
    return std::nullopt;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack: all n-bit masks with k bits set, ascending.
    std::uint64_t centres = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (centres < limit) {
      bool ok = true;
      for (std::size_t w = 0; w < n && ok; ++w) {
        if (!(centres >> w & 1)) ok = choose(centres, w).has_value();
      }
      if (ok) {
        std::map<std::size_t, Cluster> by_centre;
        for (std::size_t v = 0; v < n; ++v) {
          if (centres >> v & 1) by_centre[v] = Cluster{pts[v], {pts[v]}, {}};
        }
        for (std::size_t w = 0; w < n; ++w) {
          if (centres >> w & 1) continue;
          auto c = *choose(centres, w);
          auto& cl = by_centre[c.centre];
          cl.members.push_back(pts[w]);
          cl.paths.push_back(c.candidate->path);
        }
        for (auto& [v, cl] : by_centre) {
          std::sort(cl.members.begin(), cl.members.end());
          report.clusters.push_back(std::move(cl));
        }
        report.kappa = static_cast<std::int64_t>(k);
        return report;
      }
      auto lowest = centres & (~centres + 1);
      auto ripple = centres + lowest;
      centres = (((ripple ^ centres) >> 2) / lowest) | ripple;
    }
  }
  throw std::logic_error("cluster search found no partition");
}

std::vector<std::string> cluster_partition_problems(const Motion& motion,
                                                    const CollisionReport& collisions,
                                                    const ClusterReport& clusters) {
  std::vector<std::string> problems;
  const auto& m = motion.map();
  auto pts = collision_points(collisions);
  std::map<PointId, int> seen;
  std::vector<PointId> centres;
  for (const auto& cl : clusters.clusters) {
    centres.push_back(cl.centre);
    if (std::find(cl.members.begin(), cl.members.end(), cl.centre) == cl.members.end()) {
      problems.push_back("centre " + point_name(m, cl.centre) + " missing from its cluster");
    }
    for (auto p : cl.members) ++seen[p];
  }
  if (clusters.kappa != static_cast<std::int64_t>(clusters.clusters.size())) {
    problems.push_back("kappa differs from the number of clusters");
  }
  for (auto p : pts) {
    if (seen[p] != 1) {
      problems.push_back(point_name(m, p) + " lies in " + std::to_string(seen[p]) + " clusters");
    }
  }
  for (const auto& [p, count] : seen) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
      problems.push_back(point_name(m, p) + " is not a collision point");
    }
  }

  for (const auto& cl : clusters.clusters) {
    for (auto w : cl.members) {
      if (w == cl.centre) continue;
      bool covered = std::any_of(cl.paths.begin(), cl.paths.end(),
                                 [&](const ConnectingPath& p) { return p.target == w; });
      if (!covered) problems.push_back(point_name(m, w) + " has no connecting path");
    }
    for (const auto& path : cl.paths) {
      auto where = "path " + point_name(m, cl.centre) + "->" + point_name(m, path.target);
      if (path.half_steps < 1 || path.half_steps >= motion.period()) {
        problems.push_back(where + " is not shorter than T/2");
        continue;
      }
      bool driven = false;
      for (const auto& col : collisions.collisions) {
        if (col.point != cl.centre) continue;
        if (std::find(col.cars.begin(), col.cars.end(), path.car) == col.cars.end()) continue;
        std::vector<PointId> route;
        for (std::int64_t s = 1; s <= path.half_steps; ++s) {
          route.push_back(motion.point_at(path.car, col.half_step + s));
        }
        if (route == path.route) driven = true;
      }
      if (!driven) problems.push_back(where + " is not driven by a car colliding at the centre");
      if (path.route.empty() || path.route.back() != path.target) {
        problems.push_back(where + " does not end at its target");
      }
      for (auto c : centres) {
        if (c != cl.centre &&
            std::find(path.route.begin(), path.route.end(), c) != path.route.end()) {
          problems.push_back(where + " passes the centre " + point_name(m, c));
        }
      }
    }
  }
  return problems;
}

std::vector<LemmaCheck> verify_lemmas(const Motion& motion, const CollisionReport& collisions,
                                      const ClusterReport& clusters) {
  std::vector<LemmaCheck> rows;
  auto add = [&](std::string name, std::int64_t lhs, std::int64_t rhs, bool required = true) {
    rows.push_back({std::move(name), lhs, rhs, lhs <= rhs, required});
  };

  const auto& m = motion.map();
  auto chi = m.euler_characteristic();
  auto cars = motion.total_cars();
  auto excess = cars - static_cast<std::int64_t>(m.num_faces());  // sum (d_D - 1)
  auto pts = collision_points(collisions);
  auto n = static_cast<std::int64_t>(pts.size());
  auto deg = sorted_degrees(motion, pts);
  auto kappa = clusters.kappa;
  auto largest = deg.empty() ? 0 : deg.back();

  add("car_crash", chi + excess, n);
  add("cluster_a", chi + excess, kappa);

  auto first_kappa = std::span<const std::int64_t>(deg).first(
      static_cast<std::size_t>(std::clamp<std::int64_t>(kappa, 0, n)));
  add("cluster_b", std::max(fp_or_zero(first_kappa), largest), cars);
  add("cluster_b_uniform", deg.empty() ? 0 : ceil_div(kappa, 2) * deg.front(), cars);

  auto kappa_bound = chi + excess;
  if (kappa_bound > n) {
    rows.push_back({"corollary_2", kappa_bound, n, false, true});
  } else {
    auto first = std::span<const std::int64_t>(deg).first(
        static_cast<std::size_t>(std::max<std::int64_t>(kappa_bound, 0)));
    add("corollary_2", std::max(fp_or_zero(first), largest), cars);
  }

  for (std::int64_t l = 0; l <= n + 1; ++l) {
    auto next = l < n ? Order::finite(deg[static_cast<std::size_t>(l)]) : Order::infinite();
    auto parity = (excess - l) % 2 == 0 ? Parity::even : Parity::odd;
    auto lhs = chi - l + excess;
    auto tag = "[" + std::to_string(l) + "]";
    add("corollary_3" + tag, lhs, cluster_corollary3_rhs(l, cars, next, parity));
    add("corollary_3_floor" + tag, lhs, cluster_corollary3_rhs_floor(l, cars, next, parity),
        false);
  }

  std::map<PointId, std::int64_t> per_point;
  std::int64_t most = 0;
  for (const auto& c : collisions.collisions) most = std::max(most, ++per_point[c.point]);
  add("one_collision_per_point", most, 1);
  return rows;
}

bool all_required_hold(const std::vector<LemmaCheck>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const LemmaCheck& r) { return r.holds || !r.required; });
}

}  // namespace powercl
