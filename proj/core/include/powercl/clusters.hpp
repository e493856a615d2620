#pragma once

// Clusters of complete collisions and the lemma checks built on them.
//
// A cluster centred at v is a set of collision points each visited, strictly
// less than T/2 minutes (T half-steps) after the collision at v, by some car
// that collided at v. A partition into clusters is independent when no
// centre lies on a connecting path of another cluster. kappa is the least
// number of clusters of an independent partition.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "powercl/motion.hpp"

namespace powercl {

// Exhaustive search over centre sets; the number of collision points is
// capped so the search stays small.
inline constexpr std::size_t kDefaultClusterCap = 16;

class ClusterCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConnectingPath {
  PointId target = 0;
  Car car;
  std::int64_t half_steps = 0;   // 1 .. T-1
  std::vector<PointId> route;    // points passed after the centre, ending at target
};

struct Cluster {
  PointId centre = 0;
  std::vector<PointId> members;  // ascending, includes the centre
  std::vector<ConnectingPath> paths;
};

struct ClusterReport {
  std::int64_t kappa = 0;
  std::vector<Cluster> clusters;
};

ClusterReport cluster_partition(const Motion& motion, const CollisionReport& collisions,
                                std::size_t cap = kDefaultClusterCap);

// Re-checks a partition against the definitions (coverage, disjointness,
// path lengths below T/2, paths actually driven by colliding cars,
// independence). Returns an empty list when everything holds.
std::vector<std::string> cluster_partition_problems(const Motion& motion,
                                                    const CollisionReport& collisions,
                                                    const ClusterReport& clusters);

// One inequality lhs <= rhs of the lemma table. Rows with `required` false
// are reported for information and never count as failures.
struct LemmaCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  bool required = true;
};

// Rows: car_crash, cluster_a, cluster_b, cluster_b_uniform, corollary_2,
// corollary_3[l] and corollary_3_floor[l] for 0 <= l <= n + 1, and
// one_collision_per_point.
std::vector<LemmaCheck> verify_lemmas(const Motion& motion, const CollisionReport& collisions,
                                      const ClusterReport& clusters);

bool all_required_hold(const std::vector<LemmaCheck>& rows);

}  // namespace powercl
