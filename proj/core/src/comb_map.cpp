#include "powercl/comb_map.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace powercl {

namespace {

std::vector<std::vector<Dart>> orbits(std::size_t n, auto next, std::vector<std::size_t>& owner,
                                      std::vector<std::size_t>* index) {
  std::vector<std::vector<Dart>> out;
  owner.assign(n, SIZE_MAX);
  if (index) index->assign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (owner[start] != SIZE_MAX) continue;
    std::vector<Dart> cycle;
    auto d = static_cast<Dart>(start);
    do {
      owner[static_cast<std::size_t>(d)] = out.size();
      if (index) (*index)[static_cast<std::size_t>(d)] = cycle.size();
      cycle.push_back(d);
      d = next(d);
    } while (d != static_cast<Dart>(start));
    out.push_back(std::move(cycle));
  }
  return out;
}

bool is_permutation(const std::vector<Dart>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto d : p) {
    if (d < 0 || static_cast<std::size_t>(d) >= p.size() || seen[static_cast<std::size_t>(d)])
      return false;
    seen[static_cast<std::size_t>(d)] = true;
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CombMap::CombMap(std::vector<Dart> alpha, std::vector<Dart> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.size() != sigma_.size()) {
    throw std::invalid_argument("alpha and sigma act on different dart sets");
  }
  if (alpha_.empty()) throw std::invalid_argument("a map needs at least one edge");
  if (!is_permutation(alpha_)) throw std::invalid_argument("alpha is not a permutation");
  if (!is_permutation(sigma_)) throw std::invalid_argument("sigma is not a permutation");
  for (std::size_t d = 0; d < alpha_.size(); ++d) {
    auto a = static_cast<std::size_t>(alpha_[d]);
    if (a == d) {
      throw std::invalid_argument("alpha fixes dart " + std::to_string(d));
    }
    if (static_cast<std::size_t>(alpha_[a]) != d) {
      throw std::invalid_argument("alpha is not an involution at dart " + std::to_string(d));
    }
  }

  auto n = alpha_.size();
  vertices_ = orbits(n, [this](Dart d) { return this->sigma(d); }, vertex_of_, nullptr);
  faces_ = orbits(n, [this](Dart d) { return this->phi(d); }, face_of_, &face_index_);
  edge_of_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    auto a = static_cast<std::size_t>(alpha_[d]);
    if (d < a) {
      edge_of_[d] = edge_of_[a] = edges_.size();
      edges_.emplace_back(static_cast<Dart>(d), static_cast<Dart>(a));
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](std::size_t a, std::size_t b) {
    parent[find_root(parent, a)] = find_root(parent, b);
  };
  for (std::size_t d = 0; d < n; ++d) {
    unite(d, static_cast<std::size_t>(alpha_[d]));
    unite(d, static_cast<std::size_t>(sigma_[d]));
  }
  std::vector<std::int64_t> chi(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    if (find_root(parent, d) == d) ++components_;
  }
  for (auto& v : vertices_) chi[find_root(parent, static_cast<std::size_t>(v[0]))] += 1;
  for (auto& e : edges_) chi[find_root(parent, static_cast<std::size_t>(e.first))] -= 1;
  for (auto& f : faces_) chi[find_root(parent, static_cast<std::size_t>(f[0]))] += 1;
  for (std::size_t d = 0; d < n; ++d) {
    if (find_root(parent, d) == d && (chi[d] > 2 || chi[d] % 2 != 0)) {
      throw std::logic_error("component with impossible Euler characteristic");
    }
  }
}

CombMap map_from_cycles(std::size_t num_darts, std::span<const std::pair<Dart, Dart>> edges,
                        std::span<const std::vector<Dart>> rotations) {
  std::vector<Dart> alpha(num_darts, -1);
  std::vector<Dart> sigma(num_darts, -1);
  auto in_range = [&](Dart d) { return d >= 0 && static_cast<std::size_t>(d) < num_darts; };
  for (auto [a, b] : edges) {
    if (!in_range(a) || !in_range(b)) throw std::invalid_argument("edge dart out of range");
    if (alpha[static_cast<std::size_t>(a)] != -1 || alpha[static_cast<std::size_t>(b)] != -1) {
      throw std::invalid_argument("dart used by two edges");
    }
    alpha[static_cast<std::size_t>(a)] = b;
    alpha[static_cast<std::size_t>(b)] = a;
  }
  for (const auto& cycle : rotations) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto d = cycle[i];
      if (!in_range(d)) throw std::invalid_argument("rotation dart out of range");
      if (sigma[static_cast<std::size_t>(d)] != -1) {
        throw std::invalid_argument("dart appears in two rotation cycles");
      }
      sigma[static_cast<std::size_t>(d)] = cycle[(i + 1) % cycle.size()];
    }
  }
  for (std::size_t d = 0; d < num_darts; ++d) {
    if (alpha[d] == -1) throw std::invalid_argument("dart " + std::to_string(d) + " has no edge");
    if (sigma[d] == -1) {
      throw std::invalid_argument("dart " + std::to_string(d) + " is not in any rotation");
    }
  }
  return CombMap(std::move(alpha), std::move(sigma));
}

CombMap subdivide(const CombMap& map) {
  auto n = map.num_darts();
  std::vector<Dart> alpha(2 * n);
  std::vector<Dart> sigma(2 * n);
  for (std::size_t d = 0; d < n; ++d) sigma[d] = map.sigma(static_cast<Dart>(d));
  for (std::size_t e = 0; e < map.num_edges(); ++e) {
    auto [d, d2] = map.edge_darts(e);
    auto x = static_cast<Dart>(n + 2 * e);
    auto y = x + 1;
    alpha[static_cast<std::size_t>(d)] = x;
    alpha[static_cast<std::size_t>(x)] = d;
    alpha[static_cast<std::size_t>(d2)] = y;
    alpha[static_cast<std::size_t>(y)] = d2;
    sigma[static_cast<std::size_t>(x)] = y;
    sigma[static_cast<std::size_t>(y)] = x;
  }
  return CombMap(std::move(alpha), std::move(sigma));
}

std::vector<std::int32_t> canonical_code(const CombMap& map, std::span<const std::uint8_t> tags) {
  auto n = map.num_darts();
  if (!tags.empty() && tags.size() != n) {
    throw std::invalid_argument("canonical_code: one tag per dart expected");
  }
  std::vector<std::int32_t> best;
  std::vector<std::int32_t> label(n);
  std::vector<Dart> order;
  order.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[root] = 0;
    order.push_back(static_cast<Dart>(root));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto next : {map.alpha(order[i]), map.sigma(order[i])}) {
        auto& l = label[static_cast<std::size_t>(next)];
        if (l == -1) {
          l = static_cast<std::int32_t>(order.size());
          order.push_back(next);
        }
      }
    }
    if (order.size() != n) {
      throw std::invalid_argument("canonical_code: map is not connected");
    }
    std::vector<std::int32_t> code;
    code.reserve(3 * n);
    for (auto d : order) {
      code.push_back(label[static_cast<std::size_t>(map.alpha(d))]);
      code.push_back(label[static_cast<std::size_t>(map.sigma(d))]);
      if (!tags.empty()) code.push_back(tags[static_cast<std::size_t>(d)]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace powercl
