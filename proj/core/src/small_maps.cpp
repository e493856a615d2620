#include "powercl/small_maps.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace powercl {

namespace {

struct Growing {
  std::vector<Dart> alpha;
  std::vector<Dart> sigma;
  std::vector<std::uint8_t> color;  // colour of each dart's tail
};

Growing single_edge() { return {{1, 0}, {0, 1}, {0, 1}}; }

// New edge from the corner after dart c to a new vertex.
Growing add_pendant(const Growing& g, Dart c) {
  auto r = g;
  auto p = static_cast<Dart>(g.alpha.size());
  auto q = p + 1;
  auto uc = static_cast<std::size_t>(c);
  r.alpha.insert(r.alpha.end(), {q, p});
  r.sigma.insert(r.sigma.end(), {g.sigma[uc], q});
  r.sigma[uc] = p;
  r.color.insert(r.color.end(), {g.color[uc], static_cast<std::uint8_t>(1 - g.color[uc])});
  return r;
}

// New edge between the corners after darts c1 and c2.
Growing add_chord(const Growing& g, Dart c1, Dart c2) {
  auto r = g;
  auto p = static_cast<Dart>(g.alpha.size());
  auto q = p + 1;
  r.alpha.insert(r.alpha.end(), {q, p});
  r.sigma.insert(r.sigma.end(), {0, 0});
  r.color.insert(r.color.end(),
                 {g.color[static_cast<std::size_t>(c1)], g.color[static_cast<std::size_t>(c2)]});
  r.sigma[static_cast<std::size_t>(p)] = r.sigma[static_cast<std::size_t>(c1)];
  r.sigma[static_cast<std::size_t>(c1)] = p;
  r.sigma[static_cast<std::size_t>(q)] = r.sigma[static_cast<std::size_t>(c2)];
  r.sigma[static_cast<std::size_t>(c2)] = q;
  return r;
}

std::int64_t perimeter_gcd(const CombMap& map) {
  std::int64_t g = 0;
  for (std::size_t f = 0; f < map.num_faces(); ++f) {
    g = std::gcd(g, static_cast<std::int64_t>(map.perimeter(f)));
  }
  return g;
}

std::vector<std::int64_t> cars_for_period(const CombMap& map, std::int64_t t) {
  std::vector<std::int64_t> cars;
  for (std::size_t f = 0; f < map.num_faces(); ++f) {
    cars.push_back(static_cast<std::int64_t>(map.perimeter(f)) / t);
  }
  return cars;
}

}  // namespace

std::vector<ColoredMap> bipartite_maps(std::size_t max_edges) {
  std::vector<ColoredMap> out;
  if (max_edges == 0) return out;
  std::map<std::vector<std::int32_t>, Growing> level;
  auto keep = [](std::map<std::vector<std::int32_t>, Growing>& into, Growing g) {
    CombMap m(g.alpha, g.sigma);
    into.emplace(canonical_code(m, g.color), std::move(g));
  };
  keep(level, single_edge());
  for (std::size_t edges = 1;; ++edges) {
    for (const auto& [code, g] : level) {
      CombMap m(g.alpha, g.sigma);
      std::vector<Color> colors(m.num_vertices());
      for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        colors[v] = static_cast<Color>(g.color[static_cast<std::size_t>(m.vertex_darts(v)[0])]);
      }
      out.push_back({std::move(m), std::move(colors)});
    }
    if (edges == max_edges) break;
    std::map<std::vector<std::int32_t>, Growing> next;
    for (const auto& [code, g] : level) {
      auto n = static_cast<Dart>(g.alpha.size());
      for (Dart c = 0; c < n; ++c) keep(next, add_pendant(g, c));
      for (Dart c1 = 0; c1 < n; ++c1) {
        for (Dart c2 = 0; c2 < n; ++c2) {
          if (g.color[static_cast<std::size_t>(c1)] == 0 && g.color[static_cast<std::size_t>(c2)] == 1) {
            keep(next, add_chord(g, c1, c2));
          }
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

HowieDiagram standard_labelling(const ColoredMap& cm, const SpecPtr& spec) {
  if (spec->size() != 2) throw std::invalid_argument("standard_labelling needs two factors");
  HowieDiagram d;
  d.map = std::make_shared<const CombMap>(cm.map);
  d.spec = spec;
  d.colors = cm.colors;
  d.exterior.assign(cm.map.num_vertices(), true);
  for (std::size_t v = 0; v < cm.map.num_vertices(); ++v) {
    auto order = spec->order(static_cast<std::size_t>(cm.colors[v]));
    if (order.is_finite()) {
      d.exterior[v] = static_cast<std::int64_t>(cm.map.degree(v)) % order.value() != 0;
    }
  }
  for (std::size_t dart = 0; dart < cm.map.num_darts(); ++dart) {
    auto factor = static_cast<std::uint32_t>(cm.colors[cm.map.vertex_of(static_cast<Dart>(dart))]);
    d.corner_labels.push_back(Word::letter(spec, factor, 1));
  }
  return d;
}

std::vector<std::int64_t> admissible_periods(const CombMap& map) {
  auto g = perimeter_gcd(map);
  std::vector<std::int64_t> out;
  for (std::int64_t t = 1; t <= g; ++t) {
    if (g % t == 0) out.push_back(t);
  }
  return out;
}

std::size_t enumerate_small_diagrams(
    const EnumerationLimits& limits,
    const std::function<void(const HowieDiagram&, const Motion&)>& visit) {
  std::size_t count = 0;
  if (limits.max_edges == 0) return count;
  auto spec = make_spec({limits.order_a, limits.order_b});
  for (const auto& cm : bipartite_maps(limits.max_edges)) {
    auto faces = cm.map.num_faces();
    if (limits.max_faces != 0 && faces > limits.max_faces) continue;
    auto diagram = standard_labelling(cm, spec);
    if (!validate_diagram(diagram)) {
      throw std::logic_error("standard labelling produced an invalid diagram");
    }
    for (auto t : admissible_periods(cm.map)) {
      auto cars = cars_for_period(cm.map, t);
      std::vector<std::int64_t> phases(faces, 0);
      while (true) {
        visit(diagram, Motion(diagram.map, cars, phases));
        ++count;
        // Odometer over the phases of faces 1..F-1.
        std::size_t f = 1;
        while (f < faces && ++phases[f] == t) phases[f++] = 0;
        if (f >= faces) break;
      }
    }
  }
  return count;
}

CombMap random_map(Rng& rng, std::size_t edges) {
  if (edges == 0) throw std::invalid_argument("random_map needs at least one edge");
  auto g = single_edge();
  for (std::size_t e = 1; e < edges; ++e) {
    auto n = static_cast<std::int64_t>(g.alpha.size());
    auto c1 = static_cast<Dart>(rng.uniform(0, n - 1));
    if (rng.chance(1, 2)) {
      g = add_pendant(g, c1);
    } else {
      g = add_chord(g, c1, static_cast<Dart>(rng.uniform(0, n - 1)));
    }
  }
  return CombMap(g.alpha, g.sigma);
}

Motion random_motion(Rng& rng, std::size_t edges) {
  auto map = std::make_shared<const CombMap>(random_map(rng, edges));
  auto periods = admissible_periods(*map);
  auto t = periods[static_cast<std::size_t>(
      rng.uniform(0, static_cast<std::int64_t>(periods.size()) - 1))];
  std::vector<std::int64_t> phases;
  for (std::size_t f = 0; f < map->num_faces(); ++f) {
    phases.push_back(rng.uniform(0, static_cast<std::int64_t>(map->perimeter(f)) - 1));
  }
  return Motion(map, cars_for_period(*map, t), phases);
}

}  // namespace powercl
