#include "powercl/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "powercl/text.hpp"

namespace powercl {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

SpecPtr read_factors(const json& j) {
  const auto& f = field(j, "factors");
  if (f.is_string()) return make_spec(parse_orders(f.get<std::string>()));
  if (f.is_array()) {
    std::vector<Order> orders;
    for (const auto& o : f) {
      orders.push_back(o.is_string() ? parse_order(o.get<std::string>())
                                     : Order::finite(o.get<std::int64_t>()));
    }
    return make_spec(std::move(orders));
  }
  throw FormatError("\"factors\" must be a string or a list");
}

Word read_word(const json& j, const SpecPtr& spec) {
  if (!j.is_string()) throw FormatError("words are written as strings");
  return parse_word(j.get<std::string>(), spec);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::int64_t key_int(const std::string& key) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw FormatError("expected an integer key, got \"" + key + "\"");
  return v;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["factors"] = format_orders(*cert.spec);
  j["commutators"] = json::array();
  for (const auto& c : cert.commutators) {
    j["commutators"].push_back({format_word(c.x), format_word(c.y)});
  }
  j["factor_conjugates"] = json::array();
  for (const auto& d : cert.factor_conjugates) {
    j["factor_conjugates"].push_back({format_word(d.letter), format_word(d.conjugator)});
  }
  j["base"] = format_word(cert.base);
  j["power_terms"] = json::array();
  for (const auto& t : cert.power_terms) {
    j["power_terms"].push_back({format_word(t.conjugator), t.exponent});
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  auto j = parse_json(text);
  try {
    auto spec = read_factors(j);
    Certificate cert{spec, {}, {}, read_word(field(j, "base"), spec), {}};
    for (const auto& c : field(j, "commutators")) {
      if (!c.is_array() || c.size() != 2) throw FormatError("commutators are [x, y] pairs");
      cert.commutators.push_back({read_word(c[0], cert.spec), read_word(c[1], cert.spec)});
    }
    if (j.contains("factor_conjugates")) {
      for (const auto& d : j.at("factor_conjugates")) {
        if (!d.is_array() || d.size() != 2) {
          throw FormatError("factor conjugates are [letter, conjugator] pairs");
        }
        cert.factor_conjugates.push_back({read_word(d[0], cert.spec), read_word(d[1], cert.spec)});
      }
    }
    for (const auto& t : field(j, "power_terms")) {
      if (!t.is_array() || t.size() != 2 || !t[1].is_number_integer()) {
        throw FormatError("power terms are [conjugator, exponent] pairs");
      }
      cert.power_terms.push_back({read_word(t[0], cert.spec), t[1].get<std::int64_t>()});
    }
    return cert;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad certificate: ") + e.what());
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

DiagramFile diagram_from_json(std::string_view text) {
  auto j = parse_json(text);
  try {
    auto spec = read_factors(j);

    std::map<std::int64_t, Dart> dart_index;
    for (const auto& d : field(j, "darts")) {
      auto id = d.get<std::int64_t>();
      if (!dart_index.emplace(id, static_cast<Dart>(dart_index.size())).second) {
        throw FormatError("dart " + std::to_string(id) + " listed twice");
      }
    }
    auto dart = [&](std::int64_t id) {
      auto it = dart_index.find(id);
      if (it == dart_index.end()) throw FormatError("unknown dart " + std::to_string(id));
      return it->second;
    };

    std::vector<std::pair<Dart, Dart>> edges;
    for (const auto& e : field(j, "alpha")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("alpha entries are dart pairs");
      edges.emplace_back(dart(e[0].get<std::int64_t>()), dart(e[1].get<std::int64_t>()));
    }
    std::vector<std::vector<Dart>> rotations;
    for (const auto& cycle : field(j, "sigma")) {
      std::vector<Dart> r;
      for (const auto& d : cycle) r.push_back(dart(d.get<std::int64_t>()));
      if (r.empty()) throw FormatError("empty rotation cycle");
      rotations.push_back(std::move(r));
    }
    auto map = std::make_shared<const CombMap>(map_from_cycles(dart_index.size(), edges, rotations));

    HowieDiagram d;
    d.map = map;
    d.spec = spec;
    d.colors.assign(map->num_vertices(), Color::A);
    d.exterior.assign(map->num_vertices(), false);
    auto vertex = [&](std::int64_t file_vertex) {
      if (file_vertex < 0 || static_cast<std::size_t>(file_vertex) >= rotations.size()) {
        throw FormatError("unknown vertex " + std::to_string(file_vertex));
      }
      return map->vertex_of(rotations[static_cast<std::size_t>(file_vertex)][0]);
    };
    const auto& colors = field(j, "colors");
    if (colors.size() != rotations.size()) throw FormatError("one colour per vertex expected");
    for (const auto& [key, value] : colors.items()) {
      auto c = value.get<std::string>();
      if (c != "A" && c != "B") throw FormatError("colours are \"A\" or \"B\"");
      d.colors[vertex(key_int(key))] = c == "A" ? Color::A : Color::B;
    }
    if (j.contains("exterior")) {
      for (const auto& v : j.at("exterior")) d.exterior[vertex(v.get<std::int64_t>())] = true;
    }
    d.corner_labels.assign(map->num_darts(), Word(spec));
    std::vector<bool> labelled(map->num_darts(), false);
    for (const auto& [key, value] : field(j, "corner_labels").items()) {
      auto dd = static_cast<std::size_t>(dart(key_int(key)));
      d.corner_labels[dd] = read_word(value, spec);
      labelled[dd] = true;
    }
    for (std::size_t i = 0; i < labelled.size(); ++i) {
      if (!labelled[i]) throw FormatError("corner of dart " + std::to_string(i) + " has no label");
    }

    DiagramFile file{d, std::nullopt, std::nullopt};
    if (j.contains("base")) file.base = read_word(j.at("base"), spec);
    if (j.contains("motion")) {
      std::vector<std::int64_t> cars(map->num_faces(), 0);
      std::vector<std::int64_t> phases(map->num_faces(), 0);
      for (const auto& [key, value] : j.at("motion").items()) {
        auto start = dart(key_int(key));
        auto f = map->face_of(start);
        if (cars[f] != 0) throw FormatError("face listed twice in \"motion\"");
        cars[f] = value.get<std::int64_t>();
        phases[f] = static_cast<std::int64_t>(map->face_index(start));
      }
      for (std::size_t f = 0; f < cars.size(); ++f) {
        if (cars[f] < 1) throw FormatError("face " + std::to_string(f) + " has no cars");
      }
      try {
        file.motion.emplace(map, cars, phases);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("motion: ") + e.what());
      }
    } else if (file.base) {
      try {
        file.motion = uniform_motion_from_diagram(d, *file.base);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("motion from base: ") + e.what());
      }
    }
    return file;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad diagram: ") + e.what());
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string diagram_to_json(const HowieDiagram& d, const Motion* motion) {
  const auto& m = *d.map;
  json j;
  j["factors"] = format_orders(*d.spec);
  j["darts"] = json::array();
  for (std::size_t i = 0; i < m.num_darts(); ++i) j["darts"].push_back(i);
  j["alpha"] = json::array();
  for (std::size_t e = 0; e < m.num_edges(); ++e) {
    auto [a, b] = m.edge_darts(e);
    j["alpha"].push_back({a, b});
  }
  j["sigma"] = json::array();
  j["colors"] = json::object();
  j["exterior"] = json::array();
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    auto darts = m.vertex_darts(v);
    j["sigma"].push_back(std::vector<Dart>(darts.begin(), darts.end()));
    j["colors"][std::to_string(v)] = d.colors[v] == Color::A ? "A" : "B";
    if (d.exterior[v]) j["exterior"].push_back(v);
  }
  j["corner_labels"] = json::object();
  for (std::size_t i = 0; i < m.num_darts(); ++i) {
    j["corner_labels"][std::to_string(i)] = format_word(d.corner_labels[i]);
  }
  if (motion) {
    j["motion"] = json::object();
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
      auto start = m.face_darts(f)[static_cast<std::size_t>(motion->phase(f))];
      j["motion"][std::to_string(start)] = motion->cars(f);
    }
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace powercl
