#pragma once

// JSON files for certificates and diagrams.
//
// Certificate:
//   {"factors": "3,inf",
//    "commutators": [["x", "y"], ...],
//    "factor_conjugates": [["letter", "conjugator"], ...],
//    "base": "u",
//    "power_terms": [["conjugator", n], ...]}
//
// Diagram:
//   {"factors": "3,3",
//    "darts": [0, 1, ...],
//    "alpha": [[d, d'], ...],
//    "sigma": [[d, ...], ...],               one rotation cycle per vertex
//    "colors": {"0": "A", "1": "B"},         keyed by position in "sigma"
//    "exterior": [vertex, ...],              optional
//    "corner_labels": {"d": "0^1", ...},     every dart
//    "motion": {"d": cars, ...},             optional: the face through dart d
//                                            carries `cars` cars, one starting at d
//    "base": "0^1 1^1"}                      optional: derive the motion from u
//
// Words use the text encoding of text.hpp. Malformed input raises FormatError.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "powercl/certificates.hpp"
#include "powercl/howie_diagram.hpp"
#include "powercl/motion.hpp"

namespace powercl {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

struct DiagramFile {
  HowieDiagram diagram;
  std::optional<Motion> motion;
  std::optional<Word> base;
};

DiagramFile diagram_from_json(std::string_view text);
std::string diagram_to_json(const HowieDiagram& diagram, const Motion* motion = nullptr);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace powercl
