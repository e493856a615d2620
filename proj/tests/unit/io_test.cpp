#include <gtest/gtest.h>

#include <filesystem>

#include "powercl/clusters.hpp"
#include "powercl/io.hpp"
#include "powercl/text.hpp"

namespace powercl {
namespace {

const char* kFig1 = R"({
  "factors": "3,3",
  "darts": [10, 11, 12, 20, 21, 22],
  "alpha": [[10, 20], [11, 21], [12, 22]],
  "sigma": [[10, 11, 12], [20, 21, 22]],
  "colors": {"0": "A", "1": "B"},
  "corner_labels": {"10": "0^1", "11": "0^1", "12": "0^1",
                    "20": "1^1", "21": "1^1", "22": "1^1"},
  "base": "0^1 1^1"
})";

std::string swap(std::string text, const std::string& from, const std::string& to) {
  auto at = text.find(from);
  if (at == std::string::npos) throw std::logic_error("fixture lacks " + from);
  return text.replace(at, from.size(), to);
}

TEST(DiagramFile, ArbitraryDartIds) {
  auto file = diagram_from_json(kFig1);
  EXPECT_EQ(file.diagram.map->euler_characteristic(), 0);
  EXPECT_TRUE(validate_diagram(file.diagram));
  ASSERT_TRUE(file.motion);
  EXPECT_EQ(file.motion->period(), 2);
  EXPECT_EQ(detect_collisions(*file.motion).collisions.size(), 2u);
}

TEST(DiagramFile, RoundTrip) {
  auto file = diagram_from_json(kFig1);
  auto text = diagram_to_json(file.diagram, &*file.motion);
  auto again = diagram_from_json(text);
  ASSERT_TRUE(again.motion);
  EXPECT_EQ(again.motion->cars_per_face(), file.motion->cars_per_face());
  EXPECT_EQ(again.motion->phases(), file.motion->phases());
  EXPECT_EQ(diagram_to_json(again.diagram, &*again.motion), text);
}

TEST(DiagramFile, ExplicitMotion) {
  auto file = diagram_from_json(swap(kFig1, "\"base\": \"0^1 1^1\"", "\"motion\": {\"11\": 1}"));
  ASSERT_TRUE(file.motion);
  EXPECT_EQ(file.motion->period(), 6);
  EXPECT_EQ(file.motion->phase(0), static_cast<std::int64_t>(file.diagram.map->face_index(1)));
}

TEST(DiagramFile, Errors) {
  EXPECT_THROW(diagram_from_json("{"), FormatError);
  EXPECT_THROW(diagram_from_json("{}"), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "[10, 11, 12, 20", "[10, 10, 12, 20")), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "[12, 22]", "[12, 99]")), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "\"B\"", "\"C\"")), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "\"12\": \"0^1\",", "")), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "\"12\": \"0^1\"", "\"12\": \"1^1\"")), FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "\"base\": \"0^1 1^1\"", "\"base\": \"0^1 1^1 0^1 1^2\"")),
               FormatError);
  EXPECT_THROW(diagram_from_json(swap(kFig1, "\"base\": \"0^1 1^1\"", "\"motion\": {\"11\": 4}")),
               FormatError);
}

TEST(CertificateFile, Errors) {
  EXPECT_THROW(certificate_from_json("[]"), FormatError);
  EXPECT_THROW(certificate_from_json(R"({"factors": "3,3", "base": "0^1 1^1",
      "commutators": [["0^1"]], "power_terms": [["", 3]]})"),
               FormatError);
  EXPECT_THROW(certificate_from_json(R"({"factors": "3,3", "base": "2^1 1^1",
      "commutators": [], "power_terms": [["", 3]]})"),
               FormatError);
  auto ok = certificate_from_json(R"({"factors": [3, "inf"], "base": "0^1 1^1",
      "commutators": [], "power_terms": [["", 1]]})");
  EXPECT_EQ(ok.spec->order(1), Order::infinite());
  EXPECT_EQ(ok.power_terms.size(), 1u);
}

TEST(Files, ReadWrite) {
  auto path = std::filesystem::temp_directory_path() / "powercl_io_test.json";
  write_file(path, "abc\n");
  EXPECT_EQ(read_file(path), "abc\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path), FormatError);
}

}  // namespace
}  // namespace powercl
