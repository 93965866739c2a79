#include "edm/document.hpp"

#include <filesystem>

#include <gtest/gtest.h>

#include "edm/random.hpp"

namespace edm {
namespace {

ErrorCode first_code(const ValidationResult& r) { return std::get<ValidationReport>(r).violations.at(0).code; }

TEST(ParseCbba, ExampleDocument) {
  const auto r = parse_cbba_document(
      R"({"frame":["A","B"],"masses":[{"set":["A"],"re":0.2,"im":0.1},{"set":["B"],"re":0.8,"im":-0.1}]})");
  ASSERT_TRUE(std::holds_alternative<Cbba>(r));
  const auto& m = std::get<Cbba>(r);
  EXPECT_EQ(m.mass(m.frame().subset({"A"})), Complex(0.2, 0.1));
  EXPECT_EQ(m.mass(m.frame().subset({"B"})), Complex(0.8, -0.1));
}

TEST(ParseCbba, UnknownElement) {
  const auto r = parse_cbba_document(
      R"({"frame":["A","B"],"masses":[{"set":["A"],"re":0.5,"im":0},{"set":["C"],"re":0.5,"im":0}]})");
  EXPECT_EQ(first_code(r), ErrorCode::UnknownElement);
  EXPECT_EQ(std::get<ValidationReport>(r).violations[0].subset, "{C}");
}

TEST(ParseCbba, ValidationErrorsPassThrough) {
  const auto r = parse_cbba_document(
      R"({"frame":["A","B"],"masses":[{"set":["A"],"re":0.5,"im":0},{"set":["B"],"re":0.4,"im":0}]})");
  EXPECT_EQ(first_code(r), ErrorCode::SumNotOne);
}

TEST(ParseCbba, StructuralErrors) {
  const char* bad[] = {
      "not json",
      R"([1,2])",
      R"({"frame":["A"]})",
      R"({"frame":["A"],"masses":[],"extra":1})",
      R"({"frame":["A"],"masses":[{"set":["A"],"re":1,"im":0,"note":"x"}]})",
      R"({"frame":["A"],"masses":[{"set":["A"],"re":"1","im":0}]})",
      R"({"frame":["A"],"masses":[{"set":"A","re":1,"im":0}]})",
      R"({"frame":["A","A"],"masses":[]})",
      R"({"frame":[],"masses":[]})",
      R"({"frame":["A","B"],"masses":[{"set":["A","A"],"re":1,"im":0}]})",
  };
  for (const char* text : bad) EXPECT_EQ(first_code(parse_cbba_document(text)), ErrorCode::ParseError) << text;
}

TEST(ParseCbba, EmptySetEntries) {
  EXPECT_TRUE(std::holds_alternative<Cbba>(
      parse_cbba_document(R"({"frame":["A"],"masses":[{"set":[],"re":0,"im":0},{"set":["A"],"re":1,"im":0}]})")));
  EXPECT_EQ(first_code(parse_cbba_document(
                R"({"frame":["A"],"masses":[{"set":[],"re":0.1,"im":0},{"set":["A"],"re":0.9,"im":0}]})")),
            ErrorCode::EmptySetMass);
}

TEST(ParseCbba, MissingFile) {
  EXPECT_EQ(first_code(parse_cbba_file("/nonexistent/cbba.json")), ErrorCode::ParseError);
}

TEST(ParseCbba, CheckedInFixture) {
  const auto r = parse_cbba_file(std::filesystem::path(EDM_TEST_DATA_DIR) / "example1_theta1_m1.json");
  ASSERT_TRUE(std::holds_alternative<Cbba>(r));
}

TEST(SerializeCbba, RoundTripIsExact) {
  std::vector<std::string> names{"alpha", "beta", "gamma", "delta"};
  const Frame f(names);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto m = random_cbba(f, seed, seed % 3 == 0 ? 0.0 : 1.0);
    const auto text = serialize_cbba(m);
    const auto back = parse_cbba_document(text);
    ASSERT_TRUE(std::holds_alternative<Cbba>(back)) << text;
    EXPECT_TRUE(std::get<Cbba>(back) == m) << text;
    EXPECT_EQ(serialize_cbba(std::get<Cbba>(back)), text);
  }
}

TEST(SerializeCbba, DecimalInputsSurvive) {
  const char* text = R"({"frame":["A","B"],"masses":[{"im":0.123456789012345,"re":0.3,"set":["A"]},{"im":-0.123456789012345,"re":0.7,"set":["A","B"]}]})";
  const auto m = std::get<Cbba>(parse_cbba_document(text));
  EXPECT_EQ(serialize_cbba(m), std::string(text) + "\n");
}

}  // namespace
}  // namespace edm
