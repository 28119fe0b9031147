#include <gtest/gtest.h>

#include "satk/error.hpp"
#include "satk/json_io.hpp"
#include "satk/schubert.hpp"

using namespace satk;

TEST(JsonIo, Coweight) {
  EXPECT_EQ(to_json(Coweight{1, -1}).dump(), "[1,-1]");
  EXPECT_EQ(coweight_from_json(json::parse("[3,0,-2]")), (Coweight{3, 0, -2}));
  EXPECT_THROW(coweight_from_json(json::parse("[1.5]")), DomainError);
  EXPECT_THROW(coweight_from_json(json::parse("{}")), DomainError);
}

TEST(JsonIo, RootDatumRoundTrip) {
  for (const char* label : {"GL3", "Sp4", "SC:G2", "T2"}) {
    const RootDatum d = parse_group(label);
    EXPECT_EQ(root_datum_from_json(to_json(d)), d) << label;
  }
  EXPECT_THROW(root_datum_from_json(json::parse(R"({"rank":1})")), DomainError);
}

TEST(JsonIo, ElementRoundTripAndOrder) {
  HeckeElement f(5);
  f.add_term(Coweight{2, 0}, 3);
  f.add_term(Coweight{1, 1}, 1);
  const json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"p":5,"terms":[{"coeff":1,"coweight":[1,1]},{"coeff":3,"coweight":[2,0]}]})");
  EXPECT_EQ(element_from_json<HeckeTag>(j), f);
  const auto reduced = element_from_json<K0Tag>(json::parse(R"({"p":3,"terms":[{"coweight":[0],"coeff":4}]})"));
  EXPECT_EQ(reduced.coeff(Coweight{0}), 1u);
  EXPECT_THROW(element_from_json<K0Tag>(json::parse(R"({"p":4,"terms":[]})")), DomainError);
}

TEST(JsonIo, StratumReportSchema) {
  const json j = to_json(closure_report(build_root_datum("GL", 2), Coweight{1, -1}));
  EXPECT_EQ(j["mu"], json::parse("[1,-1]"));
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["strata"][1], json::parse(R"({"lambda":[0,0],"dim":0,"codim":2})"));
  EXPECT_TRUE(j["component"].is_array());
}
