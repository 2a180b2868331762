#include <gtest/gtest.h>

#include "qshuffle/json.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/shuffle.hpp"
#include "test_support.hpp"

namespace qshuffle {
namespace {

using nlohmann::json;
using testing::E;
using testing::W;

TEST(Json, ElementShape) {
  const json j = to_json(shuffle(W("x"), W("xy")));
  EXPECT_EQ(j.dump(), R"({"terms":[{"coeff":"q^2 + 1","word":"xxy"},{"coeff":"1","word":"xyx"}]})");
  EXPECT_EQ(to_json(FreeElement{}).dump(), R"({"terms":[]})");
  EXPECT_EQ(to_json(FreeElement::one())["terms"][0]["word"], "1");
}

TEST(Json, ElementRoundTrip) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeElement v = testing::random_element(rng, 5, 6);
    EXPECT_EQ(element_from_json(json::parse(to_json(v).dump())), v);
  }
}

TEST(Json, ReportShape) {
  const json j = to_json(verify("P4.xcomm1.1", std::vector<unsigned>{2}));
  EXPECT_EQ(j["id"], "P4.xcomm1.1");
  EXPECT_EQ(j["params"], json::array({2}));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["difference"]["terms"].size(), 0U);
  EXPECT_TRUE(j["lhs_terms"].is_number_unsigned());
  EXPECT_TRUE(j["millis"].is_number());
  EXPECT_FALSE(j.contains("t_power"));
}

TEST(Json, ClassificationShape) {
  const json a = to_json(W("xyxyx"), classify(W("xyxyx")));
  EXPECT_EQ(a["class"], "alternating");
  EXPECT_EQ(a["family"], "W-");
  EXPECT_EQ(a["n"], 2);
  EXPECT_EQ(a["in_U"], true);
  const json b = to_json(W("xxyx"), classify(W("xxyx")));
  EXPECT_EQ(b["class"], "not-in-U");
  EXPECT_EQ(b["offset"], 0);
  EXPECT_EQ(b["segment"], "xxyx");
  EXPECT_EQ(b["in_U"], false);
  const json c = to_json(W("xxyyx"), classify(W("xxyyx")));
  EXPECT_EQ(c["family"], "XXYY_x");
  EXPECT_EQ(c["n"], 1);
}

TEST(Json, FamilyShape) {
  const json j = to_json(find_family("A.11"));
  EXPECT_EQ(j["arity"], 2);
  EXPECT_EQ(j["group"], "alternating");
  EXPECT_TRUE(j["formula"].is_string());
}

}  // namespace
}  // namespace qshuffle
