#include "expertise/model_io.h"

#include <gtest/gtest.h>

#include "expertise/validity.h"
#include "test_util.h"

namespace expertise {
namespace {

TEST(ModelIoTest, LoadsEconomist) {
  const ExpertiseModel m = testutil::Economist();
  EXPECT_EQ(m.states().names(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(m.partition(), Partition::FromLabels({0, 1, 0, 1}));
  EXPECT_EQ(m.AtomExtension("r"), testutil::Set(m, {"a", "c"}));
  EXPECT_EQ(m.AtomExtension("p"), testutil::Set(m, {"a", "b"}));
}

TEST(ModelIoTest, LoadsExpertiseForm) {
  const ExpertiseModel m = testutil::DistributionCountermodel();
  EXPECT_EQ(m.partition(), Partition::FromLabels({0, 1, 1}));
  EXPECT_EQ(m.AtomExtension("q"), testutil::Set(m, {"b"}));
}

TEST(ModelIoTest, RoundTrip) {
  const ExpertiseModel m = testutil::DistributionCountermodel();
  EXPECT_EQ(ModelFromJson(ModelToJson(m)), m);
  EXPECT_EQ(ModelToJson(m).dump(),
            R"({"partition":[["a"],["b","c"]],"states":["a","b","c"],"valuation":{"p":["a"],"q":["b"]}})");
}

TEST(ModelIoTest, EnumeratedModelsRoundTrip) {
  ModelEnumerator e({3, {"p"}, std::nullopt});
  while (auto m = e.Next()) EXPECT_EQ(ParseModel(ModelToJson(*m).dump()), *m);
}

TEST(ModelIoTest, RelationalJson) {
  const auto j = RelationalModelToJson(ToS5Model(testutil::Economist()));
  EXPECT_TRUE(j.at("is_s5").get<bool>());
  EXPECT_EQ(j.at("relation").size(), 8u);
  EXPECT_EQ(j.at("relation")[1], (nlohmann::json{"a", "c"}));
}

TEST(ModelIoTest, Rejections) {
  const char* bad[] = {
      R"([1,2])",
      R"({"states":["a"],"partition":[["a"]],"extra":1})",
      R"({"partition":[["a"]]})",
      R"({"states":["a"]})",
      R"({"states":["a"],"partition":[["a"]],"expertise":[["a"],[]]})",
      R"({"states":[],"partition":[]})",
      R"({"states":["a","a"],"partition":[["a"]]})",
      R"({"states":["a","b"],"partition":[["a"]]})",
      R"({"states":["a","b"],"partition":[["a","b"],["b"]]})",
      R"({"states":["a"],"partition":[["z"]]})",
      R"({"states":["a"],"partition":[["a"]],"valuation":{"p":["z"]}})",
      R"({"states":["a"],"partition":[["a"]],"valuation":{"P":["a"]}})",
      R"({"states":["a"],"partition":[["a"]],"valuation":[]})",
      R"({"states":["a","b"],"expertise":[["a","b"]]})",
      R"({"states":["a"],"partition":"a"})",
      R"({"states":["a"], )",
  };
  for (const char* text : bad) EXPECT_THROW(ParseModel(text), ModelFormatError) << text;
  EXPECT_THROW(LoadModelFile("/nonexistent/model.json"), ModelFormatError);
}

TEST(ModelIoTest, ExpertiseFormReportsTheLaw) {
  try {
    ParseModel(R"({"states":["a","b"],"expertise":[["a","b"]]})");
    ADD_FAILURE();
  } catch (const ModelFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("P2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace expertise
