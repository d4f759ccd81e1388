#include "expertise/validity.h"

#include <gtest/gtest.h>

#include <set>

#include "expertise/model_io.h"
#include "expertise/semantics.h"
#include "test_util.h"

namespace expertise {
namespace {

TEST(BellTest, Values) {
  const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n < std::size(expected); ++n) EXPECT_EQ(BellNumber(n), expected[n]);
  EXPECT_THROW(BellNumber(40), std::overflow_error);
}

TEST(AllPartitionsTest, RestrictedGrowthOrder) {
  const auto ps = AllPartitions(3);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps[0], Partition::Trivial(3));
  EXPECT_EQ(ps[1], Partition::FromLabels({0, 0, 1}));
  EXPECT_EQ(ps[2], Partition::FromLabels({0, 1, 0}));
  EXPECT_EQ(ps[3], Partition::FromLabels({0, 1, 1}));
  EXPECT_EQ(ps[4], Partition::Discrete(3));
}

TEST(EnumerationTest, Counts) {
  EXPECT_EQ((EnumerationSpec{1, {"p"}, {}}).ModelCount(), 2u);
  EXPECT_EQ((EnumerationSpec{3, {}, {}}).ModelCount(), 5u);
  EXPECT_EQ((EnumerationSpec{4, {"p", "q"}, {}}).ModelCount(), 3840u);
  EXPECT_EQ((EnumerationSpec{4, {"p", "q"}, {}}).CumulativeModelCount(), 4u + 32 + 320 + 3840);
  EXPECT_THROW((EnumerationSpec{0, {}, {}}).Validate(), std::invalid_argument);
  EXPECT_THROW((EnumerationSpec{2, {"p", "p"}, {}}).Validate(), std::invalid_argument);
}

TEST(EnumerationTest, StreamsEveryModelOnce) {
  for (auto spec : {EnumerationSpec{1, {"p"}, {}}, EnumerationSpec{3, {}, {}},
                    EnumerationSpec{4, {"p", "q"}, {}}}) {
    ModelEnumerator e(spec);
    std::set<std::string> seen;
    while (auto m = e.Next()) {
      EXPECT_EQ(m->size(), spec.n_states);
      seen.insert(ModelToJson(*m).dump());
    }
    EXPECT_EQ(seen.size(), spec.ModelCount());
    EXPECT_EQ(e.visited(), spec.ModelCount());
    EXPECT_FALSE(e.truncated());
  }
}

TEST(EnumerationTest, LimitTruncates) {
  ModelEnumerator e({4, {"p", "q"}, 100});
  std::size_t count = 0;
  while (e.Next()) ++count;
  EXPECT_EQ(count, 100u);
  EXPECT_TRUE(e.truncated());
}

TEST(EnumerationTest, ValuationBitLayout) {
  // bit (i * n + x): atom i true at state x.
  const ExpertiseModel m =
      EnumeratedModel(StateSpace::Numbered(3), Partition::Trivial(3), {"p", "q"}, 0b100011);
  EXPECT_EQ(m.AtomExtension("p"), StateSet::FromMask(3, 0b011));
  EXPECT_EQ(m.AtomExtension("q"), StateSet::FromMask(3, 0b100));
}

TEST(CountermodelTest, ExpertiseOfAnAtom) {
  const Verdict v = FindCountermodel(Parse("E p"), {2, {"p"}, {}});
  ASSERT_TRUE(v.refuted());
  const Countermodel& w = *v.witness();
  EXPECT_EQ(w.model.partition(), Partition::Trivial(2));
  EXPECT_EQ(w.model.AtomExtension("p"), StateSet::FromMask(2, 0b01));
  EXPECT_EQ(w.state, 0u);
  EXPECT_EQ(v.Summary(), "countermodel found: 2 states, false at x0");
  // 2 one-state models, then valuation 0 and 1 of the first 2-state partition.
  EXPECT_EQ(v.models_checked(), 4u);
}

TEST(CountermodelTest, FootnoteFormula) {
  const Formula f = Parse("E(p -> q) -> (E p -> E q)");
  const Verdict v = FindCountermodel(f, {3, {"p", "q"}, {}});
  ASSERT_TRUE(v.refuted());
  EXPECT_FALSE(Eval(v.witness()->model, v.witness()->state, f));
  // Least witness: one block {x0, x1}, p empty, q = {x0}; ||p -> q|| = X and
  // ||p|| = {} are block unions, ||q|| is not.
  const Countermodel& w = *v.witness();
  EXPECT_EQ(w.model.partition(), Partition::Trivial(2));
  EXPECT_TRUE(w.model.AtomExtension("p").empty());
  EXPECT_EQ(w.model.AtomExtension("q"), StateSet::FromMask(2, 0b01));
  EXPECT_FALSE(FindCountermodel(f, {1, {"p", "q"}, {}}).refuted());
  const ExpertiseModel planted = testutil::DistributionCountermodel();
  EXPECT_TRUE(ComputeExtension(planted, f).states.empty());
}

TEST(CountermodelTest, ValidFormulas) {
  const Verdict v = FindCountermodel(Parse("p -> S p"), {4, {"p"}, {}});
  EXPECT_FALSE(v.refuted());
  EXPECT_EQ(v.Summary(), "no countermodel with ≤ 4 states");
  EXPECT_EQ(v.models_checked(), (EnumerationSpec{4, {"p"}, {}}).CumulativeModelCount());
  EXPECT_FALSE(FindCountermodel(Parse("E T & E F & E E p"), {4, {"p"}, {}}).refuted());
}

TEST(CountermodelTest, Contradiction) {
  const Verdict v = FindCountermodel(Parse("E p & ~E p"), {1, {"p"}, {}});
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness()->model.size(), 1u);
}

TEST(CountermodelTest, Errors) {
  EXPECT_THROW(FindCountermodel(Parse("p & q"), {2, {"p"}, {}}), std::invalid_argument);
  EXPECT_THROW(FindCountermodel(Parse("K p"), {2, {"p"}, {}}), LanguageError);
}

TEST(CountermodelTest, LimitTruncatesSearch) {
  const Verdict v = FindCountermodel(Parse("p -> S p"), {4, {"p", "q"}, 50});
  EXPECT_FALSE(v.refuted());
  EXPECT_TRUE(v.truncated());
  EXPECT_EQ(v.models_checked(), 50u);
  // A witness past the limit is not found.
  EXPECT_FALSE(FindCountermodel(Parse("E p"), {2, {"p"}, 3}).refuted());
  EXPECT_TRUE(FindCountermodel(Parse("E p"), {2, {"p"}, 4}).refuted());
}

TEST(CountermodelTest, ParallelSearchIsDeterministic) {
  const std::vector<const char*> formulas = {"E(p -> q) -> (E p -> E q)", "E p", "S p -> p",
                                             "A (S p -> q)", "p -> S p", "E (p & q) -> E p"};
  for (const char* text : formulas) {
    const Formula f = Parse(text);
    const EnumerationSpec spec{4, {"p", "q"}, {}};
    const std::string serial = VerdictToJson(FindCountermodel(f, spec), false).dump();
    for (unsigned jobs : {2u, 4u, 7u})
      EXPECT_EQ(VerdictToJson(FindCountermodel(f, spec, {jobs}), false).dump(), serial) << text;
  }
}

TEST(CountermodelTest, WitnessIsTheFirstInEnumerationOrder) {
  const Formula f = Parse("S p -> E p");
  const EnumerationSpec spec{3, {"p"}, {}};
  const Verdict v = FindCountermodel(f, spec);
  ASSERT_TRUE(v.refuted());
  std::uint64_t ordinal = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    ModelEnumerator e({n, {"p"}, {}});
    while (auto m = e.Next()) {
      ++ordinal;
      const StateSet ext = ComputeExtension(*m, f).states;
      if (!ext.full()) {
        EXPECT_EQ(v.witness()->model, *m);
        EXPECT_EQ(v.witness()->state, *ext.Complement().First());
        EXPECT_EQ(v.models_checked(), ordinal);
        return;
      }
    }
  }
  ADD_FAILURE() << "oracle found no countermodel";
}

TEST(EquivalenceTest, Examples) {
  const EnumerationSpec spec{4, {"p"}, {}};
  EXPECT_FALSE(CheckEquivalence(Parse("E p"), Parse("E ~p"), spec).refuted());
  EXPECT_FALSE(CheckEquivalence(Parse("E p"), Parse("A E p"), spec).refuted());
  EXPECT_FALSE(CheckEquivalence(Parse("E p"), Parse("A (S p -> p)"), spec).refuted());
  EXPECT_FALSE(CheckEquivalence(Parse("~E p"), Parse("A^ (S p & ~p)"), spec).refuted());
  EXPECT_TRUE(CheckEquivalence(Parse("E p"), Parse("S p"), spec).refuted());
}

TEST(DefaultBoundTest, Values) {
  EXPECT_EQ(DefaultBound(Parse("E T")).n_states, 4u);
  EXPECT_EQ(DefaultBound(Parse("p")).n_states, 4u);
  EXPECT_EQ(DefaultBound(Parse("p & q & r")).n_states, 4u);
  EXPECT_EQ(DefaultBound(Parse("p & q & r & s & t")).n_states, 2u);
  EXPECT_EQ(DefaultBound(Parse("p & q")).atoms, (std::vector<std::string>{"p", "q"}));
}

TEST(VerdictJsonTest, Shape) {
  const Verdict v = FindCountermodel(Parse("E p"), {2, {"p"}, {}});
  const auto j = VerdictToJson(v, false);
  EXPECT_EQ(j.at("status"), "countermodel-found");
  EXPECT_EQ(j.at("formula"), "E p");
  EXPECT_EQ(j.at("witness").at("state"), "x0");
  EXPECT_EQ(j.at("witness").at("model").at("partition"), nlohmann::json::parse(R"([["x0","x1"]])"));
  EXPECT_EQ(j.at("total_models"), 10u);
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_TRUE(VerdictToJson(v).contains("wall_time_ms"));
}

TEST(CorpusTest, DefaultCorpus) {
  ASSERT_GE(DefaultCorpus().size(), 12u);
  for (std::size_t i = 0; i < DefaultCorpus().size(); ++i) {
    EXPECT_EQ(DefaultCorpus()[i], Parse(DefaultCorpusText()[i]));
    EXPECT_TRUE(InL(DefaultCorpus()[i]));
  }
}

}  // namespace
}  // namespace expertise
