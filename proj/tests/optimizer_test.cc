#include <gtest/gtest.h>

#include <sstream>

#include "tlsum/optimizer.h"
#include "tlsum/random_instance.h"

namespace tlsum {
namespace {

using Ids = std::vector<SentenceId>;

TEST(GreedyTest, ModularPicksLargestWeights) {
  const ModularFunction f("w", {3, 1, 2});
  const auto r = Greedy(f, CardinalityConstraint(2));
  EXPECT_EQ(r.selected, (Ids{0, 2}));
  EXPECT_DOUBLE_EQ(r.objective_value, 5.0);
  EXPECT_EQ(r.gains, (std::vector<double>{3, 2}));
}

TEST(GreedyTest, TiesBreakOnSmallerId) {
  const ModularFunction f("zero", std::vector<double>(5, 0.0));
  EXPECT_EQ(Greedy(f, CardinalityConstraint(3)).selected, (Ids{0, 1, 2}));
  EXPECT_EQ(LazyGreedy(f, CardinalityConstraint(3)).selected, (Ids{0, 1, 2}));
}

TEST(GreedyTest, SkipsInfeasibleAndKeepsGoing) {
  // Weight order 0,1,2,3; 0 and 1 share a date with k=1.
  const std::vector<Date> dates = {Date::FromDayNumber(1), Date::FromDayNumber(1), Date::FromDayNumber(2),
                                   Date::FromDayNumber(3)};
  const ModularFunction f("w", {4, 3, 2, 1});
  std::vector<TraceEvent> trace;
  GreedyOptions opt;
  opt.trace = &trace;
  const auto r = Greedy(f, TlsConstraint(3, 1, dates), opt);
  EXPECT_EQ(r.selected, (Ids{0, 2, 3}));
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_FALSE(trace[1].feasible);
  EXPECT_EQ(trace[1].id, 1);
}

TEST(GreedyTest, EmptyConstraintSelectsNothing) {
  const ModularFunction f("w", {1, 2});
  const auto r = Greedy(f, CardinalityConstraint(0));
  EXPECT_TRUE(r.selected.empty());
  EXPECT_EQ(r.objective_value, 0.0);
}

TEST(GreedyTest, ModularUnderCardinalityIsOptimal) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> w;
    for (int i = 0; i < 10; ++i) w.push_back(UniformDouble(rng));
    const ModularFunction f("w", w);
    const CardinalityConstraint c(1 + static_cast<int>(UniformIndex(rng, 5)));
    EXPECT_NEAR(Greedy(f, c).objective_value, ExhaustiveOptimum(f, c).objective_value, 1e-12);
  }
}

TEST(GreedyTest, NeverBeatsExhaustiveAndMeetsBound) {
  for (int k = 1; k <= 3; ++k) {
    const auto batch = TlsGuaranteeBatch(k, 30, 17, 10);
    for (const auto& p : batch) {
      const auto g = Greedy(*p.objective, *p.constraint);
      const auto o = ExhaustiveOptimum(*p.objective, *p.constraint);
      EXPECT_LE(g.objective_value, o.objective_value + 1e-9);
      EXPECT_TRUE(p.constraint->Contains(g.selected));
    }
    EXPECT_TRUE(GuaranteeRatio(batch, k).passed());
  }
}

TEST(GreedyTest, ValueMatchesDirectEvaluation) {
  const auto batch = TlsGuaranteeBatch(2, 20, 5);
  for (const auto& p : batch) {
    const auto g = Greedy(*p.objective, *p.constraint);
    EXPECT_NEAR(g.objective_value, p.objective->Value(g.selected), 1e-9);
  }
}

TEST(LazyGreedyTest, IdenticalToGreedy) {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto inst = MakeRandomInstance(12, seed);
    const auto f = RandomObjective(inst, rng);
    const TlsConstraint c(1 + static_cast<int>(UniformIndex(rng, 3)), 1 + static_cast<int>(UniformIndex(rng, 3)),
                          inst.dates);
    const auto a = Greedy(*f, c);
    const auto b = LazyGreedy(*f, c);
    ASSERT_EQ(a.selected, b.selected) << seed;
    EXPECT_EQ(a.objective_value, b.objective_value);
  }
}

TEST(LazyGreedyTest, FewerEvaluationsOnLargerInstance) {
  const auto inst = MakeRandomInstance(200, 1);
  const auto f = MakeCoverage(*inst.similarity, TemporalModifier::Reweight());
  const CardinalityConstraint c(20);
  const auto a = Greedy(*f, c);
  const auto b = LazyGreedy(*f, c);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_LT(b.marginal_evaluations, a.marginal_evaluations);
}

TEST(GreedyTest, ThreadCountDoesNotChangeResult) {
  const auto inst = MakeRandomInstance(3000, 2, 200);
  const auto f = ComposedObjective::Compose(
      {MakeCoverage(*inst.similarity, TemporalModifier::Cutoff(10)),
       MakeTemporalDiversity(inst.dates, inst.similarity->RowSums(TemporalModifier::Cutoff(10)))});
  const TlsConstraint c(10, 2, inst.dates);
  GreedyOptions one;
  GreedyOptions four;
  four.num_threads = 4;
  EXPECT_EQ(Greedy(f, c, one).selected, Greedy(f, c, four).selected);
}

TEST(ExhaustiveTest, RejectsLargeGroundSet) {
  const ModularFunction f("w", std::vector<double>(kMaxExhaustiveGroundSize + 1, 1.0));
  EXPECT_THROW(ExhaustiveOptimum(f, CardinalityConstraint(1)), Error);
}

TEST(ExhaustiveTest, TiesGoToSmallestIds) {
  const ModularFunction f("w", {1, 1, 1});
  EXPECT_EQ(ExhaustiveOptimum(f, CardinalityConstraint(2)).selected, (Ids{0, 1}));
}

TEST(TraceTest, JsonLines) {
  const ModularFunction f("w", {3, 1, 2});
  std::vector<TraceEvent> trace;
  GreedyOptions opt;
  opt.trace = &trace;
  Greedy(f, CardinalityConstraint(2), opt);
  std::ostringstream out;
  WriteTraceJsonl(out, trace);
  EXPECT_EQ(out.str(),
            "{\"feasible\":true,\"gain\":3.0,\"id\":0,\"step\":0}\n"
            "{\"feasible\":true,\"gain\":2.0,\"id\":2,\"step\":1}\n");
}

}  // namespace
}  // namespace tlsum
