#include <gtest/gtest.h>

#include "tlsum/constraints.h"
#include "tlsum/random_instance.h"

namespace tlsum {
namespace {

using Ids = std::vector<SentenceId>;

std::vector<Date> Days(std::initializer_list<int> offsets) {
  std::vector<Date> out;
  for (int o : offsets) out.push_back(Date::FromDayNumber(15000 + o));
  return out;
}

// Accepts exactly the sets of size m (and nothing smaller).
class ExactSizeConstraint : public IndependenceSystem {
 public:
  explicit ExactSizeConstraint(int m) : m_(m) {}
  std::string name() const override { return "exact"; }
  bool Contains(std::span<const SentenceId> set) const override {
    return static_cast<int>(Canonicalize(set).size()) == m_;
  }
  std::unique_ptr<FeasibilityTracker> NewTracker() const override { return nullptr; }

 private:
  int m_;
};

TEST(CardinalityTest, Examples) {
  const CardinalityConstraint zero(0);
  EXPECT_TRUE(zero.Contains(Ids{}));
  EXPECT_FALSE(zero.Contains(Ids{0}));
  const CardinalityConstraint two(2);
  EXPECT_TRUE(two.Contains(Ids{4, 1}));
  EXPECT_FALSE(two.Contains(Ids{0, 1, 2}));
  EXPECT_THROW(CardinalityConstraint(-1), Error);
}

TEST(KnapsackTest, Examples) {
  const KnapsackConstraint c(10, {4, 7, 6});
  EXPECT_TRUE(c.Contains(Ids{0, 2}));
  EXPECT_FALSE(c.Contains(Ids{0, 1}));
  EXPECT_TRUE(c.Contains(Ids{1}));
  EXPECT_THROW(KnapsackConstraint(-1, {}), Error);
  EXPECT_THROW(KnapsackConstraint(1, {-2}), Error);
}

TEST(TlsTest, Examples) {
  // Three sentences on day 0, one on day 1, one on day 2.
  const TlsConstraint c(2, 2, Days({0, 0, 0, 1, 2}));
  EXPECT_TRUE(c.Contains(Ids{}));
  EXPECT_TRUE(c.Contains(Ids{0, 1, 3}));
  EXPECT_FALSE(c.Contains(Ids{0, 1, 2}));
  EXPECT_FALSE(c.Contains(Ids{0, 3, 4}));
  EXPECT_THROW(TlsConstraint(0, 1, Days({0})), Error);
  EXPECT_THROW(TlsConstraint(1, 0, Days({0})), Error);
}

TEST(TrackerTest, CanAddAgreesWithContains) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto inst = MakeRandomInstance(10, seed);
    std::vector<int> words;
    Rng rng(seed);
    for (int i = 0; i < 10; ++i) words.push_back(1 + static_cast<int>(UniformIndex(rng, 9)));
    const std::vector<std::shared_ptr<const IndependenceSystem>> systems = {
        std::make_shared<CardinalityConstraint>(3),
        std::make_shared<KnapsackConstraint>(15, words),
        std::make_shared<TlsConstraint>(2, 2, inst.dates),
        std::make_shared<AllOfConstraint>(std::vector<std::shared_ptr<const IndependenceSystem>>{
            std::make_shared<CardinalityConstraint>(4), std::make_shared<TlsConstraint>(3, 1, inst.dates)}),
    };
    for (const auto& sys : systems) {
      for (int t = 0; t < 50; ++t) {
        auto tracker = sys->NewTracker();
        Ids s;
        for (int step = 0; step < 10; ++step) {
          const SentenceId v = static_cast<SentenceId>(UniformIndex(rng, 10));
          Ids with = s;
          with.push_back(v);
          ASSERT_EQ(tracker->CanAdd(v), sys->Contains(with)) << sys->name();
          ASSERT_EQ(sys->CanAdd(s, v), sys->Contains(with)) << sys->name();
          if (tracker->CanAdd(v)) {
            tracker->Add(v);
            s = Canonicalize(with);
          }
        }
      }
    }
  }
}

TEST(DownwardClosureTest, ShippedSystemsPass) {
  const auto inst = MakeRandomInstance(12, 3);
  EXPECT_TRUE(VerifyDownwardClosure(CardinalityConstraint(4), 12, 2000, 1));
  EXPECT_TRUE(VerifyDownwardClosure(KnapsackConstraint(20, std::vector<int>(12, 3)), 12, 2000, 1));
  EXPECT_TRUE(VerifyDownwardClosure(TlsConstraint(2, 2, inst.dates), 12, 2000, 1));
}

TEST(DownwardClosureTest, ExactSizeFailsUnlessOnlyEmpty) {
  EXPECT_FALSE(VerifyDownwardClosure(ExactSizeConstraint(3), 8, 100, 1));
  // Only the empty set is feasible: trivially closed.
  EXPECT_TRUE(VerifyDownwardClosure(ExactSizeConstraint(0), 8, 100, 1));
}

TEST(BaseRatioTest, TlsSingleDateBoundTwo) {
  // Days {0, 0, 1}: with ell=1, k=2 the bases of U are {0,1} and {2}.
  const TlsConstraint c(1, 2, Days({0, 0, 1}));
  const auto r = EstimateBaseRatio(c, 3);
  EXPECT_DOUBLE_EQ(r.max_ratio, 2.0);
  EXPECT_EQ(r.p_bound, 2);
  EXPECT_EQ(r.worst_subset, (Ids{0, 1, 2}));
  EXPECT_EQ(r.subsets_examined, 8u);
}

TEST(BaseRatioTest, CardinalityIsMatroid) {
  EXPECT_DOUBLE_EQ(EstimateBaseRatio(CardinalityConstraint(3), 8).max_ratio, 1.0);
}

TEST(BaseRatioTest, TlsNeverExceedsK) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto inst = MakeRandomInstance(10, seed);
    for (int k = 1; k <= 3; ++k) {
      const auto r = EstimateBaseRatio(TlsConstraint(2, k, inst.dates), 10);
      EXPECT_LE(r.max_ratio, k + 1e-12);
    }
  }
}

TEST(BaseRatioTest, LargeUniverseNeedsSampling) {
  const CardinalityConstraint c(2);
  EXPECT_THROW(EstimateBaseRatio(c, 13), Error);
  EXPECT_THROW(EstimateBaseRatio(c, 17, true), Error);
  EXPECT_DOUBLE_EQ(EstimateBaseRatio(c, 13, true, 5).max_ratio, 1.0);
}

TEST(ConstraintSpecTest, ParseAndBuild) {
  const auto spec = ParseConstraintSpec(nlohmann::json::parse(
      R"({"type":"all_of","of":[{"type":"tls"},{"type":"knapsack","words":7},{"type":"cardinality","m":2}]})"));
  ConstraintContext ctx;
  ctx.dates = Days({0, 0, 1, 2});
  ctx.word_counts = {3, 3, 3, 5};
  ctx.ell = 2;
  ctx.k = 1;
  const auto c = BuildConstraint(spec, ctx);
  EXPECT_EQ(c->name(), "all_of(tls(ell=2,k=1),knapsack(7),cardinality(2))");
  EXPECT_TRUE(c->Contains(Ids{0, 2}));
  EXPECT_FALSE(c->Contains(Ids{0, 1}));
  EXPECT_FALSE(c->Contains(Ids{2, 3}));
}

TEST(ConstraintSpecTest, RejectsMalformed) {
  EXPECT_THROW(ParseConstraintSpec(nlohmann::json::parse(R"({"type":"nope"})")), Error);
  EXPECT_THROW(ParseConstraintSpec(nlohmann::json::parse(R"({"m":2})")), Error);
  EXPECT_THROW(ParseConstraintSpec(nlohmann::json::parse(R"({"type":"cardinality","m":"2"})")), Error);
  EXPECT_THROW(ParseConstraintSpec(nlohmann::json::parse(R"({"type":"all_of"})")), Error);
}

}  // namespace
}  // namespace tlsum
