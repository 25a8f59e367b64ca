#include <gtest/gtest.h>

#include "tlsum/baselines.h"
#include "tlsum/random_instance.h"

namespace tlsum {
namespace {

Date Day(int offset) { return Date::FromDayNumber(15000 + offset); }

TEST(ChieuExtentTest, Examples) {
  EXPECT_EQ(ChieuExtent({}), 0);
  EXPECT_EQ(ChieuExtent(std::vector<double>(11, 0.0)), 0);
  std::vector<double> mass(11, 0.0);
  mass[0] = 1.0;
  EXPECT_EQ(ChieuExtent(mass), 0);
  mass[0] = 0.5;
  mass[10] = 0.5;
  EXPECT_EQ(ChieuExtent(mass), 10);
  // Exactly 80% at gap 3.
  std::vector<double> m2(11, 0.0);
  m2[0] = 0.4;
  m2[3] = 0.4;
  m2[7] = 0.2;
  EXPECT_EQ(ChieuExtent(m2), 3);
}

TEST(ChieuRankTest, InterestIsWindowedMassExcludingSelf) {
  // 0, 1, 2 on one day with pairwise 0.5; 3 eleven days later, similar to 0.
  const DenseSimilarity sim({{1, .5, .5, .9}, {.5, 1, .5, 0}, {.5, .5, 1, 0}, {.9, 0, 0, 1}},
                            {Day(0), Day(0), Day(0), Day(11)});
  const auto ranked = ChieuRank(sim);
  ASSERT_EQ(ranked.size(), 4u);
  EXPECT_EQ(ranked[0], (RankedSentence{0, 1.0, 0}));
  EXPECT_EQ(ranked[1], (RankedSentence{1, 1.0, 0}));
  EXPECT_EQ(ranked[2], (RankedSentence{2, 1.0, 0}));
  EXPECT_EQ(ranked[3], (RankedSentence{3, 0.0, 0}));
}

TEST(ChieuRankTest, MatchesBruteForce) {
  const auto inst = MakeRandomInstance(12, 4, 40);
  const auto ranked = ChieuRank(*inst.similarity);
  for (const auto& r : ranked) {
    double interest = 0.0;
    for (int t = 0; t < 12; ++t) {
      if (t != r.id && DayGap(inst.dates[r.id], inst.dates[t]) <= 10) interest += inst.similarity->Similarity(r.id, t);
    }
    EXPECT_NEAR(r.interest, interest, 1e-12);
  }
  for (std::size_t i = 1; i < ranked.size(); ++i) EXPECT_GE(ranked[i - 1].interest, ranked[i].interest);
}

TEST(ChieuSelectTest, OneSentencePerDateAndExtentExclusion) {
  const std::vector<Date> dates = {Day(0), Day(0), Day(3), Day(6), Day(20)};
  const std::vector<RankedSentence> ranked = {
      {0, 5.0, 4}, {1, 4.0, 0}, {2, 3.0, 0}, {3, 2.0, 1}, {4, 1.0, 0}};
  // 1 shares a date with 0; 2 is within extent 4 of 0; 3 is 6 days out.
  EXPECT_EQ(ChieuSelect(ranked, dates), (std::vector<SentenceId>{0, 3, 4}));
  EXPECT_EQ(ChieuSelect(ranked, dates, 2), (std::vector<SentenceId>{0, 3}));
}

TEST(ChieuSelectTest, NeverTwoSentencesOnOneDate) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto inst = MakeRandomInstance(12, seed);
    const auto selected = ChieuSelect(ChieuRank(*inst.similarity), inst.dates);
    std::set<Date> seen;
    for (const SentenceId s : selected) EXPECT_TRUE(seen.insert(inst.dates[s]).second);
    EXPECT_FALSE(selected.empty());
  }
}

TEST(OracleTest, GainsAndSelection) {
  const Corpus corpus = CorpusFromDocuments(
      {{"a", Day(0), {"alpha beta gamma", "delta epsilon"}}, {"b", Day(1), {"alpha zeta", "omega"}}});
  Timeline ref;
  ref.entries.push_back({Day(0), {"alpha beta gamma"}});
  ref.entries.push_back({Day(5), {"omega"}});
  const auto gains = OracleGains(corpus, ref);
  ASSERT_EQ(gains.size(), 4u);
  EXPECT_DOUBLE_EQ(gains[0], 1.0);
  EXPECT_DOUBLE_EQ(gains[1], 0.0);
  EXPECT_DOUBLE_EQ(gains[2], 0.0);  // no reference entry that day
  EXPECT_DOUBLE_EQ(gains[3], 0.0);
  const auto result = OracleTimeline(corpus, ref, TlsConstraint(1, 1, SentenceDates(corpus)));
  EXPECT_EQ(result.state.selected, std::vector<SentenceId>{0});
  ASSERT_EQ(result.timeline.entries.size(), 1u);
  EXPECT_EQ(result.timeline.entries[0].summary, std::vector<std::string>{"alpha beta gamma"});
}

TEST(OracleTest, PicksArgmaxUnderSingleSentence) {
  const Corpus corpus = CorpusFromDocuments({{"a", Day(0), {"x y", "x y z w", "x"}}});
  Timeline ref;
  ref.entries.push_back({Day(0), {"x y z"}});
  const auto gains = OracleGains(corpus, ref);
  const auto best = std::max_element(gains.begin(), gains.end()) - gains.begin();
  const auto result = OracleTimeline(corpus, ref, CardinalityConstraint(1));
  EXPECT_EQ(result.state.selected, std::vector<SentenceId>{static_cast<SentenceId>(best)});
  EXPECT_NEAR(gains[1], 2.0 * 0.75 * 1.0 / 1.75, 1e-12);
}

}  // namespace
}  // namespace tlsum
