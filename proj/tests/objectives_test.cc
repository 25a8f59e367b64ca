#include <gtest/gtest.h>

#include <cmath>

#include "tlsum/corpus.h"
#include "tlsum/objectives.h"
#include "tlsum/random_instance.h"
#include "tlsum/similarity.h"

namespace tlsum {
namespace {

Date D(const char* iso) { return *Date::ParseIso(iso); }
using Ids = std::vector<SentenceId>;

TEST(TemporalSimilarityTest, Modifiers) {
  for (const auto mod : {TemporalModifier::None(), TemporalModifier::Cutoff(10), TemporalModifier::Reweight()}) {
    EXPECT_EQ(TemporalSimilarity(0.7, 0, mod), 0.7);
  }
  EXPECT_EQ(TemporalSimilarity(0.7, 12, TemporalModifier::Cutoff(10)), 0.0);
  EXPECT_EQ(TemporalSimilarity(0.7, 10, TemporalModifier::Cutoff(10)), 0.7);
  EXPECT_NEAR(TemporalSimilarity(0.8, 3, TemporalModifier::Reweight()), 0.4, 1e-15);
}

TEST(TemporalSimilarityTest, NeverIncreases) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const double base = UniformDouble(rng);
    const int gap = static_cast<int>(UniformIndex(rng, 100));
    for (const auto mod : {TemporalModifier::None(), TemporalModifier::Cutoff(static_cast<int>(UniformIndex(rng, 20))),
                           TemporalModifier::Reweight()}) {
      const double m = TemporalSimilarity(base, gap, mod);
      EXPECT_LE(m, base);
      EXPECT_GE(m, 0.0);
    }
  }
}

TEST(CoverageTest, Examples) {
  const DenseSimilarity sim({{1, 0.5}, {0.5, 1}}, {D("2011-01-01"), D("2011-01-02")});
  const auto f = MakeCoverage(sim, TemporalModifier::None());
  EXPECT_EQ(f->Value(Ids{}), 0.0);
  EXPECT_DOUBLE_EQ(f->Value(Ids{0}), 1.5);
}

TEST(CoverageTest, MatchesNaiveDoubleLoop) {
  const auto inst = MakeRandomInstance(8, 4);
  for (const auto mod : {TemporalModifier::None(), TemporalModifier::Cutoff(10), TemporalModifier::Reweight()}) {
    const auto f = MakeCoverage(*inst.similarity, mod);
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
      Ids s;
      for (int i = 0; i < 8; ++i) {
        if (Bernoulli(rng, 0.5)) s.push_back(i);
      }
      double expected = 0.0;
      for (const int a : s) {
        for (int v = 0; v < 8; ++v) {
          const int gap = DayGap(inst.dates[a], inst.dates[v]);
          double x = inst.similarity->Similarity(a, v);
          if (mod.kind == TemporalModifier::Kind::kCutoff && gap > 10) x = 0.0;
          if (mod.kind == TemporalModifier::Kind::kReweight) x /= std::sqrt(gap + 1.0);
          expected += x;
        }
      }
      EXPECT_NEAR(f->Value(s), expected, 1e-9);
    }
  }
}

TEST(CoverageTest, UnboundedCutoffEqualsNoModifierExactly) {
  const auto inst = MakeRandomInstance(12, 9, 400);
  const auto a = MakeCoverage(*inst.similarity, TemporalModifier::None());
  const auto b = MakeCoverage(*inst.similarity, TemporalModifier::Cutoff(INT_MAX));
  EXPECT_EQ(a->weights(), b->weights());
  // Same on the aggregated vector path.
  std::vector<SparseVector> vecs;
  std::vector<Date> dates;
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    vecs.push_back(SparseVector({{static_cast<int>(UniformIndex(rng, 5)), 1.0 + UniformDouble(rng)},
                                 {static_cast<int>(UniformIndex(rng, 5)), UniformDouble(rng)}}));
    dates.push_back(D("2011-01-01") + static_cast<int>(UniformIndex(rng, 300)));
  }
  const VectorSimilarity vs(vecs, dates);
  EXPECT_EQ(vs.RowSums(TemporalModifier::None()), vs.RowSums(TemporalModifier::Cutoff(INT_MAX)));
}

TEST(DiversityTest, Examples) {
  Partition one{{0, 0}, 1};
  const auto f = MakeDiversity(one, {4.0, 9.0});
  EXPECT_EQ(f->Value(Ids{}), 0.0);
  EXPECT_DOUBLE_EQ(f->Value(Ids{0}), 2.0);
  EXPECT_NEAR(f->Value(Ids{0, 1}), std::sqrt(13.0), 1e-12);
  EXPECT_NEAR(f->Value(Ids{0, 1}), 3.6056, 1e-4);
  Partition two{{0, 1}, 2};
  const auto g = MakeDiversity(two, {4.0, 9.0});
  EXPECT_DOUBLE_EQ(g->Value(Ids{0, 1}), 5.0);
  EXPECT_GT(g->Value(Ids{0, 1}), f->Value(Ids{0, 1}));
}

TEST(DiversityTest, NegativeRewardIsAnError) {
  EXPECT_THROW(MakeDiversity(Partition{{0}, 1}, {-1.0}), Error);
}

TEST(DiversityTest, SubadditiveAcrossClusters) {
  const auto inst = MakeRandomInstance(12, 5);
  const auto rewards = inst.similarity->RowSums(TemporalModifier::None());
  const auto f = MakeDiversity(inst.partition, rewards);
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    Ids s;
    double bound = 0.0;
    for (int i = 0; i < 12; ++i) {
      if (Bernoulli(rng, 0.5)) {
        s.push_back(i);
        bound += std::sqrt(rewards[i]);
      }
    }
    EXPECT_LE(f->Value(s), bound + 1e-12);
  }
}

TEST(TemporalDiversityTest, DegenerateAndSingletonPartitions) {
  const std::vector<double> r = {4.0, 9.0, 16.0};
  const std::vector<Date> same(3, D("2011-01-01"));
  const auto a = MakeTemporalDiversity(same, r);
  const auto b = MakeDiversity(Partition{{0, 0, 0}, 1}, r);
  const Ids all = {0, 1, 2};
  EXPECT_DOUBLE_EQ(a->Value(all), b->Value(all));
  const auto c = MakeTemporalDiversity({D("2011-01-01"), D("2011-01-02"), D("2011-01-03")}, r);
  EXPECT_DOUBLE_EQ(c->Value(all), 2.0 + 3.0 + 4.0);
}

TEST(TemporalDiversityTest, EqualsDiversityOverDatePartition) {
  const auto inst = MakeRandomInstance(12, 6);
  const auto r = inst.similarity->RowSums(TemporalModifier::None());
  const auto a = MakeTemporalDiversity(inst.dates, r);
  const auto b = MakeDiversity(PartitionByKey(inst.dates), r);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    Ids s;
    for (int i = 0; i < 12; ++i) {
      if (Bernoulli(rng, 0.5)) s.push_back(i);
    }
    EXPECT_EQ(a->Value(s), b->Value(s));
  }
}

// U of 5 sentences: d1 referenced by 3, d2 by 2.
Corpus FiveSentences() {
  Corpus c = CorpusFromDocuments({{"a", D("2011-01-01"), {"p", "q", "r"}}, {"b", D("2011-01-02"), {"s", "t"}}});
  return c;
}

TEST(DateRefTest, Examples) {
  const auto f = MakeDateRef(FiveSentences());
  EXPECT_EQ(f->Value(Ids{}), 0.0);
  EXPECT_EQ(f->Value(Ids{0}), 3.0);
  EXPECT_EQ(f->Value(Ids{0, 1}), 3.0);
  EXPECT_EQ(f->Value(Ids{0, 3}), 5.0);
  EXPECT_EQ(f->Marginal(Ids{0}, 2), 0.0);
}

TEST(DateRefTest, CountsAllReferencesOrOnlyAssignedDates) {
  Corpus c = FiveSentences();
  // Sentence 4 (dated d2) also refers to d1.
  c.sentences[4].referenced_dates = {D("2011-01-01"), D("2011-01-02")};
  EXPECT_EQ(MakeDateRef(c, DateRefMode::kAllReferences)->Value(Ids{0}), 4.0);
  EXPECT_EQ(MakeDateRef(c, DateRefMode::kAssignedDate)->Value(Ids{0}), 3.0);
  // A date referenced by nobody is worth nothing.
  c.sentences[3].date = D("2011-02-01");
  EXPECT_EQ(MakeDateRef(c, DateRefMode::kAllReferences)->Value(Ids{3}), 0.0);
}

TEST(DateRefTest, BruteForceCount) {
  const auto inst = MakeRandomInstance(12, 12);
  const DateRefFunction f(inst.dates, inst.references);
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Ids s;
    for (int i = 0; i < 12; ++i) {
      if (Bernoulli(rng, 0.4)) s.push_back(i);
    }
    std::set<Date> covered;
    for (int i : s) covered.insert(inst.dates[i]);
    double expected = 0.0;
    for (const Date d : covered) {
      for (const auto& refs : inst.references) {
        expected += std::count(refs.begin(), refs.end(), d) > 0 ? 1.0 : 0.0;
      }
    }
    EXPECT_EQ(f.Value(s), expected);
  }
}

TEST(OracleObjectiveTest, Additive) {
  const auto f = MakeOracle({0.2, 0.5});
  EXPECT_EQ(f->Value(Ids{}), 0.0);
  EXPECT_DOUBLE_EQ(f->Value(Ids{0, 1}), 0.7);
}

TEST(ComposeTest, Normalization) {
  const auto a = MakeOracle({1.0, 3.0});
  const auto b = MakeDiversity(Partition{{0, 0}, 1}, {4.0, 5.0});
  const auto one = ComposedObjective::Compose({a});
  EXPECT_DOUBLE_EQ(one.ValueOfGroundSet(), 1.0);
  const auto two = ComposedObjective::Compose({a, b});
  EXPECT_DOUBLE_EQ(two.ValueOfGroundSet(), 2.0);
  EXPECT_EQ(two.Value(Ids{}), 0.0);
  EXPECT_DOUBLE_EQ(two.Value(Ids{1}), 0.75 + std::sqrt(5.0) / 3.0);
}

TEST(ComposeTest, DropsZeroComponentsAndRejectsEmptyList) {
  const auto zero = MakeOracle({0.0, 0.0});
  const auto a = MakeOracle({1.0, 1.0});
  const auto f = ComposedObjective::Compose({a, zero});
  EXPECT_EQ(f.components().size(), 1u);
  EXPECT_EQ(f.dropped(), std::vector<std::string>{"oracle"});
  EXPECT_THROW(ComposedObjective::Compose({}), Error);
}

TEST(ComposeTest, TotalWithinComponentCount) {
  const auto inst = MakeRandomInstance(12, 21);
  const auto f = ComposedObjective::Compose(ShippedComponents(inst));
  Rng rng(6);
  for (int t = 0; t < 300; ++t) {
    Ids s;
    for (int i = 0; i < 12; ++i) {
      if (Bernoulli(rng, 0.5)) s.push_back(i);
    }
    const double v = f.Value(s);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, static_cast<double>(f.components().size()) + 1e-12);
  }
}

TEST(PropertyCheckTest, ShippedComponentsPass) {
  for (int i = 0; i < 5; ++i) {
    const auto inst = MakeRandomInstance(12, 100 + i);
    for (const auto& f : ShippedComponents(inst)) {
      const auto r = CheckMonotoneSubmodular(*f, 2000, i);
      EXPECT_TRUE(r.passed()) << f->name() << " " << r.max_submodularity_violation << " "
                              << r.max_monotonicity_violation;
    }
  }
}

TEST(PropertyCheckTest, DetectsSupermodularAndDecreasing) {
  const CallableSetFunction square("square", 10, [](std::span<const SentenceId> s) {
    return static_cast<double>(s.size() * s.size());
  });
  const auto r1 = CheckMonotoneSubmodular(square, 500, 1);
  EXPECT_FALSE(r1.submodular());
  EXPECT_TRUE(r1.monotone());
  const CallableSetFunction neg("neg", 10, [](std::span<const SentenceId> s) {
    return -static_cast<double>(s.size());
  });
  const auto r2 = CheckMonotoneSubmodular(neg, 500, 1);
  EXPECT_FALSE(r2.monotone());
  EXPECT_FALSE(r2.passed());
}

TEST(PropertyCheckTest, MarginalsAgreeWithValueDifferences) {
  for (int i = 0; i < 5; ++i) {
    const auto inst = MakeRandomInstance(12, 200 + i);
    auto components = ShippedComponents(inst);
    components.push_back(std::make_shared<ComposedObjective>(ComposedObjective::Compose(ShippedComponents(inst))));
    for (const auto& f : components) {
      EXPECT_LE(MaxMarginalInconsistency(*f, 1000, i), 1e-9) << f->name();
    }
  }
}

TEST(IncrementalStateTest, ValueTracksDirectEvaluation) {
  const auto inst = MakeRandomInstance(12, 33);
  for (const auto& f : ShippedComponents(inst)) {
    auto state = f->NewState();
    Ids s;
    for (int v : {3, 1, 3, 7, 0, 11}) {
      state->Add(v);
      s.push_back(v);
      EXPECT_NEAR(state->value(), f->Value(s), 1e-9) << f->name();
      EXPECT_EQ(state->Gain(v), 0.0);
    }
  }
}

}  // namespace
}  // namespace tlsum
