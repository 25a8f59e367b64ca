// Copyright 2026 The tlsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independence systems over sentence sets and empirical checks of the
// independence-system axioms and of the base-size ratio.

#ifndef TLSUM_CONSTRAINTS_H_
#define TLSUM_CONSTRAINTS_H_

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tlsum/common.h"
#include "tlsum/date.h"
#include "tlsum/vectorspace.h"

namespace tlsum {

// Incremental feasibility for a growing selection. Owned by the optimizer.
class FeasibilityTracker {
 public:
  virtual ~FeasibilityTracker() = default;
  // Whether S + v is feasible, where S is everything added so far.
  virtual bool CanAdd(SentenceId v) const = 0;
  virtual void Add(SentenceId v) = 0;
};

class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  virtual std::string name() const = 0;
  // Set-level definition. Duplicates are ignored.
  virtual bool Contains(std::span<const SentenceId> set) const = 0;
  virtual std::unique_ptr<FeasibilityTracker> NewTracker() const = 0;

  bool CanAdd(std::span<const SentenceId> set, SentenceId v) const {
    auto tracker = NewTracker();
    for (const SentenceId id : Canonicalize(set)) tracker->Add(id);
    return tracker->CanAdd(v);
  }
};

// |S| <= m.
class CardinalityConstraint : public IndependenceSystem {
 public:
  explicit CardinalityConstraint(int m) : m_(m) {
    if (m < 0) throw Error("cardinality bound must be non-negative");
  }

  std::string name() const override { return "cardinality(" + std::to_string(m_) + ")"; }
  bool Contains(std::span<const SentenceId> set) const override {
    return static_cast<int>(Canonicalize(set).size()) <= m_;
  }
  std::unique_ptr<FeasibilityTracker> NewTracker() const override {
    return std::make_unique<Tracker>(m_);
  }
  int m() const { return m_; }

 private:
  class Tracker : public FeasibilityTracker {
   public:
    explicit Tracker(int m) : m_(m) {}
    bool CanAdd(SentenceId v) const override {
      return members_.contains(v) || static_cast<int>(members_.size()) < m_;
    }
    void Add(SentenceId v) override { members_.insert(v); }

   private:
    int m_;
    std::unordered_set<SentenceId> members_;
  };

  int m_;
};

// Sum of word counts <= budget.
class KnapsackConstraint : public IndependenceSystem {
 public:
  KnapsackConstraint(int word_budget, std::vector<int> word_counts)
      : budget_(word_budget), words_(std::move(word_counts)) {
    if (budget_ < 0) throw Error("knapsack budget must be non-negative");
    for (int w : words_) {
      if (w < 0) throw Error("word counts must be non-negative");
    }
  }

  std::string name() const override { return "knapsack(" + std::to_string(budget_) + ")"; }
  bool Contains(std::span<const SentenceId> set) const override {
    long total = 0;
    for (const SentenceId s : Canonicalize(set)) total += words_[s];
    return total <= budget_;
  }
  std::unique_ptr<FeasibilityTracker> NewTracker() const override {
    return std::make_unique<Tracker>(*this);
  }

 private:
  class Tracker : public FeasibilityTracker {
   public:
    explicit Tracker(const KnapsackConstraint& c) : c_(c), member_(c.words_.size(), 0) {}
    bool CanAdd(SentenceId v) const override {
      return member_[v] || used_ + c_.words_[v] <= c_.budget_;
    }
    void Add(SentenceId v) override {
      if (member_[v]) return;
      member_[v] = 1;
      used_ += c_.words_[v];
    }

   private:
    const KnapsackConstraint& c_;
    std::vector<char> member_;
    long used_ = 0;
  };

  int budget_;
  std::vector<int> words_;
};

// At most `ell` distinct dates and at most `k` sentences per date.
class TlsConstraint : public IndependenceSystem {
 public:
  TlsConstraint(int ell, int k, const std::vector<Date>& dates)
      : ell_(ell), k_(k), date_of_(PartitionByKey(dates)) {
    if (ell < 1 || k < 1) throw Error("tls constraint needs ell >= 1 and k >= 1");
  }

  std::string name() const override {
    return "tls(ell=" + std::to_string(ell_) + ",k=" + std::to_string(k_) + ")";
  }
  bool Contains(std::span<const SentenceId> set) const override {
    std::unordered_map<int, int> per_date;
    for (const SentenceId s : Canonicalize(set)) ++per_date[date_of_.cluster_of[s]];
    if (static_cast<int>(per_date.size()) > ell_) return false;
    for (const auto& [d, count] : per_date) {
      if (count > k_) return false;
    }
    return true;
  }
  std::unique_ptr<FeasibilityTracker> NewTracker() const override {
    return std::make_unique<Tracker>(*this);
  }
  int ell() const { return ell_; }
  int k() const { return k_; }

 private:
  // Date-count map, O(1) per query.
  class Tracker : public FeasibilityTracker {
   public:
    explicit Tracker(const TlsConstraint& c)
        : c_(c), count_(c.date_of_.num_clusters, 0), member_(c.date_of_.cluster_of.size(), 0) {}
    bool CanAdd(SentenceId v) const override {
      if (member_[v]) return true;
      const int d = c_.date_of_.cluster_of[v];
      if (count_[d] == 0) return distinct_ < c_.ell_ && c_.k_ >= 1;
      return count_[d] < c_.k_;
    }
    void Add(SentenceId v) override {
      if (member_[v]) return;
      member_[v] = 1;
      const int d = c_.date_of_.cluster_of[v];
      if (count_[d]++ == 0) ++distinct_;
    }

   private:
    const TlsConstraint& c_;
    std::vector<int> count_;
    std::vector<char> member_;
    int distinct_ = 0;
  };

  int ell_;
  int k_;
  Partition date_of_;
};

// Intersection of independence systems; itself an independence system.
class AllOfConstraint : public IndependenceSystem {
 public:
  explicit AllOfConstraint(std::vector<std::shared_ptr<const IndependenceSystem>> parts)
      : parts_(std::move(parts)) {}

  std::string name() const override {
    std::string out = "all_of(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + parts_[i]->name();
    return out + ")";
  }
  bool Contains(std::span<const SentenceId> set) const override {
    for (const auto& p : parts_) {
      if (!p->Contains(set)) return false;
    }
    return true;
  }
  std::unique_ptr<FeasibilityTracker> NewTracker() const override {
    auto t = std::make_unique<Tracker>();
    for (const auto& p : parts_) t->parts.push_back(p->NewTracker());
    return t;
  }

 private:
  struct Tracker : public FeasibilityTracker {
    bool CanAdd(SentenceId v) const override {
      for (const auto& p : parts) {
        if (!p->CanAdd(v)) return false;
      }
      return true;
    }
    void Add(SentenceId v) override {
      for (auto& p : parts) p->Add(v);
    }
    std::vector<std::unique_ptr<FeasibilityTracker>> parts;
  };

  std::vector<std::shared_ptr<const IndependenceSystem>> parts_;
};

// ---------------------------------------------------------------------------
// Config form:
//   {"type":"tls","ell":N,"k":N} | {"type":"cardinality","m":N}
//   {"type":"knapsack","words":N} | {"type":"all_of","of":[...]}
// Omitted numeric fields are filled from the reference timeline parameters.

struct ConstraintSpec {
  enum class Type { kCardinality, kKnapsack, kTls, kAllOf };
  Type type = Type::kCardinality;
  std::optional<int> m;
  std::optional<int> words;
  std::optional<int> ell;
  std::optional<int> k;
  std::vector<ConstraintSpec> of;
};

inline ConstraintSpec ParseConstraintSpec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error("constraint spec needs a string \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  const auto number = [&j](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) throw Error(std::string("constraint field \"") + key + "\" must be an integer");
    return j[key].get<int>();
  };
  ConstraintSpec spec;
  if (type == "cardinality") {
    spec.type = ConstraintSpec::Type::kCardinality;
    spec.m = number("m");
  } else if (type == "knapsack") {
    spec.type = ConstraintSpec::Type::kKnapsack;
    spec.words = number("words");
  } else if (type == "tls") {
    spec.type = ConstraintSpec::Type::kTls;
    spec.ell = number("ell");
    spec.k = number("k");
  } else if (type == "all_of") {
    spec.type = ConstraintSpec::Type::kAllOf;
    if (!j.contains("of") || !j["of"].is_array()) throw Error("all_of needs an \"of\" array");
    for (const auto& part : j["of"]) spec.of.push_back(ParseConstraintSpec(part));
  } else {
    throw Error("unknown constraint type: " + type);
  }
  return spec;
}

struct ConstraintContext {
  std::vector<Date> dates;
  std::vector<int> word_counts;
  // Defaults for omitted fields.
  int m = 1;
  int ell = 1;
  int k = 1;
  int words = 0;
};

inline std::shared_ptr<const IndependenceSystem> BuildConstraint(const ConstraintSpec& spec,
                                                                 const ConstraintContext& ctx) {
  switch (spec.type) {
    case ConstraintSpec::Type::kCardinality:
      return std::make_shared<CardinalityConstraint>(spec.m.value_or(ctx.m));
    case ConstraintSpec::Type::kKnapsack:
      return std::make_shared<KnapsackConstraint>(spec.words.value_or(ctx.words), ctx.word_counts);
    case ConstraintSpec::Type::kTls:
      return std::make_shared<TlsConstraint>(spec.ell.value_or(ctx.ell), spec.k.value_or(ctx.k),
                                             ctx.dates);
    case ConstraintSpec::Type::kAllOf: {
      std::vector<std::shared_ptr<const IndependenceSystem>> parts;
      for (const auto& p : spec.of) parts.push_back(BuildConstraint(p, ctx));
      return std::make_shared<AllOfConstraint>(std::move(parts));
    }
  }
  throw Error("unreachable constraint type");
}

// ---------------------------------------------------------------------------
// Independence-system checks

// Samples feasible S (random growth through the tracker) and random T within
// S; returns false on the first infeasible T or if the empty set is
// infeasible.
inline bool VerifyDownwardClosure(const IndependenceSystem& system, int ground_size, int trials,
                                  std::uint64_t seed) {
  if (!system.Contains({})) return false;
  Rng rng(seed);
  std::vector<SentenceId> order(ground_size);
  for (int i = 0; i < ground_size; ++i) order[i] = i;
  for (int t = 0; t < trials; ++t) {
    Shuffle(order, rng);
    // Grow a feasible set of random target size.
    const auto target = UniformIndex(rng, static_cast<std::uint64_t>(ground_size) + 1);
    std::vector<SentenceId> s;
    for (const SentenceId v : order) {
      if (s.size() >= target) break;
      auto with = s;
      with.push_back(v);
      if (system.Contains(with)) s = std::move(with);
    }
    if (!system.Contains(s)) continue;
    std::vector<SentenceId> sub;
    for (const SentenceId v : s) {
      if (Bernoulli(rng, 0.5)) sub.push_back(v);
    }
    if (!system.Contains(sub)) return false;
  }
  return true;
}

struct BaseRatioReport {
  double max_ratio = 1.0;
  std::vector<SentenceId> worst_subset;
  int p_bound = 1;
  std::size_t subsets_examined = 0;
};

inline constexpr int kMaxBaseRatioUniverse = 16;
inline constexpr int kBaseRatioExhaustiveLimit = 12;  // 2^12 subsets X

// For subsets X of U, enumerates the bases (maximal feasible subsets) of X
// and records upper rank / lower rank. All X when |U| <= 12, otherwise 4096
// sampled X if `allow_sampling`.
inline BaseRatioReport EstimateBaseRatio(const IndependenceSystem& system, int ground_size,
                                         bool allow_sampling = false, std::uint64_t seed = 0) {
  if (ground_size > kMaxBaseRatioUniverse) {
    throw Error("base ratio enumeration supports at most " +
                std::to_string(kMaxBaseRatioUniverse) + " elements");
  }
  if (ground_size > kBaseRatioExhaustiveLimit && !allow_sampling) {
    throw Error("universe too large for exhaustive base enumeration; enable sampling");
  }
  const std::uint64_t full = std::uint64_t{1} << ground_size;
  std::vector<char> feasible(full);
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    feasible[mask] = system.Contains(MaskToIds(mask)) ? 1 : 0;
  }
  std::vector<std::uint64_t> subsets;
  if (ground_size <= kBaseRatioExhaustiveLimit) {
    subsets.resize(full);
    for (std::uint64_t x = 0; x < full; ++x) subsets[x] = x;
  } else {
    Rng rng(seed);
    for (int i = 0; i < (1 << kBaseRatioExhaustiveLimit); ++i) subsets.push_back(UniformIndex(rng, full));
  }
  BaseRatioReport report;
  for (const std::uint64_t x : subsets) {
    ++report.subsets_examined;
    int lower = INT_MAX;
    int upper = 0;
    // Submasks of x, including x itself and the empty set.
    for (std::uint64_t a = x;; a = (a - 1) & x) {
      if (feasible[a]) {
        bool maximal = true;
        for (std::uint64_t rest = x & ~a; rest; rest &= rest - 1) {
          if (feasible[a | (rest & -rest)]) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          const int size = std::popcount(a);
          lower = std::min(lower, size);
          upper = std::max(upper, size);
        }
      }
      if (a == 0) break;
    }
    if (lower == 0 || lower == INT_MAX) continue;
    const double ratio = static_cast<double>(upper) / lower;
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_subset = MaskToIds(x);
    }
  }
  report.p_bound = static_cast<int>(std::ceil(report.max_ratio - 1e-12));
  return report;
}

}  // namespace tlsum

#endif  // TLSUM_CONSTRAINTS_H_
