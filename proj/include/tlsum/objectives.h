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

// Monotone submodular set functions over a sentence ground set and their
// normalized unweighted sum.
//
// Each function has two independent evaluation paths: Value() applies the
// closed-form definition to a whole set, while NewState() returns an
// incremental evaluator whose Gain() is used by the optimizers. The property
// checks at the bottom of this file compare the two.

#ifndef TLSUM_OBJECTIVES_H_
#define TLSUM_OBJECTIVES_H_

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlsum/common.h"
#include "tlsum/corpus.h"
#include "tlsum/date.h"
#include "tlsum/similarity.h"
#include "tlsum/vectorspace.h"

namespace tlsum {

// Incremental evaluator of f(S) for a growing S.
class IncrementalState {
 public:
  virtual ~IncrementalState() = default;

  // f(S + v) - f(S); zero if v is already in S. Safe to call concurrently.
  virtual double Gain(SentenceId v) const = 0;
  virtual void Add(SentenceId v) = 0;
  virtual double value() const = 0;
};

class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int ground_size() const = 0;
  virtual std::string name() const = 0;
  // Direct evaluation. Duplicates in `set` are ignored.
  virtual double Value(std::span<const SentenceId> set) const = 0;
  virtual std::unique_ptr<IncrementalState> NewState() const = 0;

  double Marginal(std::span<const SentenceId> set, SentenceId v) const {
    auto state = NewState();
    for (const SentenceId id : Canonicalize(set)) state->Add(id);
    return state->Gain(v);
  }

  double ValueOfGroundSet() const {
    std::vector<SentenceId> all(ground_size());
    for (int i = 0; i < ground_size(); ++i) all[i] = i;
    return Value(all);
  }
};

namespace internal {

class MembershipState : public IncrementalState {
 protected:
  explicit MembershipState(int n) : member_(n, 0) {}

  bool Contains(SentenceId v) const { return member_[v] != 0; }
  // Returns false if v was already present.
  bool Mark(SentenceId v) {
    if (member_[v]) return false;
    member_[v] = 1;
    return true;
  }

  double value_ = 0.0;

 public:
  double value() const override { return value_; }

 private:
  std::vector<char> member_;
};

}  // namespace internal

// f(S) = sum of w(s). Coverage with a fixed similarity and the ROUGE oracle
// are both of this form.
class ModularFunction : public SetFunction {
 public:
  ModularFunction(std::string name, std::vector<double> weights)
      : name_(std::move(name)), weights_(std::move(weights)) {
    for (double w : weights_) {
      if (!(w >= 0.0)) throw Error(name_ + ": weights must be non-negative");
    }
  }

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  std::string name() const override { return name_; }
  double Value(std::span<const SentenceId> set) const override {
    double total = 0.0;
    for (const SentenceId s : Canonicalize(set)) total += weights_[s];
    return total;
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(*this);
  }
  const std::vector<double>& weights() const { return weights_; }

 private:
  class State : public internal::MembershipState {
   public:
    explicit State(const ModularFunction& f) : MembershipState(f.ground_size()), f_(f) {}
    double Gain(SentenceId v) const override { return Contains(v) ? 0.0 : f_.weights_[v]; }
    void Add(SentenceId v) override {
      if (Mark(v)) value_ += f_.weights_[v];
    }

   private:
    const ModularFunction& f_;
  };

  std::string name_;
  std::vector<double> weights_;
};

// f(S) = sum over clusters P of sqrt(sum of r(s) for s in P and S).
class PartitionRewardFunction : public SetFunction {
 public:
  PartitionRewardFunction(std::string name, Partition partition, std::vector<double> rewards)
      : name_(std::move(name)), partition_(std::move(partition)), rewards_(std::move(rewards)) {
    if (partition_.cluster_of.size() != rewards_.size()) {
      throw Error(name_ + ": partition and rewards differ in size");
    }
    for (double r : rewards_) {
      if (!(r >= 0.0)) throw Error(name_ + ": negative singleton reward");
    }
    for (int c : partition_.cluster_of) {
      if (c < 0 || c >= partition_.num_clusters) throw Error(name_ + ": cluster index out of range");
    }
  }

  int ground_size() const override { return static_cast<int>(rewards_.size()); }
  std::string name() const override { return name_; }
  double Value(std::span<const SentenceId> set) const override {
    std::map<int, double> mass;
    for (const SentenceId s : Canonicalize(set)) mass[partition_.cluster_of[s]] += rewards_[s];
    double total = 0.0;
    for (const auto& [cluster, m] : mass) total += std::sqrt(m);
    return total;
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(*this);
  }
  const Partition& partition() const { return partition_; }
  const std::vector<double>& rewards() const { return rewards_; }

 private:
  class State : public internal::MembershipState {
   public:
    explicit State(const PartitionRewardFunction& f)
        : MembershipState(f.ground_size()), f_(f), mass_(f.partition_.num_clusters, 0.0) {}
    double Gain(SentenceId v) const override {
      if (Contains(v)) return 0.0;
      const double m = mass_[f_.partition_.cluster_of[v]];
      return std::sqrt(m + f_.rewards_[v]) - std::sqrt(m);
    }
    void Add(SentenceId v) override {
      if (!Mark(v)) return;
      const int c = f_.partition_.cluster_of[v];
      value_ += std::sqrt(mass_[c] + f_.rewards_[v]) - std::sqrt(mass_[c]);
      mass_[c] += f_.rewards_[v];
    }

   private:
    const PartitionRewardFunction& f_;
    std::vector<double> mass_;
  };

  std::string name_;
  Partition partition_;
  std::vector<double> rewards_;
};

// f(S) = sum over distinct dates d in d(S) of the number of ground-set
// sentences referring to d.
class DateRefFunction : public SetFunction {
 public:
  // sentence_dates[s] = d(s); references[u] = dates sentence u refers to.
  DateRefFunction(std::vector<Date> sentence_dates,
                  const std::vector<std::vector<Date>>& references)
      : dates_(std::move(sentence_dates)) {
    if (dates_.size() != references.size()) throw Error("dateref: size mismatch");
    std::unordered_map<Date, double> counts;
    for (const auto& refs : references) {
      for (const Date d : Canonical(refs)) counts[d] += 1.0;
    }
    date_key_ = PartitionByKey(dates_);
    date_weight_.assign(date_key_.num_clusters, 0.0);
    for (std::size_t s = 0; s < dates_.size(); ++s) {
      auto it = counts.find(dates_[s]);
      date_weight_[date_key_.cluster_of[s]] = it == counts.end() ? 0.0 : it->second;
    }
  }

  int ground_size() const override { return static_cast<int>(dates_.size()); }
  std::string name() const override { return "dateref"; }
  double Value(std::span<const SentenceId> set) const override {
    std::map<Date, double> covered;
    for (const SentenceId s : set) covered[dates_[s]] = date_weight_[date_key_.cluster_of[s]];
    double total = 0.0;
    for (const auto& [d, w] : covered) total += w;
    return total;
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(*this);
  }
  // Number of ground-set sentences referring to the date of s.
  double DateWeightOf(SentenceId s) const { return date_weight_[date_key_.cluster_of[s]]; }

 private:
  static std::vector<Date> Canonical(std::vector<Date> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  class State : public IncrementalState {
   public:
    explicit State(const DateRefFunction& f) : f_(f), covered_(f.date_key_.num_clusters, 0) {}
    double Gain(SentenceId v) const override {
      const int d = f_.date_key_.cluster_of[v];
      return covered_[d] ? 0.0 : f_.date_weight_[d];
    }
    void Add(SentenceId v) override {
      const int d = f_.date_key_.cluster_of[v];
      if (covered_[d]) return;
      covered_[d] = 1;
      value_ += f_.date_weight_[d];
    }
    double value() const override { return value_; }

   private:
    const DateRefFunction& f_;
    std::vector<char> covered_;
    double value_ = 0.0;
  };

  std::vector<Date> dates_;
  Partition date_key_;
  std::vector<double> date_weight_;
};

// Arbitrary set function given as a callable; gains are recomputed from
// scratch. Used for property-check fixtures and fault injection.
class CallableSetFunction : public SetFunction {
 public:
  using Fn = std::function<double(std::span<const SentenceId>)>;

  CallableSetFunction(std::string name, int ground_size, Fn fn)
      : name_(std::move(name)), n_(ground_size), fn_(std::move(fn)) {}

  int ground_size() const override { return n_; }
  std::string name() const override { return name_; }
  double Value(std::span<const SentenceId> set) const override {
    const auto canonical = Canonicalize(set);
    return fn_(canonical);
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(*this);
  }

 private:
  class State : public IncrementalState {
   public:
    explicit State(const CallableSetFunction& f) : f_(f) {}
    double Gain(SentenceId v) const override {
      if (std::find(set_.begin(), set_.end(), v) != set_.end()) return 0.0;
      auto with = set_;
      with.push_back(v);
      return f_.Value(with) - value_;
    }
    void Add(SentenceId v) override {
      if (std::find(set_.begin(), set_.end(), v) != set_.end()) return;
      set_.push_back(v);
      value_ = f_.Value(set_);
    }
    double value() const override { return value_; }

   private:
    const CallableSetFunction& f_;
    std::vector<SentenceId> set_;
    double value_ = 0.0;
  };

  std::string name_;
  int n_;
  Fn fn_;
};

// ---------------------------------------------------------------------------
// Component factories

// f_Cov(S) = sum_{s in S} sum_{v in U} sim(s, v) under `modifier`. The row
// sums are computed once here.
inline std::shared_ptr<ModularFunction> MakeCoverage(const SimilarityModel& sim,
                                                     TemporalModifier modifier) {
  std::string name = "coverage";
  if (modifier.kind == TemporalModifier::Kind::kCutoff) name += "+cutoff";
  if (modifier.kind == TemporalModifier::Kind::kReweight) name += "+reweight";
  return std::make_shared<ModularFunction>(name, sim.RowSums(modifier));
}

// f_Div over a semantic partition.
inline std::shared_ptr<PartitionRewardFunction> MakeDiversity(Partition partition,
                                                              std::vector<double> rewards) {
  return std::make_shared<PartitionRewardFunction>("diversity", std::move(partition),
                                                   std::move(rewards));
}

// f_TempDiv: same form as f_Div over the partition induced by sentence dates.
inline std::shared_ptr<PartitionRewardFunction> MakeTemporalDiversity(
    const std::vector<Date>& dates, std::vector<double> rewards) {
  return std::make_shared<PartitionRewardFunction>("tempdiv", PartitionByKey(dates),
                                                   std::move(rewards));
}

enum class DateRefMode {
  kAllReferences,  // every expression in the sentence, or its fallback date
  kAssignedDate,   // only d(u)
};

inline std::shared_ptr<DateRefFunction> MakeDateRef(const Corpus& corpus,
                                                    DateRefMode mode = DateRefMode::kAllReferences) {
  std::vector<std::vector<Date>> refs;
  refs.reserve(corpus.size());
  for (const auto& s : corpus.sentences) {
    if (mode == DateRefMode::kAssignedDate) {
      refs.push_back({s.date});
    } else {
      refs.push_back(s.referenced_dates.empty() ? std::vector<Date>{s.date} : s.referenced_dates);
    }
  }
  return std::make_shared<DateRefFunction>(SentenceDates(corpus), refs);
}

// f_Oracle(S) = sum of per-sentence gains.
inline std::shared_ptr<ModularFunction> MakeOracle(std::vector<double> gains) {
  return std::make_shared<ModularFunction>("oracle", std::move(gains));
}

// ---------------------------------------------------------------------------
// Normalized unweighted sum

class ComposedObjective : public SetFunction {
 public:
  // normalizer_i = f_i(U). Components with f_i(U) = 0 are dropped and listed
  // in dropped().
  static ComposedObjective Compose(std::vector<std::shared_ptr<const SetFunction>> components) {
    if (components.empty()) throw Error("compose: empty component list");
    ComposedObjective out;
    out.n_ = components.front()->ground_size();
    for (auto& c : components) {
      if (c->ground_size() != out.n_) throw Error("compose: components over different ground sets");
      const double full = c->ValueOfGroundSet();
      if (!(full > 0.0)) {
        out.dropped_.push_back(c->name());
        continue;
      }
      out.components_.push_back(std::move(c));
      out.normalizers_.push_back(full);
    }
    return out;
  }

  int ground_size() const override { return n_; }
  std::string name() const override {
    std::string joined;
    for (const auto& c : components_) joined += (joined.empty() ? "" : "+") + c->name();
    return joined.empty() ? "empty" : joined;
  }
  double Value(std::span<const SentenceId> set) const override {
    double total = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      total += components_[i]->Value(set) / normalizers_[i];
    }
    return total;
  }
  std::unique_ptr<IncrementalState> NewState() const override {
    return std::make_unique<State>(*this);
  }

  const std::vector<std::shared_ptr<const SetFunction>>& components() const { return components_; }
  const std::vector<double>& normalizers() const { return normalizers_; }
  const std::vector<std::string>& dropped() const { return dropped_; }

 private:
  ComposedObjective() = default;

  class State : public IncrementalState {
   public:
    explicit State(const ComposedObjective& f) : f_(f) {
      for (const auto& c : f.components_) states_.push_back(c->NewState());
    }
    double Gain(SentenceId v) const override {
      double total = 0.0;
      for (std::size_t i = 0; i < states_.size(); ++i) {
        total += states_[i]->Gain(v) / f_.normalizers_[i];
      }
      return total;
    }
    void Add(SentenceId v) override {
      for (auto& s : states_) s->Add(v);
    }
    double value() const override {
      double total = 0.0;
      for (std::size_t i = 0; i < states_.size(); ++i) {
        total += states_[i]->value() / f_.normalizers_[i];
      }
      return total;
    }

   private:
    const ComposedObjective& f_;
    std::vector<std::unique_ptr<IncrementalState>> states_;
  };

  int n_ = 0;
  std::vector<std::shared_ptr<const SetFunction>> components_;
  std::vector<double> normalizers_;
  std::vector<std::string> dropped_;
};

// ---------------------------------------------------------------------------
// Property checks

struct SubmodularityReport {
  int trials = 0;
  double max_submodularity_violation = 0.0;
  double max_monotonicity_violation = 0.0;

  bool submodular() const { return max_submodularity_violation <= kPropertyTolerance; }
  bool monotone() const { return max_monotonicity_violation <= kPropertyTolerance; }
  bool passed() const { return submodular() && monotone(); }
};

// Samples A subset B strict-subset U and v outside B; measures violations of
// f(A+v) - f(A) >= f(B+v) - f(B) and of f(A) <= f(B), using Value() only.
inline SubmodularityReport CheckMonotoneSubmodular(const SetFunction& f, int trials,
                                                   std::uint64_t seed) {
  const int n = f.ground_size();
  if (n < 2) throw Error("property check needs a ground set of at least 2 elements");
  Rng rng(seed);
  SubmodularityReport report;
  report.trials = trials;
  std::vector<SentenceId> a, b, outside;
  for (int t = 0; t < trials; ++t) {
    a.clear();
    b.clear();
    outside.clear();
    for (int i = 0; i < n; ++i) (Bernoulli(rng, 0.5) ? b : outside).push_back(i);
    if (outside.empty()) {
      const auto drop = UniformIndex(rng, b.size());
      outside.push_back(b[drop]);
      b.erase(b.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    const SentenceId v = outside[UniformIndex(rng, outside.size())];
    for (const SentenceId x : b) {
      if (Bernoulli(rng, 0.5)) a.push_back(x);
    }
    const double fa = f.Value(a);
    const double fb = f.Value(b);
    a.push_back(v);
    b.push_back(v);
    const double gain_a = f.Value(a) - fa;
    const double gain_b = f.Value(b) - fb;
    report.max_submodularity_violation =
        std::max(report.max_submodularity_violation, gain_b - gain_a);
    report.max_monotonicity_violation = std::max(report.max_monotonicity_violation, fa - fb);
  }
  return report;
}

// Largest |Marginal(S, s) - (Value(S + s) - Value(S))| over random (S, s).
inline double MaxMarginalInconsistency(const SetFunction& f, int trials, std::uint64_t seed) {
  const int n = f.ground_size();
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<SentenceId> set;
    for (int i = 0; i < n; ++i) {
      if (Bernoulli(rng, 0.4)) set.push_back(i);
    }
    Shuffle(set, rng);
    const auto v = static_cast<SentenceId>(UniformIndex(rng, n));
    const double direct = f.Value(set);
    auto with = set;
    with.push_back(v);
    const double expected = f.Value(with) - direct;
    worst = std::max(worst, std::abs(f.Marginal(set, v) - expected));
  }
  return worst;
}

}  // namespace tlsum

#endif  // TLSUM_OBJECTIVES_H_
