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

// Greedy maximization of a set function over an independence system.
//
// Greedy() follows the textbook loop: K = U; take the element of K with the
// largest marginal gain, add it to S if S + s stays feasible, and remove it
// from K either way. Ties go to the smaller sentence id. Two
// output-preserving shortcuts are applied: gains are only recomputed after S
// changes, and the loop ends once no remaining element can be added.
//
// LazyGreedy() produces exactly the same selection with stale upper bounds
// in a priority queue, which is valid for submodular objectives.

#ifndef TLSUM_OPTIMIZER_H_
#define TLSUM_OPTIMIZER_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <queue>
#include <thread>
#include <vector>

#include "json.hpp"
#include "tlsum/common.h"
#include "tlsum/constraints.h"
#include "tlsum/objectives.h"

namespace tlsum {

struct SelectionState {
  std::vector<SentenceId> selected;  // in order of selection
  double objective_value = 0.0;
  std::vector<double> gains;  // accepted marginal gain per step
  std::size_t marginal_evaluations = 0;
};

struct TraceEvent {
  int step = 0;
  SentenceId id = 0;
  double gain = 0.0;
  bool feasible = false;
};

struct GreedyOptions {
  // Threads for the marginal-gain scan; results do not depend on it.
  int num_threads = 1;
  std::vector<TraceEvent>* trace = nullptr;
};

namespace internal {

// (gain, -id) lexicographic order.
inline bool Better(double gain_a, SentenceId a, double gain_b, SentenceId b) {
  return gain_a > gain_b || (gain_a == gain_b && a < b);
}

inline void ComputeGains(const IncrementalState& state, const std::vector<SentenceId>& candidates,
                         std::vector<double>& gains, int num_threads) {
  const std::size_t n = candidates.size();
  constexpr std::size_t kMinPerThread = 1024;
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(num_threads, n / kMinPerThread));
  if (threads <= 1) {
    for (const SentenceId c : candidates) gains[c] = state.Gain(c);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::size_t end = std::min(n, (t + 1) * chunk);
      for (std::size_t i = t * chunk; i < end; ++i) gains[candidates[i]] = state.Gain(candidates[i]);
    });
  }
  for (auto& w : workers) w.join();
}

inline bool AnyAddable(const FeasibilityTracker& tracker, const std::vector<SentenceId>& ids) {
  for (const SentenceId id : ids) {
    if (tracker.CanAdd(id)) return true;
  }
  return false;
}

}  // namespace internal

inline SelectionState Greedy(const SetFunction& f, const IndependenceSystem& constraints,
                             const GreedyOptions& options = {}) {
  const int n = f.ground_size();
  SelectionState result;
  auto state = f.NewState();
  auto tracker = constraints.NewTracker();
  std::vector<SentenceId> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  std::vector<double> gains(n, 0.0);
  bool stale = true;
  int step = 0;
  if (!internal::AnyAddable(*tracker, remaining)) remaining.clear();
  while (!remaining.empty()) {
    if (stale) {
      internal::ComputeGains(*state, remaining, gains, options.num_threads);
      result.marginal_evaluations += remaining.size();
      stale = false;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (internal::Better(gains[remaining[i]], remaining[i], gains[remaining[best]],
                           remaining[best])) {
        best = i;
      }
    }
    const SentenceId s = remaining[best];
    const bool feasible = tracker->CanAdd(s);
    if (options.trace) options.trace->push_back({step, s, gains[s], feasible});
    ++step;
    remaining[best] = remaining.back();
    remaining.pop_back();
    if (feasible) {
      state->Add(s);
      tracker->Add(s);
      result.selected.push_back(s);
      result.gains.push_back(gains[s]);
      stale = true;
      if (!internal::AnyAddable(*tracker, remaining)) break;
    }
  }
  result.objective_value = state->value();
  return result;
}

inline SelectionState LazyGreedy(const SetFunction& f, const IndependenceSystem& constraints,
                                 const GreedyOptions& options = {}) {
  struct Entry {
    double bound;
    SentenceId id;
    int version;
  };
  // Max-heap on (bound, -id).
  const auto worse = [](const Entry& a, const Entry& b) {
    return internal::Better(b.bound, b.id, a.bound, a.id);
  };
  const int n = f.ground_size();
  SelectionState result;
  auto state = f.NewState();
  auto tracker = constraints.NewTracker();

  std::vector<SentenceId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<double> initial(n, 0.0);
  internal::ComputeGains(*state, all, initial, options.num_threads);
  result.marginal_evaluations += n;
  std::vector<Entry> heap;
  heap.reserve(n);
  for (int i = 0; i < n; ++i) heap.push_back({initial[i], i, 0});
  std::make_heap(heap.begin(), heap.end(), worse);

  int version = 0;
  int step = 0;
  const auto any_addable = [&] {
    for (const auto& e : heap) {
      if (tracker->CanAdd(e.id)) return true;
    }
    return false;
  };
  if (!any_addable()) heap.clear();
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    Entry top = heap.back();
    heap.pop_back();
    if (top.version != version) {
      top.bound = state->Gain(top.id);
      top.version = version;
      ++result.marginal_evaluations;
      heap.push_back(top);
      std::push_heap(heap.begin(), heap.end(), worse);
      continue;
    }
    const bool feasible = tracker->CanAdd(top.id);
    if (options.trace) options.trace->push_back({step, top.id, top.bound, feasible});
    ++step;
    if (feasible) {
      state->Add(top.id);
      tracker->Add(top.id);
      result.selected.push_back(top.id);
      result.gains.push_back(top.bound);
      ++version;
      if (!any_addable()) break;
    }
  }
  result.objective_value = state->value();
  return result;
}

inline constexpr int kMaxExhaustiveGroundSize = 18;

// Maximizer over all feasible subsets; exact ties go to the lexicographically
// smallest sorted id list.
inline SelectionState ExhaustiveOptimum(const SetFunction& f, const IndependenceSystem& constraints) {
  const int n = f.ground_size();
  if (n > kMaxExhaustiveGroundSize) {
    throw Error("exhaustive search supports at most " + std::to_string(kMaxExhaustiveGroundSize) +
                " elements, got " + std::to_string(n));
  }
  SelectionState best;
  best.objective_value = -std::numeric_limits<double>::infinity();
  const std::uint64_t full = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    const auto ids = MaskToIds(mask);
    if (!constraints.Contains(ids)) continue;
    const double value = f.Value(ids);
    ++best.marginal_evaluations;
    if (value > best.objective_value ||
        (value == best.objective_value && ids < best.selected)) {
      best.objective_value = value;
      best.selected = ids;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Approximation-ratio verification

struct ProblemInstance {
  std::uint64_t seed = 0;
  std::shared_ptr<const SetFunction> objective;
  std::shared_ptr<const IndependenceSystem> constraint;
};

struct GuaranteeReport {
  double bound = 0.0;  // 1 / (k + 1)
  double min_ratio = 1.0;
  double mean_ratio = 1.0;
  std::size_t instances = 0;
  std::vector<std::uint64_t> violating_seeds;

  bool passed() const { return violating_seeds.empty(); }
};

// greedy / optimum per instance, optimum from ExhaustiveOptimum. An optimum
// of zero counts as ratio 1.
inline GuaranteeReport GuaranteeRatio(const std::vector<ProblemInstance>& batch, int k) {
  GuaranteeReport report;
  report.bound = 1.0 / (k + 1);
  double sum = 0.0;
  for (const auto& inst : batch) {
    const auto greedy = Greedy(*inst.objective, *inst.constraint);
    const auto optimum = ExhaustiveOptimum(*inst.objective, *inst.constraint);
    const double ratio =
        optimum.objective_value > 0.0 ? greedy.objective_value / optimum.objective_value : 1.0;
    report.min_ratio = report.instances == 0 ? ratio : std::min(report.min_ratio, ratio);
    sum += ratio;
    ++report.instances;
    if (ratio < report.bound - kPropertyTolerance) report.violating_seeds.push_back(inst.seed);
  }
  if (report.instances > 0) report.mean_ratio = sum / static_cast<double>(report.instances);
  return report;
}

inline void WriteTraceJsonl(std::ostream& out, const std::vector<TraceEvent>& trace) {
  for (const auto& e : trace) {
    out << nlohmann::json{{"step", e.step}, {"id", e.id}, {"gain", e.gain}, {"feasible", e.feasible}}
               .dump()
        << '\n';
  }
}

}  // namespace tlsum

#endif  // TLSUM_OPTIMIZER_H_
