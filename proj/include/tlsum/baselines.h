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

// Unsupervised Chieu-style baseline (interest ranking with extent-based
// exclusion) and the ROUGE oracle.

#ifndef TLSUM_BASELINES_H_
#define TLSUM_BASELINES_H_

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tlsum/constraints.h"
#include "tlsum/corpus.h"
#include "tlsum/evaluation.h"
#include "tlsum/objectives.h"
#include "tlsum/optimizer.h"
#include "tlsum/similarity.h"

namespace tlsum {

inline constexpr int kChieuWindowDays = 10;
inline constexpr double kChieuExtentMass = 0.8;

struct RankedSentence {
  SentenceId id = 0;
  double interest = 0.0;
  int extent = 0;

  bool operator==(const RankedSentence&) const = default;
};

// Smallest w with mass[0..w] >= 0.8 * total; 0 when the total is 0.
inline int ChieuExtent(const std::vector<double>& gap_mass) {
  double interest = 0.0;
  for (double m : gap_mass) interest += m;
  if (!(interest > 0.0)) return 0;
  const double needed = kChieuExtentMass * interest;
  double cumulative = 0.0;
  for (std::size_t w = 0; w < gap_mass.size(); ++w) {
    cumulative += gap_mass[w];
    if (cumulative >= needed) return static_cast<int>(w);
  }
  return static_cast<int>(gap_mass.size()) - 1;
}

// Interest = similarity mass to other sentences at most 10 days away.
// Sorted by interest descending, then id.
inline std::vector<RankedSentence> ChieuRank(const SimilarityModel& sim) {
  std::vector<RankedSentence> ranked;
  ranked.reserve(sim.size());
  for (SentenceId s = 0; s < sim.size(); ++s) {
    const auto mass = sim.GapMass(s, kChieuWindowDays);
    double interest = 0.0;
    for (double m : mass) interest += m;
    ranked.push_back({s, interest, ChieuExtent(mass)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedSentence& a, const RankedSentence& b) {
    return a.interest > b.interest || (a.interest == b.interest && a.id < b.id);
  });
  return ranked;
}

// Walks the ranking and accepts s iff |d(s) - d(t)| > extent(t) for every
// accepted t. Returns accepted ids in acceptance order.
inline std::vector<SentenceId> ChieuSelect(const std::vector<RankedSentence>& ranked,
                                           const std::vector<Date>& dates,
                                           std::optional<int> max_dates = std::nullopt) {
  std::vector<SentenceId> accepted;
  std::vector<int> extents;
  for (const auto& r : ranked) {
    if (max_dates && static_cast<int>(accepted.size()) >= *max_dates) break;
    bool ok = true;
    for (std::size_t i = 0; i < accepted.size() && ok; ++i) {
      ok = DayGap(dates[r.id], dates[accepted[i]]) > extents[i];
    }
    if (!ok) continue;
    accepted.push_back(r.id);
    extents.push_back(r.extent);
  }
  return accepted;
}

inline Timeline ChieuTimeline(const Corpus& corpus, const SimilarityModel& sim,
                              std::optional<int> max_dates = std::nullopt) {
  if (corpus.size() == 0) return {};
  const auto selected = ChieuSelect(ChieuRank(sim), SentenceDates(corpus), max_dates);
  return TimelineFromSelection(corpus, selected);
}

// g_s = ROUGE-1 F1 of s against the reference summary of d(s), 0 if the
// reference has no entry that day.
inline std::vector<double> OracleGains(const Corpus& corpus, const Timeline& reference) {
  std::map<Date, std::vector<std::string>> ref_tokens;
  for (const auto& e : reference.entries) ref_tokens[e.date] = TokenizeAll(e.summary);
  std::vector<double> gains(corpus.size(), 0.0);
  for (const auto& s : corpus.sentences) {
    auto it = ref_tokens.find(s.date);
    if (it != ref_tokens.end()) gains[s.id] = RougeN(Tokenize(s.text), it->second, 1).f1;
  }
  return gains;
}

struct OracleResult {
  Timeline timeline;
  SelectionState state;
};

inline OracleResult OracleTimeline(const Corpus& corpus, const Timeline& reference,
                                   const IndependenceSystem& constraints) {
  const auto objective = MakeOracle(OracleGains(corpus, reference));
  OracleResult result;
  result.state = Greedy(*objective, constraints);
  result.timeline = TimelineFromSelection(corpus, result.state.selected);
  return result;
}

}  // namespace tlsum

#endif  // TLSUM_BASELINES_H_
