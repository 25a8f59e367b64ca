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

#ifndef TLSUM_SIMILARITY_H_
#define TLSUM_SIMILARITY_H_

#include <climits>
#include <cmath>
#include <memory>
#include <unordered_map>
#include <vector>

#include "tlsum/common.h"
#include "tlsum/date.h"
#include "tlsum/vectorspace.h"

namespace tlsum {

// Date-distance modification of a base similarity. Never increases it.
struct TemporalModifier {
  enum class Kind { kNone, kCutoff, kReweight };

  Kind kind = Kind::kNone;
  int cutoff_days = INT_MAX;

  static TemporalModifier None() { return {}; }
  // Zero beyond `days` apart.
  static TemporalModifier Cutoff(int days) { return {Kind::kCutoff, days}; }
  // Divides by g(gap) = sqrt(gap + 1).
  static TemporalModifier Reweight() { return {Kind::kReweight, INT_MAX}; }

  static double Penalty(int gap) { return std::sqrt(static_cast<double>(gap) + 1.0); }

  double Apply(double base, int gap) const {
    switch (kind) {
      case Kind::kNone:
        return base;
      case Kind::kCutoff:
        return gap <= cutoff_days ? base : 0.0;
      case Kind::kReweight:
        return base / Penalty(gap);
    }
    return base;
  }

  bool operator==(const TemporalModifier&) const = default;
};

inline double TemporalSimilarity(double base, int day_gap, TemporalModifier modifier) {
  return modifier.Apply(base, day_gap);
}

// Pairwise similarity over a dated ground set. The default aggregate
// implementations are the O(n^2) definitions; subclasses may override them
// with faster equivalent computations.
class SimilarityModel {
 public:
  virtual ~SimilarityModel() = default;

  virtual int size() const = 0;
  virtual Date date(SentenceId id) const = 0;
  // Base similarity in [0, 1].
  virtual double Similarity(SentenceId a, SentenceId b) const = 0;

  double Modified(SentenceId a, SentenceId b, TemporalModifier modifier) const {
    return modifier.Apply(Similarity(a, b), DayGap(date(a), date(b)));
  }

  // r(s) = sum over all v in U (self included) of the modified similarity.
  virtual std::vector<double> RowSums(TemporalModifier modifier) const {
    const int n = size();
    std::vector<double> sums(n, 0.0);
    for (int s = 0; s < n; ++s) {
      for (int v = 0; v < n; ++v) sums[s] += Modified(s, v, modifier);
    }
    return sums;
  }

  // mass[g] = sum of sim(s, t) over t != s with |d(s) - d(t)| == g, for
  // g in [0, max_gap].
  virtual std::vector<double> GapMass(SentenceId s, int max_gap) const {
    std::vector<double> mass(max_gap + 1, 0.0);
    for (int t = 0; t < size(); ++t) {
      if (t == s) continue;
      const int gap = DayGap(date(s), date(t));
      if (gap <= max_gap) mass[gap] += Similarity(s, t);
    }
    return mass;
  }
};

// Explicit matrix, mainly for small synthetic instances.
class DenseSimilarity : public SimilarityModel {
 public:
  DenseSimilarity(std::vector<std::vector<double>> matrix, std::vector<Date> dates)
      : matrix_(std::move(matrix)), dates_(std::move(dates)) {
    if (matrix_.size() != dates_.size()) throw Error("similarity matrix and dates differ in size");
    for (const auto& row : matrix_) {
      if (row.size() != matrix_.size()) throw Error("similarity matrix must be square");
      for (double x : row) {
        if (!(x >= 0.0)) throw Error("similarities must be non-negative");
      }
    }
  }

  int size() const override { return static_cast<int>(matrix_.size()); }
  Date date(SentenceId id) const override { return dates_[id]; }
  double Similarity(SentenceId a, SentenceId b) const override { return matrix_[a][b]; }

 private:
  std::vector<std::vector<double>> matrix_;
  std::vector<Date> dates_;
};

// Cosine similarity of sparse sentence vectors. Row sums and gap masses are
// computed through per-date sums of unit vectors, which is linear in the
// number of (sentence, date) pairs instead of quadratic in sentences.
class VectorSimilarity : public SimilarityModel {
 public:
  VectorSimilarity(const std::vector<SparseVector>& vectors, std::vector<Date> dates)
      : dates_(std::move(dates)) {
    if (vectors.size() != dates_.size()) throw Error("vectors and dates differ in size");
    unit_.reserve(vectors.size());
    for (const auto& v : vectors) unit_.push_back(v.Normalized());
    for (const Date d : dates_) distinct_dates_.push_back(d);
    std::sort(distinct_dates_.begin(), distinct_dates_.end());
    distinct_dates_.erase(std::unique(distinct_dates_.begin(), distinct_dates_.end()),
                          distinct_dates_.end());
    date_index_.reserve(dates_.size());
    for (const Date d : dates_) {
      date_index_.push_back(static_cast<int>(
          std::lower_bound(distinct_dates_.begin(), distinct_dates_.end(), d) -
          distinct_dates_.begin()));
    }
    // postings_[token] = per-date sums of unit-vector weights.
    std::unordered_map<TokenId, std::unordered_map<int, double>> acc;
    for (std::size_t i = 0; i < unit_.size(); ++i) {
      for (const auto& [t, w] : unit_[i].entries()) acc[t][date_index_[i]] += w;
    }
    for (auto& [t, per_date] : acc) {
      auto& list = postings_[t];
      list.assign(per_date.begin(), per_date.end());
      std::sort(list.begin(), list.end());
    }
  }

  int size() const override { return static_cast<int>(unit_.size()); }
  Date date(SentenceId id) const override { return dates_[id]; }
  double Similarity(SentenceId a, SentenceId b) const override {
    return std::clamp(unit_[a].Dot(unit_[b]), 0.0, 1.0);
  }

  std::vector<double> RowSums(TemporalModifier modifier) const override {
    const int n = size();
    std::vector<double> sums(n, 0.0);
    std::vector<double> per_date;
    for (int s = 0; s < n; ++s) {
      DotsByDate(s, per_date);
      double total = 0.0;
      for (std::size_t d = 0; d < distinct_dates_.size(); ++d) {
        if (per_date[d] == 0.0) continue;
        total += modifier.Apply(per_date[d], DayGap(dates_[s], distinct_dates_[d]));
      }
      sums[s] = total;
    }
    return sums;
  }

  std::vector<double> GapMass(SentenceId s, int max_gap) const override {
    std::vector<double> mass(max_gap + 1, 0.0);
    std::vector<double> per_date;
    DotsByDate(s, per_date);
    for (std::size_t d = 0; d < distinct_dates_.size(); ++d) {
      const int gap = DayGap(dates_[s], distinct_dates_[d]);
      if (gap <= max_gap) mass[gap] += per_date[d];
    }
    double self = 0.0;
    for (const auto& e : unit_[s].entries()) self += e.second * e.second;
    mass[0] = std::max(0.0, mass[0] - self);
    return mass;
  }

  const std::vector<SparseVector>& unit_vectors() const { return unit_; }

 private:
  void DotsByDate(SentenceId s, std::vector<double>& out) const {
    out.assign(distinct_dates_.size(), 0.0);
    for (const auto& [t, w] : unit_[s].entries()) {
      auto it = postings_.find(t);
      if (it == postings_.end()) continue;
      for (const auto& [d, cw] : it->second) out[d] += w * cw;
    }
  }

  std::vector<SparseVector> unit_;
  std::vector<Date> dates_;
  std::vector<Date> distinct_dates_;
  std::vector<int> date_index_;
  std::unordered_map<TokenId, std::vector<std::pair<int, double>>> postings_;
};

}  // namespace tlsum

#endif  // TLSUM_SIMILARITY_H_
