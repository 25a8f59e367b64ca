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

// Timeline evaluation: ROUGE-N in three temporal variants, date selection F1,
// corpus statistics and a paired approximate randomization test.
//
// All ROUGE variants are micro-averaged: n-gram overlaps and n-gram totals are
// summed first and P/R/F1 are computed from the sums. Daily summaries are
// tokenized with the shared tokenizer; no stemming, no stopword removal.
//
//   concat     every daily summary concatenated in date order
//   agreement  overlap only between summaries of identical dates
//   align+ m:1 each predicted date is aligned to the reference date with the
//              largest ROUGE-1 F1 x 1/(1 + day distance); several predicted
//              dates may share a reference date, in which case their n-gram
//              counts are pooled before clipping against that reference.
//              Pairs with zero content score are not aligned.
//
// In agreement and align+ m:1 the totals always include every predicted and
// every reference summary, matched or not.

#ifndef TLSUM_EVALUATION_H_
#define TLSUM_EVALUATION_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlsum/common.h"
#include "tlsum/corpus.h"
#include "tlsum/tokenizer.h"

namespace tlsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int n = 1;
};

using NGramCounts = std::unordered_map<std::string, int>;

inline NGramCounts CountNGrams(const std::vector<std::string>& tokens, int n) {
  NGramCounts counts;
  if (n < 1 || tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

inline long TotalCount(const NGramCounts& counts) {
  long total = 0;
  for (const auto& [g, c] : counts) total += c;
  return total;
}

inline long ClippedOverlap(const NGramCounts& a, const NGramCounts& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  long overlap = 0;
  for (const auto& [g, c] : small) {
    auto it = large.find(g);
    if (it != large.end()) overlap += std::min(c, it->second);
  }
  return overlap;
}

// Micro-average accumulator.
struct RougeCounts {
  double overlap = 0.0;
  double pred_total = 0.0;
  double ref_total = 0.0;

  RougeScore Score(int n) const {
    RougeScore s;
    s.n = n;
    s.precision = pred_total > 0.0 ? overlap / pred_total : 0.0;
    s.recall = ref_total > 0.0 ? overlap / ref_total : 0.0;
    s.f1 = s.precision + s.recall > 0.0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    return s;
  }
};

inline RougeScore RougeN(const std::vector<std::string>& pred_tokens,
                         const std::vector<std::string>& ref_tokens, int n) {
  if (n != 1 && n != 2) throw Error("ROUGE order must be 1 or 2");
  const auto p = CountNGrams(pred_tokens, n);
  const auto r = CountNGrams(ref_tokens, n);
  RougeCounts counts;
  counts.overlap = static_cast<double>(ClippedOverlap(p, r));
  counts.pred_total = static_cast<double>(TotalCount(p));
  counts.ref_total = static_cast<double>(TotalCount(r));
  return counts.Score(n);
}

inline RougeScore RougeN(std::string_view pred, std::string_view ref, int n) {
  return RougeN(Tokenize(pred), Tokenize(ref), n);
}

namespace internal {

inline std::vector<std::string> TimelineTokens(const Timeline& t) {
  std::vector<std::string> tokens;
  for (const auto& e : t.entries) {
    auto part = TokenizeAll(e.summary);
    tokens.insert(tokens.end(), part.begin(), part.end());
  }
  return tokens;
}

struct DailyCounts {
  Date date;
  std::vector<std::string> tokens;
  NGramCounts ngrams;
};

inline std::vector<DailyCounts> PerDay(const Timeline& t, int n) {
  std::vector<DailyCounts> days;
  for (const auto& e : t.entries) {
    DailyCounts d;
    d.date = e.date;
    d.tokens = TokenizeAll(e.summary);
    d.ngrams = CountNGrams(d.tokens, n);
    days.push_back(std::move(d));
  }
  return days;
}

inline void CheckOrder(int n) {
  if (n != 1 && n != 2) throw Error("ROUGE order must be 1 or 2");
}

}  // namespace internal

inline RougeScore ConcatRouge(const Timeline& pred, const Timeline& ref, int n) {
  internal::CheckOrder(n);
  return RougeN(internal::TimelineTokens(pred), internal::TimelineTokens(ref), n);
}

inline RougeScore AgreementRouge(const Timeline& pred, const Timeline& ref, int n) {
  internal::CheckOrder(n);
  const auto p = internal::PerDay(pred, n);
  const auto r = internal::PerDay(ref, n);
  RougeCounts counts;
  for (const auto& d : p) counts.pred_total += static_cast<double>(TotalCount(d.ngrams));
  for (const auto& d : r) counts.ref_total += static_cast<double>(TotalCount(d.ngrams));
  std::size_t j = 0;
  for (const auto& d : p) {
    while (j < r.size() && r[j].date < d.date) ++j;
    if (j < r.size() && r[j].date == d.date) {
      counts.overlap += static_cast<double>(ClippedOverlap(d.ngrams, r[j].ngrams));
    }
  }
  return counts.Score(n);
}

struct DateAlignment {
  Date pred_date;
  Date ref_date;
  double score = 0.0;  // ROUGE-1 F1 / (1 + distance)
};

// m:1 alignment of predicted dates to reference dates. Ties go to the closer
// date, then the earlier one.
inline std::vector<DateAlignment> AlignDates(const Timeline& pred, const Timeline& ref) {
  std::vector<DateAlignment> out;
  std::vector<std::vector<std::string>> ref_tokens;
  for (const auto& e : ref.entries) ref_tokens.push_back(TokenizeAll(e.summary));
  for (const auto& p : pred.entries) {
    const auto tokens = TokenizeAll(p.summary);
    double best = 0.0;
    int best_gap = 0;
    std::size_t best_ref = ref.entries.size();
    for (std::size_t j = 0; j < ref.entries.size(); ++j) {
      const double content = RougeN(tokens, ref_tokens[j], 1).f1;
      if (content <= 0.0) continue;
      const int gap = DayGap(p.date, ref.entries[j].date);
      const double score = content / (1.0 + gap);
      if (best_ref == ref.entries.size() || score > best || (score == best && gap < best_gap)) {
        best = score;
        best_gap = gap;
        best_ref = j;
      }
    }
    if (best_ref < ref.entries.size()) out.push_back({p.date, ref.entries[best_ref].date, best});
  }
  return out;
}

inline RougeScore AlignM1Rouge(const Timeline& pred, const Timeline& ref, int n) {
  internal::CheckOrder(n);
  const auto p = internal::PerDay(pred, n);
  const auto r = internal::PerDay(ref, n);
  RougeCounts counts;
  for (const auto& d : p) counts.pred_total += static_cast<double>(TotalCount(d.ngrams));
  for (const auto& d : r) counts.ref_total += static_cast<double>(TotalCount(d.ngrams));
  std::map<Date, NGramCounts> pooled;
  std::map<Date, const internal::DailyCounts*> pred_by_date;
  for (const auto& d : p) pred_by_date[d.date] = &d;
  for (const auto& a : AlignDates(pred, ref)) {
    auto& pool = pooled[a.ref_date];
    for (const auto& [g, c] : pred_by_date.at(a.pred_date)->ngrams) pool[g] += c;
  }
  for (const auto& d : r) {
    auto it = pooled.find(d.date);
    if (it != pooled.end()) counts.overlap += static_cast<double>(ClippedOverlap(it->second, d.ngrams));
  }
  return counts.Score(n);
}

// Set F1 between predicted and reference dates; 0 if either is empty.
inline double DateF1(const Timeline& pred, const Timeline& ref) {
  std::set<Date> p, r;
  for (const auto& e : pred.entries) p.insert(e.date);
  for (const auto& e : ref.entries) r.insert(e.date);
  if (p.empty() || r.empty()) return 0.0;
  std::size_t common = 0;
  for (const Date d : p) common += r.count(d);
  if (common == 0) return 0.0;
  const double precision = static_cast<double>(common) / static_cast<double>(p.size());
  const double recall = static_cast<double>(common) / static_cast<double>(r.size());
  return 2.0 * precision * recall / (precision + recall);
}

// Number of dates over the inclusive day span.
inline double Spread(const Timeline& ref) {
  if (ref.empty()) throw Error("spread of an empty timeline");
  const int span = ref.entries.back().date - ref.entries.front().date + 1;
  return static_cast<double>(ref.entries.size()) / static_cast<double>(span);
}

inline double CompressionRate(const Timeline& ref, std::size_t corpus_sentences) {
  if (corpus_sentences == 0) throw Error("compression rate of an empty corpus");
  return static_cast<double>(ref.num_sentences()) / static_cast<double>(corpus_sentences);
}

// `corpus` must be the unfiltered corpus.
inline double CompressionRate(const Timeline& ref, const Corpus& corpus) {
  return CompressionRate(ref, corpus.size());
}

inline int MaxDailyLength(const Timeline& t) {
  std::size_t best = 0;
  for (const auto& e : t.entries) best = std::max(best, e.summary.size());
  return static_cast<int>(best);
}

// Compression-rate bins [0, 0.001], (0.001, 0.01], (0.01, 0.1], (0.1, inf).
inline int CompressionBucket(double rate) {
  if (rate <= 0.001) return 0;
  if (rate <= 0.01) return 1;
  if (rate <= 0.1) return 2;
  return 3;
}

inline const char* CompressionBucketLabel(int bucket) {
  static const char* const kLabels[] = {"[0,0.001]", "(0.001,0.01]", "(0.01,0.1]", "(0.1,inf)"};
  return kLabels[bucket];
}

// Spread thirds [0, 1/3], (1/3, 2/3], (2/3, 1].
inline int SpreadBucket(double spread) {
  if (spread * 3.0 <= 1.0) return 0;
  if (spread * 3.0 <= 2.0) return 1;
  return 2;
}

inline const char* SpreadBucketLabel(int bucket) {
  static const char* const kLabels[] = {"[0,1/3]", "(1/3,2/3]", "(2/3,1]"};
  return kLabels[bucket];
}

// ---------------------------------------------------------------------------

struct EvalReport {
  RougeScore concat[2];     // ROUGE-1, ROUGE-2
  RougeScore agreement[2];
  RougeScore align_m1[2];
  double date_f1 = 0.0;
  // NaN when the corpus size is unknown.
  double compression_rate = std::numeric_limits<double>::quiet_NaN();
  double spread = 0.0;
  int max_daily_len = 0;  // of the prediction
};

inline EvalReport Evaluate(const Timeline& pred, const Timeline& ref,
                           std::size_t corpus_sentences = 0) {
  EvalReport report;
  for (int n = 1; n <= 2; ++n) {
    report.concat[n - 1] = ConcatRouge(pred, ref, n);
    report.agreement[n - 1] = AgreementRouge(pred, ref, n);
    report.align_m1[n - 1] = AlignM1Rouge(pred, ref, n);
  }
  report.date_f1 = DateF1(pred, ref);
  if (!ref.empty()) report.spread = Spread(ref);
  if (corpus_sentences > 0) report.compression_rate = CompressionRate(ref, corpus_sentences);
  report.max_daily_len = MaxDailyLength(pred);
  return report;
}

// ---------------------------------------------------------------------------
// Paired approximate randomization (sign-flip) test.
//
// Statistic |mean(a - b)|. When 2^n <= iters every sign pattern is
// enumerated and p = #{patterns >= observed} / 2^n exactly. Otherwise `iters`
// random patterns are drawn and p = (#{>= observed} + 1) / (iters + 1).

inline double ApproxRandomization(std::span<const double> a, std::span<const double> b, int iters,
                                  std::uint64_t seed) {
  if (a.size() != b.size()) throw Error("paired score lists differ in length");
  if (iters < 1) throw Error("iterations must be positive");
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = a[i] - b[i];
  const auto statistic = [&](auto sign_of) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += sign_of(i) ? -diff[i] : diff[i];
    return std::abs(sum) / static_cast<double>(n);
  };
  const double observed = statistic([](std::size_t) { return false; });
  const double threshold = observed - 1e-12 * std::max(1.0, observed);

  if (n < 63 && (std::uint64_t{1} << n) <= static_cast<std::uint64_t>(iters)) {
    const std::uint64_t patterns = std::uint64_t{1} << n;
    std::uint64_t at_least = 0;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      if (statistic([mask](std::size_t i) { return (mask >> i) & 1; }) >= threshold) ++at_least;
    }
    return static_cast<double>(at_least) / static_cast<double>(patterns);
  }
  Rng rng(seed);
  std::vector<char> flip(n);
  long at_least = 0;
  for (int it = 0; it < iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) flip[i] = static_cast<char>(rng() >> 63);
    if (statistic([&flip](std::size_t i) { return flip[i] != 0; }) >= threshold) ++at_least;
  }
  return static_cast<double>(at_least + 1) / static_cast<double>(iters + 1);
}

}  // namespace tlsum

#endif  // TLSUM_EVALUATION_H_
