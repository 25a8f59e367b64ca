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

// Sparse inverse-date-frequency sentence vectors, cosine similarity and
// spherical k-means.

#ifndef TLSUM_VECTORSPACE_H_
#define TLSUM_VECTORSPACE_H_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tlsum/common.h"
#include "tlsum/corpus.h"
#include "tlsum/tokenizer.h"

namespace tlsum {

using TokenId = int;

class SparseVector {
 public:
  using Entry = std::pair<TokenId, double>;

  SparseVector() = default;

  // Entries with zero weight are dropped; duplicate ids are summed.
  explicit SparseVector(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [id, w] : entries) {
      if (!entries_.empty() && entries_.back().first == id) {
        entries_.back().second += w;
      } else {
        entries_.push_back({id, w});
      }
    }
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0.0; });
    double sq = 0.0;
    for (const auto& e : entries_) sq += e.second * e.second;
    norm_ = std::sqrt(sq);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  double norm() const { return norm_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  double Weight(TokenId id) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{id, -1e300});
    return (it != entries_.end() && it->first == id) ? it->second : 0.0;
  }

  double Dot(const SparseVector& other) const {
    double dot = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        dot += a->second * b->second;
        ++a;
        ++b;
      }
    }
    return dot;
  }

  // Unit-length copy; the zero vector stays zero.
  SparseVector Normalized() const {
    if (norm_ == 0.0) return {};
    std::vector<Entry> scaled = entries_;
    for (auto& e : scaled) e.second /= norm_;
    return SparseVector(std::move(scaled));
  }

  bool operator==(const SparseVector&) const = default;

 private:
  std::vector<Entry> entries_;
  double norm_ = 0.0;
};

// In [0, 1]; zero if either side is the zero vector.
inline double Cosine(const SparseVector& u, const SparseVector& v) {
  if (u.norm() == 0.0 || v.norm() == 0.0) return 0.0;
  const double c = u.Dot(v) / (u.norm() * v.norm());
  return std::clamp(c, 0.0, 1.0);
}

enum class TermWeighting { kRawCount, kBoolean };

struct VectorizerOptions {
  TermWeighting term_weighting = TermWeighting::kRawCount;
  bool remove_stopwords = false;
};

inline const std::unordered_set<std::string>& EnglishStopwords() {
  static const std::unordered_set<std::string> kWords = {
      "a",    "an",   "and",   "are",  "as",   "at",    "be",   "by",
      "for",  "from", "has",   "have", "he",   "her",   "his",  "in",
      "is",   "it",   "its",   "of",   "on",   "or",    "she",  "that",
      "the",  "their", "they", "this", "to",   "was",   "were", "which",
      "will", "with", "would", "said", "been", "but",   "not",  "who"};
  return kWords;
}

class Vectorizer {
 public:
  Vectorizer() = default;

  // idf(t) = ln(D / df_date(t)) with D the number of distinct sentence dates
  // and df_date(t) the number of dates with a sentence containing t. Tokens
  // present on every date get weight zero and are pruned.
  static Vectorizer Fit(const Corpus& corpus, VectorizerOptions options = {}) {
    if (corpus.sentences.empty()) throw Error("cannot fit vectorizer on an empty corpus");
    Vectorizer v;
    v.options_ = options;
    std::unordered_set<Date> dates;
    // Tokens in order of first appearance for stable ids.
    std::vector<std::string> order;
    std::unordered_map<std::string, std::unordered_set<Date>> token_dates;
    for (const auto& s : corpus.sentences) {
      dates.insert(s.date);
      for (auto& token : Tokenize(s.text)) {
        if (options.remove_stopwords && EnglishStopwords().contains(token)) continue;
        auto [it, inserted] = token_dates.try_emplace(token);
        if (inserted) order.push_back(token);
        it->second.insert(s.date);
      }
    }
    v.date_count_ = static_cast<int>(dates.size());
    const double d = static_cast<double>(v.date_count_);
    for (const auto& token : order) {
      const auto df = static_cast<double>(token_dates[token].size());
      const double idf = std::log(d / df);
      if (!(idf > 0.0)) continue;
      v.vocabulary_.emplace(token, static_cast<TokenId>(v.tokens_.size()));
      v.tokens_.push_back(token);
      v.idf_.push_back(idf);
    }
    return v;
  }

  // Rebuilds a fitted vectorizer, e.g. from a cache file.
  static Vectorizer FromParts(std::vector<std::string> tokens, std::vector<double> idf,
                              int date_count, VectorizerOptions options = {}) {
    if (tokens.size() != idf.size()) throw Error("vocabulary and idf sizes differ");
    Vectorizer v;
    v.options_ = options;
    v.date_count_ = date_count;
    v.tokens_ = std::move(tokens);
    v.idf_ = std::move(idf);
    for (std::size_t i = 0; i < v.tokens_.size(); ++i) {
      if (!(v.idf_[i] > 0.0)) throw Error("stored idf must be positive");
      v.vocabulary_.emplace(v.tokens_[i], static_cast<TokenId>(i));
    }
    return v;
  }

  // weight(t) = tf(t) * idf(t); out-of-vocabulary tokens are ignored.
  SparseVector Vectorize(std::string_view text) const {
    std::map<TokenId, double> tf;
    for (const auto& token : Tokenize(text)) {
      auto it = vocabulary_.find(token);
      if (it == vocabulary_.end()) continue;
      tf[it->second] += 1.0;
    }
    std::vector<SparseVector::Entry> entries;
    entries.reserve(tf.size());
    for (const auto& [id, count] : tf) {
      const double term = options_.term_weighting == TermWeighting::kBoolean ? 1.0 : count;
      entries.push_back({id, term * idf_[id]});
    }
    return SparseVector(std::move(entries));
  }

  SparseVector Vectorize(const Sentence& sentence) const { return Vectorize(sentence.text); }

  std::vector<SparseVector> VectorizeAll(const Corpus& corpus) const {
    std::vector<SparseVector> out;
    out.reserve(corpus.size());
    for (const auto& s : corpus.sentences) out.push_back(Vectorize(s));
    return out;
  }

  std::optional<TokenId> Lookup(const std::string& token) const {
    auto it = vocabulary_.find(token);
    if (it == vocabulary_.end()) return std::nullopt;
    return it->second;
  }
  double Idf(TokenId id) const { return idf_.at(id); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<double>& idf() const { return idf_; }
  int date_count() const { return date_count_; }
  std::size_t vocabulary_size() const { return tokens_.size(); }
  const VectorizerOptions& options() const { return options_; }

 private:
  VectorizerOptions options_;
  std::unordered_map<std::string, TokenId> vocabulary_;
  std::vector<std::string> tokens_;
  std::vector<double> idf_;
  int date_count_ = 0;
};

// ---------------------------------------------------------------------------
// Clustering

struct Partition {
  std::vector<int> cluster_of;
  int num_clusters = 0;

  bool operator==(const Partition&) const = default;
};

// Groups ids by identical value of `key`, clusters numbered by sorted key.
template <typename Key>
Partition PartitionByKey(const std::vector<Key>& keys) {
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Partition p;
  p.num_clusters = static_cast<int>(distinct.size());
  p.cluster_of.reserve(keys.size());
  for (const auto& key : keys) {
    p.cluster_of.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), key) - distinct.begin()));
  }
  return p;
}

inline int DiversityClusterCount(std::size_t ground_size, double fraction = 0.2) {
  return std::max(1, static_cast<int>(std::ceil(fraction * static_cast<double>(ground_size) - 1e-9)));
}

namespace internal {

// Dense scores of one vector against all centroids through an inverted index.
class CentroidIndex {
 public:
  explicit CentroidIndex(const std::vector<SparseVector>& centroids)
      : num_(static_cast<int>(centroids.size())) {
    for (int j = 0; j < num_; ++j) {
      for (const auto& [t, w] : centroids[j].entries()) postings_[t].push_back({j, w});
    }
  }

  // Index of the most similar centroid; ties to the lower index.
  int Nearest(const SparseVector& x, std::vector<double>& scratch) const {
    scratch.assign(num_, 0.0);
    for (const auto& [t, w] : x.entries()) {
      auto it = postings_.find(t);
      if (it == postings_.end()) continue;
      for (const auto& [j, cw] : it->second) scratch[j] += w * cw;
    }
    int best = 0;
    for (int j = 1; j < num_; ++j) {
      if (scratch[j] > scratch[best]) best = j;
    }
    return best;
  }

 private:
  int num_;
  std::unordered_map<TokenId, std::vector<std::pair<int, double>>> postings_;
};

inline SparseVector NormalizedSum(const std::vector<const SparseVector*>& members) {
  std::map<TokenId, double> acc;
  for (const auto* v : members) {
    for (const auto& [t, w] : v->entries()) acc[t] += w;
  }
  return SparseVector(std::vector<SparseVector::Entry>(acc.begin(), acc.end())).Normalized();
}

inline std::vector<int> SphericalKMeans(const std::vector<SparseVector>& unit, int k,
                                        Rng& rng, int max_iterations) {
  const int n = static_cast<int>(unit.size());
  // k-means++ seeding with distance 1 - cos.
  std::vector<int> centers;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(n, 0);
  int first = static_cast<int>(UniformIndex(rng, n));
  centers.push_back(first);
  chosen[first] = 1;
  while (static_cast<int>(centers.size()) < k) {
    const SparseVector& last = unit[centers.back()];
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = std::max(0.0, 1.0 - std::min(1.0, unit[i].Dot(last)));
      dist[i] = std::min(dist[i], d);
      if (!chosen[i]) total += dist[i] * dist[i];
    }
    int pick = -1;
    if (total > 0.0) {
      double target = UniformDouble(rng) * total;
      for (int i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        target -= dist[i] * dist[i];
        if (target < 0.0) {
          pick = i;
          break;
        }
      }
      if (pick < 0) {
        for (int i = n - 1; i >= 0; --i) {
          if (!chosen[i] && dist[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    } else {
      // Remaining points coincide with centers; pick uniformly among them.
      std::vector<int> rest;
      for (int i = 0; i < n; ++i) {
        if (!chosen[i]) rest.push_back(i);
      }
      pick = rest[UniformIndex(rng, rest.size())];
    }
    centers.push_back(pick);
    chosen[pick] = 1;
  }

  std::vector<SparseVector> centroids;
  for (int c : centers) centroids.push_back(unit[c]);
  std::vector<int> assignment(n, -1);
  std::vector<double> scratch;
  for (int iter = 0; iter < max_iterations; ++iter) {
    const CentroidIndex index(centroids);
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      const int c = index.Nearest(unit[i], scratch);
      if (c != assignment[i]) {
        assignment[i] = c;
        changed = true;
      }
    }
    if (!changed) break;
    std::vector<std::vector<const SparseVector*>> members(k);
    for (int i = 0; i < n; ++i) members[assignment[i]].push_back(&unit[i]);
    for (int j = 0; j < k; ++j) {
      if (!members[j].empty()) centroids[j] = NormalizedSum(members[j]);
    }
  }
  return assignment;
}

}  // namespace internal

inline constexpr int kKMeansMaxIterations = 50;

// Spherical k-means on L2-normalized vectors with k-means++ seeding and Lloyd
// iterations until the assignment is a fixpoint (at most 50 rounds).
// Zero vectors go to a dedicated residual cluster, which counts towards k.
// num_clusters can be smaller than k when there are too few nonzero vectors.
inline Partition KMeans(const std::vector<SparseVector>& vectors, int k, std::uint64_t seed) {
  const int n = static_cast<int>(vectors.size());
  if (k < 1) throw Error("kmeans: k must be at least 1");
  if (k > n) {
    throw Error("kmeans: k = " + std::to_string(k) + " exceeds the number of vectors (" +
                std::to_string(n) + ")");
  }
  std::vector<int> nonzero;
  std::vector<SparseVector> unit;
  for (int i = 0; i < n; ++i) {
    if (!vectors[i].empty()) {
      nonzero.push_back(i);
      unit.push_back(vectors[i].Normalized());
    }
  }
  const bool has_residual = static_cast<int>(nonzero.size()) < n;
  Partition p;
  p.cluster_of.assign(n, 0);
  const int semantic = std::min<int>(has_residual ? k - 1 : k, static_cast<int>(nonzero.size()));
  if (semantic <= 0) {
    p.num_clusters = 1;
    return p;
  }
  Rng rng(seed);
  const auto assignment = internal::SphericalKMeans(unit, semantic, rng, kKMeansMaxIterations);
  for (std::size_t i = 0; i < nonzero.size(); ++i) p.cluster_of[nonzero[i]] = assignment[i];
  if (has_residual) {
    for (int i = 0; i < n; ++i) {
      if (vectors[i].empty()) p.cluster_of[i] = semantic;
    }
  }
  p.num_clusters = semantic + (has_residual ? 1 : 0);
  return p;
}

// Sum over points of 1 - cos(point, normalized centroid of its cluster).
inline double WithinClusterDissimilarity(const std::vector<SparseVector>& vectors,
                                         const Partition& partition) {
  std::vector<std::vector<const SparseVector*>> members(partition.num_clusters);
  std::vector<SparseVector> unit;
  unit.reserve(vectors.size());
  for (const auto& v : vectors) unit.push_back(v.Normalized());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    members[partition.cluster_of[i]].push_back(&unit[i]);
  }
  std::vector<SparseVector> centroids;
  for (const auto& m : members) centroids.push_back(internal::NormalizedSum(m));
  double total = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    total += 1.0 - Cosine(unit[i], centroids[partition.cluster_of[i]]);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Vector cache file: {"hash", "date_count", "vocab", "idf", "vectors":
// [[sentence_id, [[token_id, weight], ...]], ...]}.

inline std::uint64_t CorpusContentHash(const Corpus& corpus) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::string_view bytes) {
    for (const char c : bytes) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& s : corpus.sentences) {
    mix(s.text);
    mix(s.date.ToIso());
  }
  return h;
}

inline void SaveVectorCache(const std::filesystem::path& path, std::uint64_t content_hash,
                            const Vectorizer& vectorizer,
                            const std::vector<SparseVector>& vectors) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [t, w] : vectors[i].entries()) entries.push_back({t, w});
    rows.push_back({i, entries});
  }
  const nlohmann::json doc = {{"hash", std::to_string(content_hash)},
                              {"date_count", vectorizer.date_count()},
                              {"vocab", vectorizer.tokens()},
                              {"idf", vectorizer.idf()},
                              {"vectors", rows}};
  std::ofstream out(path);
  if (!out) throw Error("cannot write vector cache: " + path.string());
  out << doc.dump() << '\n';
}

struct VectorCache {
  Vectorizer vectorizer;
  std::vector<SparseVector> vectors;
};

// nullopt when the file is missing or was built from different content.
inline std::optional<VectorCache> LoadVectorCache(const std::filesystem::path& path,
                                                  std::uint64_t content_hash) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const auto doc = nlohmann::json::parse(in);
  if (doc.at("hash").get<std::string>() != std::to_string(content_hash)) return std::nullopt;
  VectorCache cache;
  cache.vectorizer = Vectorizer::FromParts(doc.at("vocab").get<std::vector<std::string>>(),
                                           doc.at("idf").get<std::vector<double>>(),
                                           doc.at("date_count").get<int>());
  for (const auto& row : doc.at("vectors")) {
    const auto id = row.at(0).get<std::size_t>();
    if (id != cache.vectors.size()) throw Error("vector cache rows out of order");
    std::vector<SparseVector::Entry> entries;
    for (const auto& e : row.at(1)) entries.push_back({e.at(0).get<TokenId>(), e.at(1).get<double>()});
    cache.vectors.emplace_back(std::move(entries));
  }
  return cache;
}

}  // namespace tlsum

#endif  // TLSUM_VECTORSPACE_H_
