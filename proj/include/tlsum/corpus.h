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

// Corpus, timeline and keyword data model plus their file formats.
//
//   corpus JSONL    {"id": str, "pub_date": "YYYY-MM-DD", "sentences": [str]}
//   timeline JSON   {"entries": [{"date": "YYYY-MM-DD", "summary": [str]}]}
//   keyword file    one keyword per line
//
// Sentences come pre-split; ids are assigned densely in file order.

#ifndef TLSUM_CORPUS_H_
#define TLSUM_CORPUS_H_

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tlsum/common.h"
#include "tlsum/date.h"
#include "tlsum/tokenizer.h"

namespace tlsum {

struct Document {
  std::string id;
  Date publication_date;
  std::vector<std::string> sentences;

  bool operator==(const Document&) const = default;
};

enum class DateSource { kExpression, kPublication };

inline const char* DateSourceName(DateSource source) {
  return source == DateSource::kExpression ? "expression" : "publication";
}

struct Sentence {
  SentenceId id = 0;
  // Id in the corpus as loaded, kept through filtering and range restriction.
  SentenceId original_id = 0;
  std::string text;
  std::string doc_id;
  int doc_index = 0;
  Date date;
  DateSource date_source = DateSource::kPublication;
  // Sorted, unique, never empty.
  std::vector<Date> referenced_dates;

  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::string topic;
  std::vector<std::string> keywords;
  std::vector<Sentence> sentences;
  std::vector<Document> documents;

  std::size_t size() const { return sentences.size(); }
  bool operator==(const Corpus&) const = default;
};

struct TimelineEntry {
  Date date;
  std::vector<std::string> summary;

  bool operator==(const TimelineEntry&) const = default;
};

struct Timeline {
  std::vector<TimelineEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t num_sentences() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.summary.size();
    return n;
  }
  bool operator==(const Timeline&) const = default;
};

// Length parameters extracted from a reference timeline.
struct TimelineSpec {
  int m = 1;    // max total sentences
  int ell = 1;  // max distinct dates
  int k = 1;    // max sentences per date
  Date start;
  Date end;
};

enum class CorpusFormat { kJsonl };

namespace internal {

inline Document ParseDocumentRecord(const std::string& line, int line_number) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("corpus line " + std::to_string(line_number) +
                ": malformed record: " + e.what());
  }
  const auto fail = [line_number](const std::string& what) {
    return Error("corpus line " + std::to_string(line_number) + ": " + what);
  };
  if (!record.is_object()) throw fail("record is not an object");
  if (!record.contains("id") || !record["id"].is_string()) {
    throw fail("missing string field \"id\"");
  }
  Document doc;
  doc.id = record["id"].get<std::string>();
  if (!record.contains("pub_date") || !record["pub_date"].is_string()) {
    throw fail("document " + doc.id + ": missing string field \"pub_date\"");
  }
  const auto pub = Date::ParseIso(record["pub_date"].get<std::string>());
  if (!pub) {
    throw Error("document " + doc.id + ": unparseable publication date \"" +
                record["pub_date"].get<std::string>() + "\" (corpus line " +
                std::to_string(line_number) + ")");
  }
  doc.publication_date = *pub;
  if (!record.contains("sentences") || !record["sentences"].is_array()) {
    throw fail("document " + doc.id + ": missing array field \"sentences\"");
  }
  for (const auto& s : record["sentences"]) {
    if (!s.is_string()) throw fail("document " + doc.id + ": non-string sentence");
    doc.sentences.push_back(s.get<std::string>());
  }
  return doc;
}

}  // namespace internal

// Builds Sentence records from documents, ids dense in document order. Dates
// default to the publication date until TagSentenceDates runs.
inline Corpus CorpusFromDocuments(std::vector<Document> documents,
                                  std::string topic = {}) {
  Corpus corpus;
  corpus.topic = std::move(topic);
  std::unordered_set<std::string> seen;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const Document& doc = documents[d];
    if (!seen.insert(doc.id).second) {
      throw Error("duplicate document id: " + doc.id);
    }
    for (const auto& text : doc.sentences) {
      Sentence s;
      s.id = static_cast<SentenceId>(corpus.sentences.size());
      s.original_id = s.id;
      s.text = text;
      s.doc_id = doc.id;
      s.doc_index = static_cast<int>(d);
      s.date = doc.publication_date;
      s.referenced_dates = {doc.publication_date};
      corpus.sentences.push_back(std::move(s));
    }
  }
  corpus.documents = std::move(documents);
  return corpus;
}

inline Corpus ParseCorpusJsonl(std::istream& in, std::string topic = {}) {
  std::vector<Document> documents;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    documents.push_back(internal::ParseDocumentRecord(line, line_number));
  }
  return CorpusFromDocuments(std::move(documents), std::move(topic));
}

inline Corpus LoadCorpus(const std::filesystem::path& path,
                         CorpusFormat format = CorpusFormat::kJsonl) {
  if (format != CorpusFormat::kJsonl) throw Error("unsupported corpus format");
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path.string());
  return ParseCorpusJsonl(in, path.stem().string());
}

inline nlohmann::json DocumentToJson(const Document& doc) {
  return {{"id", doc.id},
          {"pub_date", doc.publication_date.ToIso()},
          {"sentences", doc.sentences}};
}

// Canonical JSONL: one compact record per line, keys sorted.
inline std::string SerializeCorpusJsonl(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    out += DocumentToJson(doc).dump();
    out += '\n';
  }
  return out;
}

// Re-emits a JSONL corpus file in canonical form without validating dates.
inline std::string NormalizeCorpusJsonl(std::istream& in) {
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out += nlohmann::json::parse(line).dump();
    out += '\n';
  }
  return out;
}

// Keywords are lowercased; blank lines are skipped.
inline std::vector<std::string> LoadKeywords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open keyword file: " + path.string());
  std::vector<std::string> keywords;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string kw = line.substr(first, last - first + 1);
    for (char& c : kw) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    }
    keywords.push_back(std::move(kw));
  }
  return keywords;
}

// Keeps sentences with at least one keyword among their tokens. A keyword
// that tokenizes to several tokens ("oil spill") must appear contiguously.
// Ids are re-densified; original_id is preserved.
inline Corpus FilterByKeywords(const Corpus& corpus,
                               const std::vector<std::string>& keywords) {
  if (keywords.empty()) return corpus;
  std::vector<std::vector<std::string>> patterns;
  for (const auto& kw : keywords) {
    auto tokens = Tokenize(kw);
    if (!tokens.empty()) patterns.push_back(std::move(tokens));
  }
  Corpus out;
  out.topic = corpus.topic;
  out.keywords = keywords;
  out.documents = corpus.documents;
  for (const auto& s : corpus.sentences) {
    const auto tokens = Tokenize(s.text);
    bool match = false;
    for (const auto& pattern : patterns) {
      if (tokens.size() < pattern.size()) continue;
      for (std::size_t i = 0; i + pattern.size() <= tokens.size(); ++i) {
        if (std::equal(pattern.begin(), pattern.end(), tokens.begin() + i)) {
          match = true;
          break;
        }
      }
      if (match) break;
    }
    if (!match) continue;
    Sentence kept = s;
    kept.id = static_cast<SentenceId>(out.sentences.size());
    out.sentences.push_back(std::move(kept));
  }
  return out;
}

// Keeps sentences dated within [start, end]; ids re-densified.
inline Corpus RestrictToRange(const Corpus& corpus, Date start, Date end) {
  Corpus out;
  out.topic = corpus.topic;
  out.keywords = corpus.keywords;
  out.documents = corpus.documents;
  for (const auto& s : corpus.sentences) {
    if (s.date < start || s.date > end) continue;
    Sentence kept = s;
    kept.id = static_cast<SentenceId>(out.sentences.size());
    out.sentences.push_back(std::move(kept));
  }
  return out;
}

inline std::vector<Date> SentenceDates(const Corpus& corpus) {
  std::vector<Date> dates;
  dates.reserve(corpus.size());
  for (const auto& s : corpus.sentences) dates.push_back(s.date);
  return dates;
}

// ---------------------------------------------------------------------------
// Timelines

// Throws unless dates strictly increase and no daily summary is empty.
inline void ValidateTimeline(const Timeline& timeline) {
  for (std::size_t i = 0; i < timeline.entries.size(); ++i) {
    const auto& e = timeline.entries[i];
    if (e.summary.empty()) {
      throw Error("timeline entry " + e.date.ToIso() + " has an empty summary");
    }
    if (i > 0 && !(timeline.entries[i - 1].date < e.date)) {
      throw Error("timeline dates not strictly increasing at " + e.date.ToIso());
    }
  }
}

inline nlohmann::json TimelineToJson(const Timeline& timeline) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : timeline.entries) {
    entries.push_back({{"date", e.date.ToIso()}, {"summary", e.summary}});
  }
  return {{"entries", entries}};
}

inline Timeline TimelineFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw Error("timeline JSON must be an object with an \"entries\" array");
  }
  Timeline timeline;
  for (const auto& entry : j["entries"]) {
    if (!entry.contains("date") || !entry["date"].is_string() ||
        !entry.contains("summary") || !entry["summary"].is_array()) {
      throw Error("timeline entry needs \"date\" and \"summary\"");
    }
    const auto date = Date::ParseIso(entry["date"].get<std::string>());
    if (!date) {
      throw Error("bad timeline date: " + entry["date"].get<std::string>());
    }
    TimelineEntry e;
    e.date = *date;
    for (const auto& s : entry["summary"]) e.summary.push_back(s.get<std::string>());
    timeline.entries.push_back(std::move(e));
  }
  ValidateTimeline(timeline);
  return timeline;
}

inline Timeline LoadTimeline(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open timeline file: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return TimelineFromJson(j);
}

inline std::string SerializeTimeline(const Timeline& timeline) {
  return TimelineToJson(timeline).dump(2) + "\n";
}

// Groups selected sentences by date; within a day, corpus order.
inline Timeline TimelineFromSelection(const Corpus& corpus,
                                      std::span<const SentenceId> selected) {
  std::vector<SentenceId> ids = Canonicalize(selected);
  std::stable_sort(ids.begin(), ids.end(), [&](SentenceId a, SentenceId b) {
    return corpus.sentences[a].date < corpus.sentences[b].date;
  });
  Timeline timeline;
  for (const SentenceId id : ids) {
    const Sentence& s = corpus.sentences[id];
    if (timeline.entries.empty() || timeline.entries.back().date != s.date) {
      timeline.entries.push_back({s.date, {}});
    }
    timeline.entries.back().summary.push_back(s.text);
  }
  return timeline;
}

inline TimelineSpec DeriveTimelineSpec(const Timeline& reference) {
  if (reference.empty()) throw Error("cannot derive parameters from an empty timeline");
  TimelineSpec spec;
  const int total = static_cast<int>(reference.num_sentences());
  const int dates = static_cast<int>(reference.entries.size());
  spec.m = total;
  spec.ell = dates;
  // Round half up of the mean daily length.
  spec.k = std::max(1, (2 * total + dates) / (2 * dates));
  spec.start = reference.entries.front().date;
  spec.end = reference.entries.back().date;
  return spec;
}

}  // namespace tlsum

#endif  // TLSUM_CORPUS_H_
