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

// Seeded synthetic news corpora with a known reference timeline.
//
// Layout of one instance:
//   event days     one article per event with the reference sentences
//                  verbatim, plus a few weaker sentences on the same event
//   follow-ups     later articles dated by "today" that mention an event
//                  date explicitly, so event dates are widely referenced
//   burst days     non-event days with many near-duplicate sentences on a
//                  side story; these dominate plain coverage
//   background     unrelated sentences on random days

#ifndef TLSUM_SYNTHETIC_H_
#define TLSUM_SYNTHETIC_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tlsum/common.h"
#include "tlsum/corpus.h"
#include "tlsum/date.h"
#include "tlsum/date_tagger.h"

namespace tlsum {

struct SyntheticOptions {
  int num_events = 6;
  int sentences_per_event = 2;  // reference daily length
  int span_days = 60;
  int event_noise_sentences = 2;
  int followups_per_event = 14;
  int max_followup_delay = 14;
  int burst_days = 2;
  int burst_sentences = 12;
  int background_sentences = 40;
  int event_vocabulary = 16;
  int burst_vocabulary = 10;
  int background_vocabulary = 300;
  Date start = Date::FromDayNumber(15049);  // 2011-03-16
  // Prepended to event and side-story words so instances can share a corpus.
  std::string word_prefix;
};

struct SyntheticInstance {
  std::vector<Document> documents;
  Corpus corpus;  // date-tagged
  Timeline reference;
  std::vector<Date> event_dates;
  std::vector<Date> burst_dates;
};

namespace internal {

inline std::string Word(const std::string& prefix, int i) { return prefix + std::to_string(i); }

inline std::vector<int> Sample(Rng& rng, int pool, int count) {
  std::vector<int> all(pool);
  for (int i = 0; i < pool; ++i) all[i] = i;
  Shuffle(all, rng);
  all.resize(std::min(pool, count));
  return all;
}

inline std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out + ".";
}

}  // namespace internal

inline SyntheticInstance MakeSyntheticInstance(std::uint64_t seed, const SyntheticOptions& opt = {}) {
  if (opt.num_events < 2 || opt.span_days < opt.num_events + opt.burst_days + 2) {
    throw Error("synthetic: span too short for the requested events");
  }
  if (opt.sentences_per_event < 1) throw Error("synthetic: need at least one sentence per event");
  Rng rng(seed);
  using internal::Word;
  const auto bg = [&](int count) {
    std::vector<std::string> words;
    for (int i = 0; i < count; ++i) {
      words.push_back(Word("bg", static_cast<int>(UniformIndex(rng, opt.background_vocabulary))));
    }
    return words;
  };

  // Event days include both ends of the span; bursts lie strictly inside.
  std::set<int> event_offsets = {0, opt.span_days - 1};
  while (static_cast<int>(event_offsets.size()) < opt.num_events) {
    event_offsets.insert(1 + static_cast<int>(UniformIndex(rng, opt.span_days - 2)));
  }
  std::set<int> burst_offsets;
  while (static_cast<int>(burst_offsets.size()) < opt.burst_days) {
    const int d = 1 + static_cast<int>(UniformIndex(rng, opt.span_days - 2));
    if (!event_offsets.contains(d)) burst_offsets.insert(d);
  }

  SyntheticInstance inst;
  std::vector<Document> docs;
  int event_index = 0;
  for (const int offset : event_offsets) {
    const Date day = opt.start + offset;
    inst.event_dates.push_back(day);
    const std::string ev = opt.word_prefix + "ev" + std::to_string(event_index) + "w";
    TimelineEntry entry{day, {}};
    Document doc{"event-" + std::to_string(event_index), day, {}};
    // Reference sentences: disjoint slices of the event vocabulary.
    const auto words = internal::Sample(rng, opt.event_vocabulary, opt.event_vocabulary);
    const int per = std::max(3, opt.event_vocabulary / opt.sentences_per_event - 1);
    for (int i = 0; i < opt.sentences_per_event; ++i) {
      std::vector<std::string> s = {"story"};
      for (int j = 0; j < per; ++j) {
        s.push_back(Word(ev, words[(i * per + j) % opt.event_vocabulary]));
      }
      entry.summary.push_back(internal::Join(s));
      doc.sentences.push_back(entry.summary.back());
    }
    for (int i = 0; i < opt.event_noise_sentences; ++i) {
      auto s = bg(6);
      s.push_back(Word(ev, static_cast<int>(UniformIndex(rng, opt.event_vocabulary))));
      doc.sentences.push_back(internal::Join(s));
    }
    docs.push_back(std::move(doc));
    inst.reference.entries.push_back(std::move(entry));

    for (int i = 0; i < opt.followups_per_event; ++i) {
      const int delay = 1 + static_cast<int>(UniformIndex(rng, opt.max_followup_delay));
      const Date pub = opt.start + std::min(opt.span_days - 1, offset + delay);
      std::vector<std::string> s = {"today", "officials", "recalled", "the", "events", "of",
                                    day.ToIso()};
      for (int w : internal::Sample(rng, opt.event_vocabulary, 2)) s.push_back(Word(ev, w));
      for (auto& w : bg(2)) s.push_back(w);
      docs.push_back({"followup-" + std::to_string(event_index) + "-" + std::to_string(i), pub,
                      {internal::Join(s)}});
    }
    ++event_index;
  }

  int burst_index = 0;
  for (const int offset : burst_offsets) {
    const Date day = opt.start + offset;
    inst.burst_dates.push_back(day);
    Document doc{"burst-" + std::to_string(burst_index), day, {}};
    for (int i = 0; i < opt.burst_sentences; ++i) {
      std::vector<std::string> s = {"story"};
      for (int w : internal::Sample(rng, opt.burst_vocabulary, opt.burst_vocabulary - 2)) {
        s.push_back(Word(opt.word_prefix + "side", w));
      }
      s.push_back(Word(opt.word_prefix + "side" + std::to_string(burst_index) + "x", i));
      doc.sentences.push_back(internal::Join(s));
    }
    docs.push_back(std::move(doc));
    ++burst_index;
  }

  std::vector<std::string> background;
  for (int i = 0; i < opt.background_sentences; ++i) {
    const Date day = opt.start + static_cast<int>(UniformIndex(rng, opt.span_days));
    docs.push_back({"background-" + std::to_string(i), day, {internal::Join(bg(8))}});
  }

  std::stable_sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) {
    return a.publication_date < b.publication_date;
  });
  inst.documents = docs;
  inst.corpus = TagSentenceDates(CorpusFromDocuments(std::move(docs), "synthetic"));
  return inst;
}

}  // namespace tlsum

#endif  // TLSUM_SYNTHETIC_H_
