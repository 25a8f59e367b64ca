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

// Deterministic rule-based temporal tagger. Recognized day expressions:
//
//   2011-03-29                 ISO
//   March 24, 2011 / Mar. 24 2011 / March 24th, 2011
//   24 March 2011 / 24th of March, 2011
//   yesterday / today / tomorrow     relative to the publication date
//   Monday ... Sunday                most recent such day <= publication date
//
// A weekday directly followed by an explicit date ("Thursday, March 24, 2011")
// is treated as part of that date. Expressions naming an impossible day are
// ignored.

#ifndef TLSUM_DATE_TAGGER_H_
#define TLSUM_DATE_TAGGER_H_

#include <algorithm>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "tlsum/corpus.h"
#include "tlsum/date.h"

namespace tlsum {

struct DateMention {
  std::size_t begin = 0;  // byte offsets into the sentence
  std::size_t end = 0;
  Date date;
};

namespace internal {

inline constexpr const char* kMonthPattern =
    "(january|february|march|april|may|june|july|august|september|october|"
    "november|december|jan|feb|mar|apr|jun|jul|aug|sept|sep|oct|nov|dec)";

inline unsigned MonthFromName(std::string name) {
  for (char& c : name) c = static_cast<char>(std::tolower(c));
  static const char* const kPrefixes[] = {"jan", "feb", "mar", "apr",
                                          "may", "jun", "jul", "aug",
                                          "sep", "oct", "nov", "dec"};
  for (unsigned i = 0; i < 12; ++i) {
    if (name.compare(0, 3, kPrefixes[i]) == 0) return i + 1;
  }
  return 0;
}

struct TaggerPatterns {
  std::regex iso{R"(\b(\d{4})-(\d{2})-(\d{2})\b)"};
  std::regex month_day_year{std::string(R"(\b)") + kMonthPattern +
                                R"(\b\.?\s+(\d{1,2})(?:st|nd|rd|th)?\b,?\s+(\d{4})\b)",
                            std::regex::icase};
  std::regex day_month_year{std::string(R"(\b(\d{1,2})(?:st|nd|rd|th)?\s+(?:of\s+)?)") +
                                kMonthPattern + R"(\b\.?,?\s+(\d{4})\b)",
                            std::regex::icase};
  std::regex relative{R"(\b(yesterday|today|tomorrow)\b)", std::regex::icase};
  std::regex weekday{
      R"(\b(sunday|monday|tuesday|wednesday|thursday|friday|saturday)\b)",
      std::regex::icase};
};

inline const TaggerPatterns& Patterns() {
  static const TaggerPatterns patterns;
  return patterns;
}

template <typename Resolve>
void CollectMatches(std::string_view text, const std::regex& re, Resolve resolve,
                    std::vector<DateMention>& out) {
  using Iter = std::regex_iterator<std::string_view::const_iterator>;
  for (Iter it(text.begin(), text.end(), re), end; it != end; ++it) {
    const auto& m = *it;
    if (auto date = resolve(m)) {
      const auto begin = static_cast<std::size_t>(m.position(0));
      out.push_back({begin, begin + static_cast<std::size_t>(m.length(0)), *date});
    }
  }
}

inline int ToInt(const std::csub_match& sub) {
  return std::stoi(std::string(sub.first, sub.second));
}

}  // namespace internal

// All resolvable day expressions in order of appearance.
inline std::vector<DateMention> FindDateMentions(std::string_view text,
                                                 Date publication) {
  using internal::ToInt;
  const auto& p = internal::Patterns();
  std::vector<DateMention> explicit_dates;
  internal::CollectMatches(
      text, p.iso,
      [](const auto& m) {
        return Date::FromYmd(ToInt(m[1]), static_cast<unsigned>(ToInt(m[2])),
                             static_cast<unsigned>(ToInt(m[3])));
      },
      explicit_dates);
  internal::CollectMatches(
      text, p.month_day_year,
      [](const auto& m) {
        return Date::FromYmd(ToInt(m[3]), internal::MonthFromName(m[1].str()),
                             static_cast<unsigned>(ToInt(m[2])));
      },
      explicit_dates);
  internal::CollectMatches(
      text, p.day_month_year,
      [](const auto& m) {
        return Date::FromYmd(ToInt(m[3]), internal::MonthFromName(m[2].str()),
                             static_cast<unsigned>(ToInt(m[1])));
      },
      explicit_dates);

  std::vector<DateMention> mentions = explicit_dates;
  internal::CollectMatches(
      text, p.relative,
      [publication](const auto& m) -> std::optional<Date> {
        const char first = static_cast<char>(std::tolower(*m[1].first));
        const char third = static_cast<char>(std::tolower(*(m[1].first + 2)));
        if (first == 'y') return publication - 1;
        if (third == 'd') return publication;  // "today"
        return publication + 1;
      },
      mentions);

  internal::CollectMatches(
      text, p.weekday,
      [&](const auto& m) -> std::optional<Date> {
        // Part of an explicit date that follows it?
        std::size_t after = static_cast<std::size_t>(m.position(0) + m.length(0));
        while (after < text.size() && (text[after] == ',' || text[after] == ' ' ||
                                       text[after] == '\t')) {
          ++after;
        }
        for (const auto& e : explicit_dates) {
          if (e.begin == after) return std::nullopt;
        }
        static const char* const kNames[] = {"sunday",   "monday", "tuesday",
                                             "wednesday", "thursday", "friday",
                                             "saturday"};
        std::string name = m[1].str();
        for (char& c : name) c = static_cast<char>(std::tolower(c));
        unsigned target = 0;
        while (name != kNames[target]) ++target;
        const int back = static_cast<int>((publication.weekday() + 7 - target) % 7);
        return publication - back;
      },
      mentions);

  std::sort(mentions.begin(), mentions.end(),
            [](const DateMention& a, const DateMention& b) {
              return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
            });
  // Drop mentions nested in an earlier one.
  std::vector<DateMention> result;
  for (const auto& m : mentions) {
    if (!result.empty() && m.begin < result.back().end) continue;
    result.push_back(m);
  }
  return result;
}

// Dates every sentence: the first expression if any, else the publication
// date of its document. referenced_dates collects all expressions (or the
// publication date when there are none). Idempotent.
inline Corpus TagSentenceDates(const Corpus& corpus) {
  Corpus out = corpus;
  for (auto& s : out.sentences) {
    const Date publication = corpus.documents.at(s.doc_index).publication_date;
    const auto mentions = FindDateMentions(s.text, publication);
    s.referenced_dates.clear();
    if (mentions.empty()) {
      s.date = publication;
      s.date_source = DateSource::kPublication;
      s.referenced_dates.push_back(publication);
      continue;
    }
    s.date = mentions.front().date;
    s.date_source = DateSource::kExpression;
    for (const auto& m : mentions) s.referenced_dates.push_back(m.date);
    std::sort(s.referenced_dates.begin(), s.referenced_dates.end());
    s.referenced_dates.erase(
        std::unique(s.referenced_dates.begin(), s.referenced_dates.end()),
        s.referenced_dates.end());
  }
  return out;
}

}  // namespace tlsum

#endif  // TLSUM_DATE_TAGGER_H_
