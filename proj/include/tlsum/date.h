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

#ifndef TLSUM_DATE_H_
#define TLSUM_DATE_H_

#include <chrono>
#include <compare>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace tlsum {

// A calendar day, stored as days since 1970-01-01.
class Date {
 public:
  constexpr Date() = default;

  static constexpr Date FromDayNumber(int days) { return Date(days); }

  // Returns nullopt for impossible dates such as 2011-02-30.
  static std::optional<Date> FromYmd(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{month},
                                          std::chrono::day{day}};
    if (!ymd.ok()) return std::nullopt;
    return Date(std::chrono::sys_days{ymd}.time_since_epoch().count());
  }

  // Strict "YYYY-MM-DD".
  static std::optional<Date> ParseIso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
      return std::nullopt;
    }
    int fields[3] = {0, 0, 0};
    const std::size_t starts[3] = {0, 5, 8};
    const std::size_t lengths[3] = {4, 2, 2};
    for (int f = 0; f < 3; ++f) {
      for (std::size_t i = 0; i < lengths[f]; ++i) {
        const char c = text[starts[f] + i];
        if (c < '0' || c > '9') return std::nullopt;
        fields[f] = fields[f] * 10 + (c - '0');
      }
    }
    return FromYmd(fields[0], static_cast<unsigned>(fields[1]),
                   static_cast<unsigned>(fields[2]));
  }

  constexpr int day_number() const { return days_; }

  std::chrono::year_month_day ymd() const {
    return std::chrono::year_month_day{
        std::chrono::sys_days{std::chrono::days{days_}}};
  }

  // 0 = Sunday, ..., 6 = Saturday.
  unsigned weekday() const {
    return std::chrono::weekday{std::chrono::sys_days{std::chrono::days{days_}}}
        .c_encoding();
  }

  std::string ToIso() const {
    const auto d = ymd();
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
  }

  constexpr Date operator+(int days) const { return Date(days_ + days); }
  constexpr Date operator-(int days) const { return Date(days_ - days); }
  constexpr int operator-(Date other) const { return days_ - other.days_; }

  constexpr auto operator<=>(const Date&) const = default;

 private:
  constexpr explicit Date(int days) : days_(days) {}

  int days_ = 0;
};

// |a - b| in days.
inline int DayGap(Date a, Date b) { return std::abs(a - b); }

}  // namespace tlsum

template <>
struct std::hash<tlsum::Date> {
  std::size_t operator()(tlsum::Date d) const noexcept {
    return std::hash<int>{}(d.day_number());
  }
};

#endif  // TLSUM_DATE_H_
