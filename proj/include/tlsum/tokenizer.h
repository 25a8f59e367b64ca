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

#ifndef TLSUM_TOKENIZER_H_
#define TLSUM_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace tlsum {

// Bytes >= 0x80 are kept inside tokens so UTF-8 words are not split.
inline bool IsTokenByte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

// Lowercases ASCII and splits on maximal runs of non-alphanumeric bytes.
// Shared by vectorization, keyword filtering and ROUGE.
inline std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (IsTokenByte(c)) {
      current.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : ch);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// Tokens of several sentences, concatenated in order.
template <typename Range>
std::vector<std::string> TokenizeAll(const Range& sentences) {
  std::vector<std::string> tokens;
  for (const auto& s : sentences) {
    auto part = Tokenize(s);
    tokens.insert(tokens.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return tokens;
}

}  // namespace tlsum

#endif  // TLSUM_TOKENIZER_H_
