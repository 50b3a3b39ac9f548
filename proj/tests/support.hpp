// Copyright 2026 The corpkit Authors.
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

#pragma once

// Random inputs shared by the property tests.

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "corpkit/document.hpp"

namespace corpkit::testing {

inline Timestamp at_seconds(std::int64_t s) {
  return Timestamp{} + std::chrono::seconds(1546300800 + s);
}

inline Document doc(std::string id, std::string text, std::string author = "u",
                    std::int64_t t = 0, std::string user = "someone") {
  return Document{std::move(id), std::move(author), std::move(user), at_seconds(t),
                  std::move(text)};
}

// Token lists over a small vocabulary with skewed frequencies.
inline std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                              std::size_t vocab = 40) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::geometric_distribution<std::size_t> pick(0.08);
  std::vector<std::string> out(len(rng));
  for (auto& t : out) t = "w" + std::to_string(pick(rng) % vocab);
  return out;
}

inline std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

// Document stream exercising every pipeline rule.
inline std::vector<Document> random_stream(std::mt19937_64& rng, std::size_t n) {
  static const std::vector<std::string> words = {"lonely", "solitude", "quiet", "night",
                                                 "sad",    "peace",    "the",   "Lonely",
                                                 "walk",   "i",        "feel",  "loneliness"};
  std::uniform_int_distribution<std::size_t> word(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<int> authors(0, 6);
  std::uniform_int_distribution<int> when(0, 50);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Document> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    if (!out.empty() && u(rng) < 0.15) {
      text = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)].text;
      if (u(rng) < 0.5) text = "  " + text + " ";
    } else {
      const int l = len(rng);
      for (int k = 0; k < l; ++k) text += (k ? " " : "") + words[word(rng)];
      if (u(rng) < 0.1) text += " http://t.co/" + std::to_string(i);
      if (u(rng) < 0.05) text = "see www.example.org " + text;
    }
    out.push_back(doc("d" + std::to_string(i), text, "a" + std::to_string(authors(rng)), when(rng)));
  }
  return out;
}

}  // namespace corpkit::testing
