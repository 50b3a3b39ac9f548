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

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "corpkit/association.hpp"
#include "corpkit/corpus.hpp"
#include "corpkit/lexicons.hpp"

namespace corpkit {

using WordSet = std::set<std::string>;

// Percentages of lexicon-word occurrences carrying each label. Labels are not
// exclusive, so percentages need not sum to 100.
struct EmotionProfile {
  std::string corpus_name;
  // Occurrences of corpus tokens found in the lexicon and not excluded.
  Count denominator = 0;
  // Empty when denominator is 0.
  std::map<Emotion, Count> counts;
  std::map<Emotion, double> percent;

  bool empty() const { return denominator == 0; }
};

EmotionProfile emotion_profile(const Corpus& corpus, const EmotionLexicon& lex,
                               const WordSet& exclude = {});

enum class VadDimension { kValence, kArousal, kDominance };
inline constexpr std::array<VadDimension, 3> kAllVadDimensions = {
    VadDimension::kValence, VadDimension::kArousal, VadDimension::kDominance};
std::string_view to_string(VadDimension d);

struct VadExtremes {
  Count low_count = 0;
  Count high_count = 0;
  double low_percent = 0;
  double high_percent = 0;
};

struct VadExtremesProfile {
  std::string corpus_name;
  double low_max = 0.25;
  double high_min = 0.75;
  Count denominator = 0;
  std::array<VadExtremes, 3> dimensions{};

  bool empty() const { return denominator == 0; }
  const VadExtremes& operator[](VadDimension d) const {
    return dimensions[static_cast<std::size_t>(d)];
  }
};

// A score <= low_max is low, >= high_min is high. Throws ConfigError unless
// low_max < high_min.
VadExtremesProfile vad_extremes(const Corpus& corpus, const VadLexicon& lex,
                                double low_max = 0.25, double high_min = 0.75,
                                const WordSet& exclude = {});

struct TrendBin {
  double center = 0;
  std::uint64_t n_words = 0;
  double mean_valence = 0;
  double mean_arousal = 0;
  double mean_dominance = 0;
};

struct TrendCurve {
  double step = 0.5;
  std::uint64_t min_words = 100;
  std::vector<TrendBin> bins;
};

// Index k of the bin whose center k*step satisfies
// score in [center - step/2, center + step/2).
std::int64_t trend_bin_index(double score, double step);

// Word types scored in `table` and present in `lex`, binned by score with
// unweighted VAD means per bin. Bins below min_words types are dropped.
TrendCurve vad_trend(const AssociationTable& table, const VadLexicon& lex, double step = 0.5,
                     std::uint64_t min_words = 100);

// Splits the display name on every non-letter, non-digit code point and
// matches the first piece.
Gender infer_gender(std::string_view display_name, const NameGenderTable& table);

struct GenderSplit {
  Corpus female;
  Corpus male;
  std::uint64_t unknown_count = 0;
};

GenderSplit split_by_gender(std::span<const Document> docs, const NameGenderTable& table,
                            const std::string& base_name = "corpus", unsigned threads = 1);

struct AgeProfile {
  std::string corpus_name;
  Count denominator = 0;
  std::map<AgeGroup, Count> counts;
  std::map<AgeGroup, double> percent;

  bool empty() const { return denominator == 0; }
};

AgeProfile age_profile(const Corpus& corpus, const AgeLexicon& lex, const WordSet& exclude = {});

// Percentage-point differences a - b per label. Throws DomainError when the
// label sets differ (e.g. one profile is empty).
std::map<Emotion, double> profile_diff(const EmotionProfile& a, const EmotionProfile& b);

}  // namespace corpkit
