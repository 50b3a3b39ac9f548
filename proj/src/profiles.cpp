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

#include "corpkit/profiles.hpp"

#include <cmath>

#include "corpkit/error.hpp"
#include "corpkit/text.hpp"

namespace corpkit {
namespace {

double percent_of(Count num, Count denom) {
  return 100.0 * static_cast<double>(num) / static_cast<double>(denom);
}

double score_of(const VadScores& s, VadDimension d) {
  switch (d) {
    case VadDimension::kValence: return s.valence;
    case VadDimension::kArousal: return s.arousal;
    case VadDimension::kDominance: return s.dominance;
  }
  return 0;
}

}  // namespace

EmotionProfile emotion_profile(const Corpus& corpus, const EmotionLexicon& lex,
                               const WordSet& exclude) {
  EmotionProfile p;
  p.corpus_name = corpus.name();
  std::array<Count, kEmotionCount> counts{};
  for (const auto& [token, n] : corpus.frequencies()) {
    const auto* labels = lex.find(token);
    if (!labels || exclude.contains(token)) continue;
    p.denominator += n;
    for (auto e : kAllEmotions) {
      if (labels->contains(e)) counts[static_cast<std::size_t>(e)] += n;
    }
  }
  if (p.empty()) return p;
  for (auto e : kAllEmotions) {
    const Count c = counts[static_cast<std::size_t>(e)];
    p.counts[e] = c;
    p.percent[e] = percent_of(c, p.denominator);
  }
  return p;
}

std::string_view to_string(VadDimension d) {
  switch (d) {
    case VadDimension::kValence: return "valence";
    case VadDimension::kArousal: return "arousal";
    case VadDimension::kDominance: return "dominance";
  }
  return "unknown";
}

VadExtremesProfile vad_extremes(const Corpus& corpus, const VadLexicon& lex, double low_max,
                                double high_min, const WordSet& exclude) {
  if (!(low_max < high_min)) throw ConfigError("VAD low threshold must be below high threshold");
  VadExtremesProfile p;
  p.corpus_name = corpus.name();
  p.low_max = low_max;
  p.high_min = high_min;
  for (const auto& [token, n] : corpus.frequencies()) {
    const auto* scores = lex.find(token);
    if (!scores || exclude.contains(token)) continue;
    p.denominator += n;
    for (auto d : kAllVadDimensions) {
      const double s = score_of(*scores, d);
      auto& slot = p.dimensions[static_cast<std::size_t>(d)];
      if (s <= low_max) slot.low_count += n;
      if (s >= high_min) slot.high_count += n;
    }
  }
  if (!p.empty()) {
    for (auto& slot : p.dimensions) {
      slot.low_percent = percent_of(slot.low_count, p.denominator);
      slot.high_percent = percent_of(slot.high_count, p.denominator);
    }
  }
  return p;
}

std::int64_t trend_bin_index(double score, double step) {
  return static_cast<std::int64_t>(std::floor(score / step + 0.5));
}

TrendCurve vad_trend(const AssociationTable& table, const VadLexicon& lex, double step,
                     std::uint64_t min_words) {
  if (!(step > 0)) throw ConfigError("bin step must be > 0");
  if (min_words < 1) throw ConfigError("min_words must be >= 1");

  struct Acc {
    std::uint64_t n = 0;
    double v = 0, a = 0, d = 0;
  };
  // Table entries iterate in word order, so sums are reproducible.
  std::map<std::int64_t, Acc> bins;
  for (const auto& [word, entry] : table.entries) {
    const auto* s = lex.find(word);
    if (!s) continue;
    auto& acc = bins[trend_bin_index(entry.score, step)];
    ++acc.n;
    acc.v += s->valence;
    acc.a += s->arousal;
    acc.d += s->dominance;
  }
  TrendCurve curve;
  curve.step = step;
  curve.min_words = min_words;
  for (const auto& [index, acc] : bins) {
    if (acc.n < min_words) continue;
    const double n = static_cast<double>(acc.n);
    curve.bins.push_back({static_cast<double>(index) * step, acc.n, acc.v / n, acc.a / n, acc.d / n});
  }
  return curve;
}

Gender infer_gender(std::string_view display_name, const NameGenderTable& table) {
  const auto pieces = split_alnum(display_name);
  if (pieces.empty()) return Gender::kUnknown;
  return table.classify(pieces.front());
}

GenderSplit split_by_gender(std::span<const Document> docs, const NameGenderTable& table,
                            const std::string& base_name, unsigned threads) {
  std::vector<Document> female, male;
  GenderSplit out;
  for (const auto& d : docs) {
    switch (infer_gender(d.user_display_name, table)) {
      case Gender::kFemale: female.push_back(d); break;
      case Gender::kMale: male.push_back(d); break;
      case Gender::kUnknown: ++out.unknown_count; break;
    }
  }
  out.female = build_corpus(base_name + ".female", female, threads);
  out.male = build_corpus(base_name + ".male", male, threads);
  return out;
}

AgeProfile age_profile(const Corpus& corpus, const AgeLexicon& lex, const WordSet& exclude) {
  AgeProfile p;
  p.corpus_name = corpus.name();
  std::array<Count, kAgeGroupCount> counts{};
  for (const auto& [token, n] : corpus.frequencies()) {
    const auto* groups = lex.find(token);
    if (!groups || exclude.contains(token)) continue;
    p.denominator += n;
    for (std::size_t g = 0; g < kAgeGroupCount; ++g) {
      if (groups->test(g)) counts[g] += n;
    }
  }
  if (p.empty()) return p;
  for (auto g : kAllAgeGroups) {
    const Count c = counts[static_cast<std::size_t>(g)];
    p.counts[g] = c;
    p.percent[g] = percent_of(c, p.denominator);
  }
  return p;
}

std::map<Emotion, double> profile_diff(const EmotionProfile& a, const EmotionProfile& b) {
  std::map<Emotion, double> out;
  if (a.percent.size() != b.percent.size()) {
    throw DomainError("profile label sets differ ('" + a.corpus_name + "' vs '" + b.corpus_name + "')");
  }
  for (const auto& [label, pa] : a.percent) {
    const auto it = b.percent.find(label);
    if (it == b.percent.end()) {
      throw DomainError("label '" + std::string(to_string(label)) + "' missing from '" +
                        b.corpus_name + "'");
    }
    out[label] = pa - it->second;
  }
  return out;
}

}  // namespace corpkit
