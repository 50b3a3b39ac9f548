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
#include <bitset>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace corpkit {

// ---------------------------------------------------------------------------
// Emotion lexicon: binary word-emotion associations (NRC EmoLex flat format).

enum class Emotion {
  kAnger,
  kAnticipation,
  kDisgust,
  kFear,
  kJoy,
  kSadness,
  kSurprise,
  kTrust,
  kPositive,
  kNegative,
};
inline constexpr std::size_t kEmotionCount = 10;
inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::kAnger, Emotion::kAnticipation, Emotion::kDisgust, Emotion::kFear,
    Emotion::kJoy,   Emotion::kSadness,      Emotion::kSurprise, Emotion::kTrust,
    Emotion::kPositive, Emotion::kNegative};

std::string_view to_string(Emotion e);
std::optional<Emotion> parse_emotion(std::string_view name);

class EmotionSet {
 public:
  EmotionSet() = default;
  EmotionSet(std::initializer_list<Emotion> labels) {
    for (auto e : labels) insert(e);
  }
  void insert(Emotion e) { bits_.set(static_cast<std::size_t>(e)); }
  bool contains(Emotion e) const { return bits_.test(static_cast<std::size_t>(e)); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }
  friend bool operator==(const EmotionSet&, const EmotionSet&) = default;

 private:
  std::bitset<kEmotionCount> bits_;
};

struct EmotionLexicon {
  // Words with no labels are kept: lexicon membership sets the denominator.
  std::unordered_map<std::string, EmotionSet> entries;

  const EmotionSet* find(const std::string& word) const;
};

// word TAB emotion TAB {0,1}. Throws LoadError with the line number.
EmotionLexicon load_emotion_lexicon(std::istream& in, const std::string& source = "<stream>");
EmotionLexicon load_emotion_lexicon_file(const std::string& path);

// ---------------------------------------------------------------------------
// Valence, arousal and dominance in [0, 1].

struct VadScores {
  double valence = 0;
  double arousal = 0;
  double dominance = 0;
  friend bool operator==(const VadScores&, const VadScores&) = default;
};

struct VadLexicon {
  std::unordered_map<std::string, VadScores> entries;

  const VadScores* find(const std::string& word) const;
};

// word TAB valence TAB arousal TAB dominance, optional header row.
// Rejects out-of-range values and repeated words.
VadLexicon load_vad_lexicon(std::istream& in, const std::string& source = "<stream>");
VadLexicon load_vad_lexicon_file(const std::string& path);

// ---------------------------------------------------------------------------
// Word-age associations.

enum class AgeGroup { k13to18, k19to22, k23to29, k30plus };
inline constexpr std::size_t kAgeGroupCount = 4;
inline constexpr std::array<AgeGroup, kAgeGroupCount> kAllAgeGroups = {
    AgeGroup::k13to18, AgeGroup::k19to22, AgeGroup::k23to29, AgeGroup::k30plus};

std::string_view to_string(AgeGroup g);
std::optional<AgeGroup> parse_age_group(std::string_view name);

using AgeGroupSet = std::bitset<kAgeGroupCount>;

struct AgeLoadSummary {
  std::uint64_t rows = 0;
  // Distinct terms that are a single alpha-numeric token, any score.
  std::uint64_t alnum_terms = 0;
  std::uint64_t dropped_not_alnum = 0;
  std::uint64_t dropped_not_positive = 0;
  std::uint64_t dropped_not_significant = 0;
  // Words kept per group (significantly positive).
  std::array<std::uint64_t, kAgeGroupCount> per_group{};
};

struct AgeLexicon {
  // Membership = significantly positively associated with the group.
  std::unordered_map<std::string, AgeGroupSet> entries;
  AgeLoadSummary summary;

  const AgeGroupSet* find(const std::string& word) const;
};

// CSV rows term,group,score,pvalue (optional header). Keeps single
// alpha-numeric terms with score > 0 and p <= alpha.
AgeLexicon load_age_lexicon(std::istream& in, double alpha = 0.05,
                            const std::string& source = "<stream>");
AgeLexicon load_age_lexicon_file(const std::string& path, double alpha = 0.05);

// ---------------------------------------------------------------------------
// First-name gender table built from per-year name-count files.

enum class Gender { kFemale, kMale, kUnknown };
std::string_view to_string(Gender g);

struct NameGenderTable {
  std::unordered_set<std::string> female;
  std::unordered_set<std::string> male;

  Gender classify(const std::string& lowercase_name) const;
};

struct NameTableOptions {
  int year_from = 1940;
  int year_to = 2017;
  // A name needs strictly more than this many occurrences in range.
  std::uint64_t min_count = 100;
  // Share of occurrences required for one gender (inclusive).
  double purity = 0.95;
  unsigned threads = 1;
};

struct NameCountFile {
  int year = 0;
  std::filesystem::path path;
};

// yobYYYY.txt files in `dir`, sorted by year.
std::vector<NameCountFile> find_name_count_files(const std::filesystem::path& dir);

NameGenderTable build_name_gender_table(std::span<const NameCountFile> files,
                                        const NameTableOptions& options = {});
NameGenderTable build_name_gender_table(const std::filesystem::path& dir,
                                        const NameTableOptions& options = {});

// Cached table: "name TAB F|M" lines sorted by name.
void write_name_gender_table(std::ostream& out, const NameGenderTable& table);
NameGenderTable load_name_gender_table(std::istream& in, const std::string& source = "<stream>");
NameGenderTable load_name_gender_table_file(const std::string& path);

}  // namespace corpkit
