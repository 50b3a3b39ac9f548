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

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpkit/corpus.hpp"

namespace corpkit {

struct AssocConfig {
  // Words whose combined target+reference count is below this are ignored.
  Count min_total_freq = 25;
  // |score| >= strong_threshold marks a strongly associated word.
  double strong_threshold = 1.5;
  // Stand-in for a zero joint count when the other corpus has the word.
  double zero_count_substitute = 0.5;

  void validate() const;
};

struct ScoredValue {
  double score = 0.0;
  bool smoothed = false;
};

// log2( (freq_wt * total_r) / (freq_wr * total_t) ): the difference of the
// word's PMI with the target and with the reference corpus. A single zero
// joint count is replaced by cfg.zero_count_substitute (smoothed = true).
// Throws DomainError when both joint counts are zero or a total is zero.
ScoredValue association_score(Count freq_wt, Count freq_wr, Count total_t, Count total_r,
                              const AssocConfig& cfg = {});

struct AssociationEntry {
  double score = 0.0;
  Count freq_target = 0;
  Count freq_reference = 0;
  bool smoothed = false;
};

struct AssociationTable {
  std::string target_name;
  std::string reference_name;
  std::map<std::string, AssociationEntry> entries;

  const AssociationEntry* find(const std::string& word) const;

  // Score descending, ties by word ascending.
  std::vector<std::pair<std::string, AssociationEntry>> by_score() const;
};

// One entry per word with freq_target + freq_reference >= min_total_freq.
// Throws DomainError if either corpus has no tokens.
AssociationTable build_association_table(const Corpus& target, const Corpus& reference,
                                         const AssocConfig& cfg = {}, unsigned threads = 1);

// Places words between two corpora: positive scores lean toward `a`.
// The math is the target/reference table with a as target and b as
// reference (b is typically a union corpus built with merge_corpora).
AssociationTable contrast_table(const Corpus& a, const Corpus& b, const AssocConfig& cfg = {},
                                unsigned threads = 1);

enum class Direction { kPositive, kNegative };

// kPositive: score >= threshold. kNegative: score <= -threshold.
std::set<std::string> strong_words(const AssociationTable& table, Direction direction,
                                   const AssocConfig& cfg = {});

// Strong words ordered by descending frequency in `corpus` (ties
// lexicographic), truncated to k.
std::vector<std::string> top_frequent_strong(const AssociationTable& table, const Corpus& corpus,
                                             Direction direction, std::size_t k,
                                             const AssocConfig& cfg = {});

}  // namespace corpkit
