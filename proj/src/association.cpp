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

#include "corpkit/association.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "corpkit/error.hpp"
#include "corpkit/parallel.hpp"

namespace corpkit {

void AssocConfig::validate() const {
  if (min_total_freq < 1) throw ConfigError("min_total_freq must be >= 1");
  if (!(strong_threshold > 0)) throw ConfigError("strong_threshold must be > 0");
  if (!(zero_count_substitute > 0 && zero_count_substitute < 1)) {
    throw ConfigError("zero_count_substitute must lie in (0, 1)");
  }
}

ScoredValue association_score(Count freq_wt, Count freq_wr, Count total_t, Count total_r,
                              const AssocConfig& cfg) {
  if (total_t == 0 || total_r == 0) throw DomainError("association score needs non-empty corpora");
  if (freq_wt == 0 && freq_wr == 0) throw DomainError("word absent from both corpora");
  ScoredValue out;
  double wt = static_cast<double>(freq_wt);
  double wr = static_cast<double>(freq_wr);
  if (freq_wt == 0) {
    wt = cfg.zero_count_substitute;
    out.smoothed = true;
  } else if (freq_wr == 0) {
    wr = cfg.zero_count_substitute;
    out.smoothed = true;
  }
  // Difference of logs rather than log of a quotient: swapping the corpora
  // then negates the score exactly.
  using R = long double;
  const R num = R(wt) * R(total_r);
  const R den = R(wr) * R(total_t);
  out.score = static_cast<double>(std::log2(num) - std::log2(den));
  return out;
}

const AssociationEntry* AssociationTable::find(const std::string& word) const {
  const auto it = entries.find(word);
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, AssociationEntry>> AssociationTable::by_score() const {
  std::vector<std::pair<std::string, AssociationEntry>> out(entries.begin(), entries.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second.score > b.second.score;
  });
  return out;
}

AssociationTable build_association_table(const Corpus& target, const Corpus& reference,
                                         const AssocConfig& cfg, unsigned threads) {
  cfg.validate();
  if (target.empty()) throw DomainError("target corpus '" + target.name() + "' has no tokens");
  if (reference.empty()) {
    throw DomainError("reference corpus '" + reference.name() + "' has no tokens");
  }

  std::vector<std::string> vocabulary;
  vocabulary.reserve(target.vocabulary_size() + reference.vocabulary_size());
  for (const auto& [w, n] : target.frequencies()) vocabulary.push_back(w);
  for (const auto& [w, n] : reference.frequencies()) {
    if (target.freq(w) == 0) vocabulary.push_back(w);
  }
  std::sort(vocabulary.begin(), vocabulary.end());

  std::vector<std::vector<std::pair<std::string, AssociationEntry>>> shards(
      shard_count(vocabulary.size(), threads));
  for_each_shard(vocabulary.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto& w = vocabulary[i];
      const Count ft = target.freq(w);
      const Count fr = reference.freq(w);
      if (ft + fr < cfg.min_total_freq) continue;
      const auto sv = association_score(ft, fr, target.total_tokens(), reference.total_tokens(), cfg);
      shards[s].push_back({w, {sv.score, ft, fr, sv.smoothed}});
    }
  });

  AssociationTable table;
  table.target_name = target.name();
  table.reference_name = reference.name();
  for (auto& shard : shards) {
    for (auto& [w, entry] : shard) table.entries.emplace_hint(table.entries.end(), std::move(w), entry);
  }
  return table;
}

AssociationTable contrast_table(const Corpus& a, const Corpus& b, const AssocConfig& cfg,
                                unsigned threads) {
  return build_association_table(a, b, cfg, threads);
}

std::set<std::string> strong_words(const AssociationTable& table, Direction direction,
                                   const AssocConfig& cfg) {
  std::set<std::string> out;
  for (const auto& [w, e] : table.entries) {
    const bool strong = direction == Direction::kPositive ? e.score >= cfg.strong_threshold
                                                          : e.score <= -cfg.strong_threshold;
    if (strong) out.insert(w);
  }
  return out;
}

std::vector<std::string> top_frequent_strong(const AssociationTable& table, const Corpus& corpus,
                                             Direction direction, std::size_t k,
                                             const AssocConfig& cfg) {
  if (k < 1) throw ConfigError("k must be >= 1");
  std::vector<std::pair<Count, std::string>> ranked;
  for (const auto& w : strong_words(table, direction, cfg)) ranked.emplace_back(corpus.freq(w), w);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return std::tie(b.first, a.second) < std::tie(a.first, b.second);
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.push_back(ranked[i].second);
  return out;
}

}  // namespace corpkit
