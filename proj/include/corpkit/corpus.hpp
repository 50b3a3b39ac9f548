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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corpkit/document.hpp"
#include "corpkit/text.hpp"

namespace corpkit {

using Count = std::uint64_t;
using FrequencyMap = std::unordered_map<std::string, Count>;

// Mutable accumulator of token counts. Merging is associative and
// commutative, so shards may be counted independently.
class CorpusBuilder {
 public:
  void add_tokens(std::span<const Token> tokens);
  void add_text(std::string_view text);
  void add_document(const Document& doc) { add_text(doc.text); }
  void merge(CorpusBuilder&& other);

  std::uint64_t doc_count() const { return doc_count_; }

 private:
  friend class Corpus;
  FrequencyMap freq_;
  std::uint64_t doc_count_ = 0;
  Count total_ = 0;
};

// Immutable token-frequency view over a set of documents.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::string name, CorpusBuilder&& builder);

  // Direct construction from counts. Zero counts are dropped.
  static Corpus from_counts(std::string name, std::uint64_t doc_count, FrequencyMap freq);

  const std::string& name() const { return name_; }
  std::uint64_t doc_count() const { return doc_count_; }
  Count total_tokens() const { return total_; }
  std::size_t vocabulary_size() const { return freq_.size(); }
  bool empty() const { return total_ == 0; }

  Count freq(const std::string& token) const;
  const FrequencyMap& frequencies() const { return freq_; }

  // (token, count) pairs ordered by token.
  std::vector<std::pair<std::string, Count>> sorted_entries() const;

  Corpus renamed(std::string name) const;

  // Same counts and doc_count; the name is not compared.
  bool same_counts(const Corpus& other) const;

 private:
  std::string name_;
  std::uint64_t doc_count_ = 0;
  FrequencyMap freq_;
  Count total_ = 0;
};

// Counts every token occurrence in `docs`. Throws IdentityConflictError on a
// repeated doc_id. The result does not depend on `threads` or document order.
Corpus build_corpus(std::string name, std::span<const Document> docs, unsigned threads = 1);

// Pools the counts of several corpora.
Corpus merge_corpora(std::string name, std::span<const Corpus> parts);

}  // namespace corpkit
