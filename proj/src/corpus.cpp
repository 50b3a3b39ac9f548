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

#include "corpkit/corpus.hpp"

#include <algorithm>
#include <unordered_set>

#include "corpkit/error.hpp"
#include "corpkit/parallel.hpp"

namespace corpkit {

void CorpusBuilder::add_tokens(std::span<const Token> tokens) {
  ++doc_count_;
  for (const auto& t : tokens) ++freq_[t];
  total_ += tokens.size();
}

void CorpusBuilder::add_text(std::string_view text) {
  std::vector<Token> tokens;
  tokenize_into(text, tokens);
  add_tokens(tokens);
}

void CorpusBuilder::merge(CorpusBuilder&& other) {
  if (freq_.size() < other.freq_.size()) std::swap(freq_, other.freq_);
  for (auto& [token, n] : other.freq_) freq_[token] += n;
  doc_count_ += other.doc_count_;
  total_ += other.total_;
  other = CorpusBuilder{};
}

Corpus::Corpus(std::string name, CorpusBuilder&& builder)
    : name_(std::move(name)),
      doc_count_(builder.doc_count_),
      freq_(std::move(builder.freq_)),
      total_(builder.total_) {
  builder = CorpusBuilder{};
}

Corpus Corpus::from_counts(std::string name, std::uint64_t doc_count, FrequencyMap freq) {
  Corpus c;
  c.name_ = std::move(name);
  c.doc_count_ = doc_count;
  std::erase_if(freq, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [token, n] : freq) c.total_ += n;
  c.freq_ = std::move(freq);
  return c;
}

Count Corpus::freq(const std::string& token) const {
  const auto it = freq_.find(token);
  return it == freq_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, Count>> Corpus::sorted_entries() const {
  std::vector<std::pair<std::string, Count>> out(freq_.begin(), freq_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Corpus Corpus::renamed(std::string name) const {
  Corpus c = *this;
  c.name_ = std::move(name);
  return c;
}

bool Corpus::same_counts(const Corpus& other) const {
  return doc_count_ == other.doc_count_ && total_ == other.total_ && freq_ == other.freq_;
}

Corpus build_corpus(std::string name, std::span<const Document> docs, unsigned threads) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(docs.size());
  for (const auto& d : docs) {
    if (!seen.insert(d.doc_id).second) throw IdentityConflictError(d.doc_id);
  }
  std::vector<CorpusBuilder> shards(shard_count(docs.size(), threads));
  for_each_shard(docs.size(), threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    std::vector<Token> tokens;
    for (std::size_t i = b; i < e; ++i) {
      tokens.clear();
      tokenize_into(docs[i].text, tokens);
      shards[s].add_tokens(tokens);
    }
  });
  CorpusBuilder all;
  for (auto& shard : shards) all.merge(std::move(shard));
  return Corpus(std::move(name), std::move(all));
}

Corpus merge_corpora(std::string name, std::span<const Corpus> parts) {
  FrequencyMap freq;
  std::uint64_t docs = 0;
  for (const auto& p : parts) {
    for (const auto& [token, n] : p.frequencies()) freq[token] += n;
    docs += p.doc_count();
  }
  return Corpus::from_counts(std::move(name), docs, std::move(freq));
}

}  // namespace corpkit
