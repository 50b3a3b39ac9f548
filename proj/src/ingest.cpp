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

#include "corpkit/ingest.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "corpkit/error.hpp"
#include "corpkit/parallel.hpp"

namespace corpkit {
namespace {

void record_drop(PipelineStats& stats, DropReason r) {
  ++stats.dropped[static_cast<std::size_t>(r)];
}

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined, this is not.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

void PipelineConfig::validate() const {
  if (min_tokens < 1) throw ConfigError("min_tokens must be >= 1");
  if (per_user_cap < 1) throw ConfigError("per_user_cap must be >= 1");
}

std::string_view to_string(DropReason reason) {
  switch (reason) {
    case DropReason::kDuplicate: return "duplicate";
    case DropReason::kTooShort: return "too_short";
    case DropReason::kHasUrl: return "has_url";
    case DropReason::kOverCap: return "over_cap";
    case DropReason::kNoQueryMatch: return "no_query_match";
  }
  return "unknown";
}

std::uint64_t PipelineStats::total_dropped() const {
  std::uint64_t n = 0;
  for (auto d : dropped) n += d;
  return n;
}

FilterVerdict passes_filters(const Document& doc, const PipelineConfig& cfg) {
  if (cfg.drop_urls && contains_url(doc.text)) return {false, DropReason::kHasUrl};
  if (count_tokens(doc.text) < static_cast<std::size_t>(cfg.min_tokens)) {
    return {false, DropReason::kTooShort};
  }
  return {};
}

bool matches_query(const Document& doc, const std::set<Token>& terms) {
  for (const auto& t : tokenize(doc.text)) {
    if (terms.contains(t)) return true;
  }
  return false;
}

std::vector<Document> cap_per_user(std::span<const Document> docs, int k) {
  if (k < 1) throw ConfigError("per-user cap must be >= 1");
  std::vector<const Document*> order;
  order.reserve(docs.size());
  for (const auto& d : docs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(), [](const Document* a, const Document* b) {
    return chronological_less(*a, *b);
  });
  std::unordered_map<std::string_view, int> per_author;
  std::vector<Document> out;
  for (const Document* d : order) {
    if (++per_author[d->author_id] <= k) out.push_back(*d);
  }
  return out;
}

PipelineResult run_pipeline(std::vector<Document> raw, const PipelineConfig& cfg,
                            std::string corpus_name, unsigned threads) {
  cfg.validate();
  PipelineResult result;
  result.stats.input = raw.size();

  std::sort(raw.begin(), raw.end(), chronological_less);
  {
    std::unordered_set<std::string_view> ids;
    ids.reserve(raw.size());
    for (const auto& d : raw) {
      if (!ids.insert(d.doc_id).second) throw IdentityConflictError(d.doc_id);
    }
  }

  // Per-document verdicts are independent, so they are computed in parallel;
  // dedup and capping walk the sorted sequence afterwards.
  const std::size_t n = raw.size();
  std::vector<char> query_ok(n, 1);
  std::vector<FilterVerdict> verdicts(n);
  std::vector<std::string> keys(n);
  for_each_shard(n, threads, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (!cfg.query_terms.empty()) query_ok[i] = matches_query(raw[i], cfg.query_terms);
      if (!query_ok[i]) continue;
      keys[i] = duplicate_key(raw[i].text);
      verdicts[i] = passes_filters(raw[i], cfg);
    }
  });

  std::unordered_set<std::string_view> seen_text;
  // Owning keys: survivors are moved out of `raw` below.
  std::unordered_map<std::string, int> per_author;
  for (std::size_t i = 0; i < n; ++i) {
    if (!query_ok[i]) {
      record_drop(result.stats, DropReason::kNoQueryMatch);
      continue;
    }
    if (!seen_text.insert(keys[i]).second) {
      record_drop(result.stats, DropReason::kDuplicate);
      continue;
    }
    if (!verdicts[i].pass) {
      record_drop(result.stats, *verdicts[i].reason);
      continue;
    }
    if (++per_author[raw[i].author_id] > cfg.per_user_cap) {
      record_drop(result.stats, DropReason::kOverCap);
      continue;
    }
    result.kept.push_back(std::move(raw[i]));
  }
  result.stats.kept = result.kept.size();
  result.corpus = build_corpus(std::move(corpus_name), result.kept, threads);
  return result;
}

AnnotationSample sample_for_annotation(std::span<const Document> docs, int n,
                                       std::uint64_t seed) {
  if (n < 1) throw ConfigError("sample size must be >= 1");
  std::vector<const Document*> pool;
  pool.reserve(docs.size());
  for (const auto& d : docs) pool.push_back(&d);
  std::sort(pool.begin(), pool.end(),
            [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });

  AnnotationSample out;
  const std::size_t want = static_cast<std::size_t>(n);
  out.shortfall = want > pool.size();
  const std::size_t take = std::min(want, pool.size());
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + bounded(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.documents.push_back(*pool[i]);
  }
  return out;
}

}  // namespace corpkit
