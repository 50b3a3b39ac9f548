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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpkit/corpus.hpp"
#include "corpkit/document.hpp"

namespace corpkit {

struct PipelineConfig {
  int min_tokens = 3;
  int per_user_cap = 3;
  // Empty disables query filtering (e.g. for a general reference corpus).
  std::set<Token> query_terms;
  bool drop_urls = true;

  // Throws ConfigError when min_tokens < 1 or per_user_cap < 1.
  void validate() const;
};

enum class DropReason { kDuplicate, kTooShort, kHasUrl, kOverCap, kNoQueryMatch };
inline constexpr std::size_t kDropReasonCount = 5;

std::string_view to_string(DropReason reason);

struct PipelineStats {
  std::uint64_t input = 0;
  std::uint64_t kept = 0;
  std::array<std::uint64_t, kDropReasonCount> dropped{};
  // Undecodable input lines; reported, not part of `input`.
  std::uint64_t decode_errors = 0;

  std::uint64_t dropped_for(DropReason r) const { return dropped[static_cast<std::size_t>(r)]; }
  std::uint64_t total_dropped() const;
  bool reconciles() const { return kept + total_dropped() == input; }

  friend bool operator==(const PipelineStats&, const PipelineStats&) = default;
};

struct FilterVerdict {
  bool pass = true;
  std::optional<DropReason> reason;
};

// Length and URL rules. URL is checked first (on raw text), because the
// tokenizer itself removes URLs and would otherwise report them as short.
FilterVerdict passes_filters(const Document& doc, const PipelineConfig& cfg);

// True iff the document's tokens contain one of `terms` exactly.
bool matches_query(const Document& doc, const std::set<Token>& terms);

// Keeps each author's first k documents in (timestamp, doc_id) order.
// The result is in (timestamp, doc_id) order.
std::vector<Document> cap_per_user(std::span<const Document> docs, int k);

struct PipelineResult {
  Corpus corpus;
  PipelineStats stats;
  // Survivors in (timestamp, doc_id) order.
  std::vector<Document> kept;
};

// query match -> duplicate removal -> length/URL filters -> per-user cap.
// Input order and thread count do not affect the result.
PipelineResult run_pipeline(std::vector<Document> raw, const PipelineConfig& cfg,
                            std::string corpus_name = "corpus", unsigned threads = 1);

struct AnnotationSample {
  std::vector<Document> documents;
  // Fewer documents than requested were available.
  bool shortfall = false;
};

// Uniform sample without replacement. Depends only on the document set and
// the seed, not on input order.
AnnotationSample sample_for_annotation(std::span<const Document> docs, int n,
                                       std::uint64_t seed);

}  // namespace corpkit
