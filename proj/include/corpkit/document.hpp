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

#include <chrono>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corpkit {

using Timestamp = std::chrono::sys_time<std::chrono::microseconds>;

struct Document {
  std::string doc_id;
  std::string author_id;
  std::string user_display_name;
  Timestamp timestamp{};
  std::string text;

  friend bool operator==(const Document&, const Document&) = default;
};

// Orders by (timestamp, doc_id); every deterministic pass uses this order.
bool chronological_less(const Document& a, const Document& b);

// RFC 3339 date-time ("2019-02-14T08:30:00Z", "...T08:30:00.25+01:00").
std::optional<Timestamp> parse_rfc3339(std::string_view text);

// UTC, "Z" suffix, fractional seconds only when non-zero.
std::string format_rfc3339(Timestamp t);

struct DecodeIssue {
  std::size_t line;
  std::string message;
};

struct DocumentReadResult {
  std::vector<Document> documents;
  std::size_t malformed = 0;
  // First issues only; `malformed` has the full count.
  std::vector<DecodeIssue> issues;
};

// One JSON object per line with string fields id, author_id, user_name,
// timestamp, text. Blank lines are ignored; malformed lines are counted and
// skipped.
DocumentReadResult read_documents(std::istream& in);
DocumentReadResult read_documents_file(const std::string& path);

// Parses one line. On failure returns nullopt and fills `error`.
std::optional<Document> parse_document_line(std::string_view line, std::string* error);

void write_document(std::ostream& out, const Document& doc);
void write_documents(std::ostream& out, std::span<const Document> docs);

}  // namespace corpkit
