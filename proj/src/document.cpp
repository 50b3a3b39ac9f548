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

#include "corpkit/document.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <tuple>

#include "corpkit/error.hpp"
#include "corpkit/text.hpp"
#include "json.hpp"

namespace corpkit {
namespace {

constexpr std::size_t kMaxIssues = 20;

bool parse_digits(std::string_view s, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

bool chronological_less(const Document& a, const Document& b) {
  return std::tie(a.timestamp, a.doc_id) < std::tie(b.timestamp, b.doc_id);
}

std::optional<Timestamp> parse_rfc3339(std::string_view s) {
  using namespace std::chrono;
  int y, mo, d, h, mi, sec;
  if (!parse_digits(s, 0, 4, y) || s.size() < 19 || s[4] != '-' ||
      !parse_digits(s, 5, 2, mo) || s[7] != '-' || !parse_digits(s, 8, 2, d) ||
      (s[10] != 'T' && s[10] != 't' && s[10] != ' ') ||
      !parse_digits(s, 11, 2, h) || s[13] != ':' || !parse_digits(s, 14, 2, mi) ||
      s[16] != ':' || !parse_digits(s, 17, 2, sec)) {
    return std::nullopt;
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || sec > 60) return std::nullopt;

  std::size_t pos = 19;
  std::int64_t micros = 0;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      if (digits < 6) micros = micros * 10 + (s[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) return std::nullopt;
    for (std::size_t i = digits; i < 6; ++i) micros *= 10;
  }
  if (pos >= s.size()) return std::nullopt;
  minutes offset{0};
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    int oh, om;
    if (!parse_digits(s, pos + 1, 2, oh) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
        !parse_digits(s, pos + 4, 2, om) || oh > 23 || om > 59) {
      return std::nullopt;
    }
    offset = hours{oh} + minutes{om};
    if (s[pos] == '-') offset = -offset;
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;

  const sys_days day_point{ymd};
  return time_point_cast<microseconds>(day_point) + hours{h} + minutes{mi} +
         seconds{sec} + microseconds{micros} - offset;
}

std::string format_rfc3339(Timestamp t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day ymd{day_point};
  const hh_mm_ss<microseconds> tod{t - day_point};
  char buf[64];
  const auto us = tod.subseconds().count();
  if (us == 0) {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()));
  } else {
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%06lldZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()), static_cast<long long>(us));
  }
  return buf;
}

std::optional<Document> parse_document_line(std::string_view line, std::string* error) {
  auto fail = [&](std::string msg) -> std::optional<Document> {
    if (error) *error = std::move(msg);
    return std::nullopt;
  };
  const auto json = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) return fail("invalid JSON");
  if (!json.is_object()) return fail("expected a JSON object");

  auto field = [&](const char* key, std::string& out) -> bool {
    const auto it = json.find(key);
    if (it == json.end() || !it->is_string()) return false;
    out = it->get<std::string>();
    return true;
  };
  Document doc;
  std::string ts;
  if (!field("id", doc.doc_id)) return fail("missing string field 'id'");
  if (!field("author_id", doc.author_id)) return fail("missing string field 'author_id'");
  if (!field("user_name", doc.user_display_name)) return fail("missing string field 'user_name'");
  if (!field("timestamp", ts)) return fail("missing string field 'timestamp'");
  if (!field("text", doc.text)) return fail("missing string field 'text'");
  if (doc.doc_id.empty()) return fail("empty 'id'");
  const auto parsed = parse_rfc3339(ts);
  if (!parsed) return fail("timestamp is not RFC 3339: '" + ts + "'");
  doc.timestamp = *parsed;
  if (trim(doc.text).empty()) return fail("empty text");
  return doc;
}

DocumentReadResult read_documents(std::istream& in) {
  DocumentReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::string error;
    if (auto doc = parse_document_line(line, &error)) {
      result.documents.push_back(std::move(*doc));
    } else {
      ++result.malformed;
      if (result.issues.size() < kMaxIssues) result.issues.push_back({line_no, error});
    }
  }
  return result;
}

DocumentReadResult read_documents_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  return read_documents(in);
}

void write_document(std::ostream& out, const Document& doc) {
  nlohmann::ordered_json j;
  j["id"] = doc.doc_id;
  j["author_id"] = doc.author_id;
  j["user_name"] = doc.user_display_name;
  j["timestamp"] = format_rfc3339(doc.timestamp);
  j["text"] = doc.text;
  out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

void write_documents(std::ostream& out, std::span<const Document> docs) {
  for (const auto& doc : docs) write_document(out, doc);
}

}  // namespace corpkit
