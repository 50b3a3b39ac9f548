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

#include "corpkit/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace corpkit {
namespace {

constexpr UChar32 kRightSingleQuote = 0x2019;

struct CodePoint {
  UChar32 value;  // negative for ill-formed input
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    std::int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back({c, static_cast<std::size_t>(start), static_cast<std::size_t>(i)});
  }
  return out;
}

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

bool is_letter_or_digit(UChar32 c) {
  if (c < 0) return false;
  return u_isalpha(c) || u_charType(c) == U_DECIMAL_DIGIT_NUMBER;
}

bool is_word_char(UChar32 c) {
  if (c < 0) return false;
  if (is_letter_or_digit(c)) return true;
  const auto type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

bool is_apostrophe(UChar32 c) { return c == '\'' || c == kRightSingleQuote; }

bool is_handle_char(UChar32 c) { return c == '_' || is_word_char(c); }

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  std::int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, c);
  out.append(buf, static_cast<std::size_t>(n));
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ascii_scheme_char(char c) {
  return ascii_alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' ||
         c == '.';
}

// Calls fn(begin, end) for every maximal run of non-whitespace code points.
template <typename Fn>
void for_each_chunk(const std::vector<CodePoint>& cps, Fn&& fn) {
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i].value)) ++i;
    std::size_t j = i;
    while (j < cps.size() && !is_space(cps[j].value)) ++j;
    if (j > i) fn(i, j);
    i = j;
  }
}

template <typename Sink>
void tokenize_impl(std::string_view text, Sink&& sink) {
  const auto cps = decode(text);
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      sink(std::move(current));
      current.clear();
    }
  };
  for_each_chunk(cps, [&](std::size_t begin, std::size_t end) {
    const auto chunk =
        text.substr(cps[begin].begin, cps[end - 1].end - cps[begin].begin);
    if (is_url_shaped(chunk)) return;
    for (std::size_t i = begin; i < end; ++i) {
      const UChar32 c = cps[i].value;
      const bool prev_word = i > begin && is_word_char(cps[i - 1].value);
      const bool has_next = i + 1 < end;
      if (c == '@' && !prev_word && has_next && is_handle_char(cps[i + 1].value)) {
        flush();
        ++i;
        while (i + 1 < end && is_handle_char(cps[i + 1].value)) ++i;
        continue;
      }
      if (is_word_char(c)) {
        append_utf8(current, u_tolower(c));
      } else if (is_apostrophe(c) && !current.empty() && has_next &&
                 is_word_char(cps[i + 1].value)) {
        current.push_back('\'');
      } else {
        flush();
      }
    }
    flush();
  });
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  tokenize_into(text, out);
  return out;
}

void tokenize_into(std::string_view text, std::vector<Token>& out) {
  tokenize_impl(text, [&](std::string&& token) { out.push_back(std::move(token)); });
}

std::size_t count_tokens(std::string_view text) {
  std::size_t n = 0;
  tokenize_impl(text, [&](std::string&&) { ++n; });
  return n;
}

bool is_url_shaped(std::string_view chunk) {
  const auto sep = chunk.find("://");
  if (sep != std::string_view::npos && sep > 0) {
    std::size_t start = sep;
    while (start > 0 && ascii_scheme_char(chunk[start - 1])) --start;
    if (start < sep && ascii_alpha(chunk[start])) return true;
  }
  std::size_t lead = 0;
  while (lead < chunk.size() &&
         (chunk[lead] == '(' || chunk[lead] == '[' || chunk[lead] == '<' ||
          chunk[lead] == '"' || chunk[lead] == '\'')) {
    ++lead;
  }
  if (chunk.size() > lead + 4) {
    return ascii_lower(chunk[lead]) == 'w' && ascii_lower(chunk[lead + 1]) == 'w' &&
           ascii_lower(chunk[lead + 2]) == 'w' && chunk[lead + 3] == '.';
  }
  return false;
}

bool contains_url(std::string_view text) {
  const auto cps = decode(text);
  bool found = false;
  for_each_chunk(cps, [&](std::size_t begin, std::size_t end) {
    if (found) return;
    found = is_url_shaped(
        text.substr(cps[begin].begin, cps[end - 1].end - cps[begin].begin));
  });
  return found;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const auto& cp : decode(text)) {
    if (cp.value < 0) {
      out.append(text.substr(cp.begin, cp.end - cp.begin));
    } else {
      append_utf8(out, u_tolower(cp.value));
    }
  }
  return out;
}

std::string duplicate_key(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const auto& cp : decode(text)) {
    if (is_space(cp.value)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (cp.value < 0) {
      out.append(text.substr(cp.begin, cp.end - cp.begin));
    } else {
      append_utf8(out, u_foldCase(cp.value, U_FOLD_CASE_DEFAULT));
    }
  }
  return out;
}

std::vector<std::string> split_alnum(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (const auto& cp : decode(text)) {
    if (is_letter_or_digit(cp.value)) {
      append_utf8(current, u_tolower(cp.value));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

bool is_alnum_word(std::string_view text) {
  if (text.empty()) return false;
  for (const auto& cp : decode(text)) {
    if (!is_letter_or_digit(cp.value)) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  const auto cps = decode(text);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_space(cps[b].value)) ++b;
  while (e > b && is_space(cps[e - 1].value)) --e;
  if (b == e) return {};
  return text.substr(cps[b].begin, cps[e - 1].end - cps[b].begin);
}

}  // namespace corpkit
