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

// Text normalization shared by corpus counting, filtering and lexicon lookup.
//
// Tokenizer rules:
//   * text is lowercased code point by code point (ICU simple case mapping);
//   * whitespace-delimited chunks shaped like URLs (scheme://... or www....)
//     are dropped;
//   * @-mentions (an '@' at a word boundary plus the handle that follows)
//     are dropped;
//   * everything else is split on any code point that is not a letter,
//     digit or combining mark, except apostrophes between two word
//     characters, which stay inside the token. U+2019 is folded to '\''.
//
// A hashtag therefore yields its body: "#MeTime" -> "metime".

#include <string>
#include <string_view>
#include <vector>

namespace corpkit {

using Token = std::string;

std::vector<Token> tokenize(std::string_view text);

// Appends tokens to `out` instead of allocating a new vector.
void tokenize_into(std::string_view text, std::vector<Token>& out);

// Number of tokens tokenize() would produce, without materializing them.
std::size_t count_tokens(std::string_view text);

// True when a whitespace-delimited chunk looks like a URL.
bool is_url_shaped(std::string_view chunk);

// True when any whitespace-delimited chunk of `text` is URL-shaped.
bool contains_url(std::string_view text);

// Lowercase with the tokenizer's mapping. Used for every lexicon key.
std::string to_lower(std::string_view text);

// Casefolded, whitespace-collapsed and trimmed text. Two documents with
// equal keys are duplicates.
std::string duplicate_key(std::string_view text);

// Splits on every code point that is not a letter or digit; returns the
// non-empty pieces, lowercased.
std::vector<std::string> split_alnum(std::string_view text);

// True when `text` is non-empty and every code point is a letter or digit.
bool is_alnum_word(std::string_view text);

// Leading/trailing whitespace removed.
std::string_view trim(std::string_view text);

}  // namespace corpkit
