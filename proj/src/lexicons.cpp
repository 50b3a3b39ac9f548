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

#include "corpkit/lexicons.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>

#include "corpkit/error.hpp"
#include "corpkit/parallel.hpp"
#include "corpkit/text.hpp"

namespace corpkit {
namespace {

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "anger", "anticipation", "disgust", "fear",     "joy",
    "sadness", "surprise",   "trust",   "positive", "negative"};

constexpr std::array<std::string_view, kAgeGroupCount> kAgeGroupNames = {
    "13to18", "19to22", "23to29", "30plus"};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Tab-separated when the line has tabs, otherwise whitespace-separated.
std::vector<std::string_view> split_fields(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) {
    auto fields = split(line, '\t');
    for (auto& f : fields) f = trim(f);
    return fields;
  }
  return split_whitespace(line);
}

// Minimal CSV: comma separated, double quotes around fields with "" escape.
std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  return in;
}

template <typename Map>
auto find_in(const Map& m, const std::string& key) -> const typename Map::mapped_type* {
  const auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Emotion e) { return kEmotionNames[static_cast<std::size_t>(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) {
  const auto lowered = to_lower(name);
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kEmotionNames[i] == lowered) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

const EmotionSet* EmotionLexicon::find(const std::string& word) const {
  return find_in(entries, word);
}

EmotionLexicon load_emotion_lexicon(std::istream& in, const std::string& source) {
  EmotionLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw LoadError(source, line_no, "expected 'word<TAB>emotion<TAB>0|1'");
    }
    if (fields[0].empty()) throw LoadError(source, line_no, "empty word");
    const auto emotion = parse_emotion(fields[1]);
    if (!emotion) {
      throw LoadError(source, line_no, "unknown emotion '" + std::string(fields[1]) + "'");
    }
    if (fields[2] != "0" && fields[2] != "1") {
      throw LoadError(source, line_no,
                      "association flag must be 0 or 1, got '" + std::string(fields[2]) + "'");
    }
    auto& labels = lex.entries[to_lower(fields[0])];
    if (fields[2] == "1") labels.insert(*emotion);
  }
  return lex;
}

EmotionLexicon load_emotion_lexicon_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_emotion_lexicon(in, path);
}

// ---------------------------------------------------------------------------

const VadScores* VadLexicon::find(const std::string& word) const { return find_in(entries, word); }

VadLexicon load_vad_lexicon(std::istream& in, const std::string& source) {
  VadLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() == 1) fields = split_whitespace(line);
    for (auto& f : fields) f = trim(f);
    if (fields.size() != 4) {
      throw LoadError(source, line_no, "expected 'word<TAB>valence<TAB>arousal<TAB>dominance'");
    }
    const auto v = parse_real(fields[1]);
    const auto a = parse_real(fields[2]);
    const auto d = parse_real(fields[3]);
    const bool was_first = std::exchange(first, false);
    if (!v || !a || !d) {
      if (was_first && !v && !a && !d) continue;  // header
      throw LoadError(source, line_no, "scores must be real numbers");
    }
    for (double x : {*v, *a, *d}) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw LoadError(source, line_no, "score out of range [0,1]: " + std::to_string(x));
      }
    }
    if (fields[0].empty()) throw LoadError(source, line_no, "empty word");
    const auto [it, inserted] = lex.entries.emplace(to_lower(fields[0]), VadScores{*v, *a, *d});
    if (!inserted) throw LoadError(source, line_no, "duplicate entry '" + it->first + "'");
  }
  return lex;
}

VadLexicon load_vad_lexicon_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_vad_lexicon(in, path);
}

// ---------------------------------------------------------------------------

std::string_view to_string(AgeGroup g) { return kAgeGroupNames[static_cast<std::size_t>(g)]; }

std::optional<AgeGroup> parse_age_group(std::string_view name) {
  const auto t = trim(name);
  for (std::size_t i = 0; i < kAgeGroupCount; ++i) {
    if (kAgeGroupNames[i] == t) return static_cast<AgeGroup>(i);
  }
  return std::nullopt;
}

const AgeGroupSet* AgeLexicon::find(const std::string& word) const {
  return find_in(entries, word);
}

AgeLexicon load_age_lexicon(std::istream& in, double alpha, const std::string& source) {
  if (!(alpha > 0 && alpha <= 1)) throw ConfigError("alpha must lie in (0, 1]");
  AgeLexicon lex;
  std::unordered_set<std::string> alnum_terms;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 4) throw LoadError(source, line_no, "expected 'term,group,score,pvalue'");
    const auto score = parse_real(fields[2]);
    const auto p = parse_real(fields[3]);
    const bool was_first = std::exchange(first, false);
    if (was_first && !score && !p) continue;  // header
    const auto group = parse_age_group(fields[1]);
    if (!group) {
      throw LoadError(source, line_no, "unknown age group '" + std::string(trim(fields[1])) + "'");
    }
    if (!score || !p) throw LoadError(source, line_no, "score and p-value must be real numbers");

    ++lex.summary.rows;
    const auto term = to_lower(trim(fields[0]));
    if (!is_alnum_word(term)) {
      ++lex.summary.dropped_not_alnum;
      continue;
    }
    alnum_terms.insert(term);
    if (!(*score > 0)) {
      ++lex.summary.dropped_not_positive;
    } else if (!(*p <= alpha)) {
      ++lex.summary.dropped_not_significant;
    } else {
      lex.entries[term].set(static_cast<std::size_t>(*group));
    }
  }
  lex.summary.alnum_terms = alnum_terms.size();
  for (const auto& [term, groups] : lex.entries) {
    for (std::size_t g = 0; g < kAgeGroupCount; ++g) {
      if (groups.test(g)) ++lex.summary.per_group[g];
    }
  }
  return lex;
}

AgeLexicon load_age_lexicon_file(const std::string& path, double alpha) {
  auto in = open_or_throw(path);
  return load_age_lexicon(in, alpha, path);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::kFemale: return "female";
    case Gender::kMale: return "male";
    case Gender::kUnknown: return "unknown";
  }
  return "unknown";
}

Gender NameGenderTable::classify(const std::string& lowercase_name) const {
  if (female.contains(lowercase_name)) return Gender::kFemale;
  if (male.contains(lowercase_name)) return Gender::kMale;
  return Gender::kUnknown;
}

std::vector<NameCountFile> find_name_count_files(const std::filesystem::path& dir) {
  static const std::regex pattern(R"(yob(\d{4})\.txt)", std::regex::icase);
  if (!std::filesystem::is_directory(dir)) {
    throw LoadError(dir.string(), 0, "not a directory");
  }
  std::vector<NameCountFile> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::smatch m;
    const auto name = entry.path().filename().string();
    if (std::regex_match(name, m, pattern)) out.push_back({std::stoi(m[1].str()), entry.path()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.year, a.path) < std::tie(b.year, b.path);
  });
  return out;
}

namespace {

using NameCounts = std::unordered_map<std::string, std::array<std::uint64_t, 2>>;

void accumulate_name_file(const std::filesystem::path& path, NameCounts& counts) {
  const auto source = path.string();
  auto in = open_or_throw(source);
  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) throw LoadError(source, line_no, "expected 'name,gender,count'");
    const auto name = trim(fields[0]);
    const auto gender = trim(fields[1]);
    const auto count = parse_count(fields[2]);
    if (name.empty()) throw LoadError(source, line_no, "empty name");
    if (gender != "F" && gender != "M") {
      throw LoadError(source, line_no, "gender must be F or M, got '" + std::string(gender) + "'");
    }
    if (!count) throw LoadError(source, line_no, "count must be a non-negative integer");
    counts[to_lower(name)][gender == "F" ? 0 : 1] += *count;
  }
}

}  // namespace

NameGenderTable build_name_gender_table(std::span<const NameCountFile> files,
                                        const NameTableOptions& options) {
  if (options.year_from > options.year_to) throw ConfigError("year_from must be <= year_to");
  if (!(options.purity > 0.5 && options.purity <= 1.0)) {
    throw ConfigError("purity must lie in (0.5, 1]");
  }
  std::vector<const NameCountFile*> selected;
  for (const auto& f : files) {
    if (f.year >= options.year_from && f.year <= options.year_to) selected.push_back(&f);
  }
  std::vector<NameCounts> shards(shard_count(selected.size(), options.threads));
  for_each_shard(selected.size(), options.threads, [&](std::size_t s, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) accumulate_name_file(selected[i]->path, shards[s]);
  });
  NameCounts totals;
  for (auto& shard : shards) {
    for (const auto& [name, c] : shard) {
      auto& t = totals[name];
      t[0] += c[0];
      t[1] += c[1];
    }
  }

  NameGenderTable table;
  for (const auto& [name, c] : totals) {
    const std::uint64_t total = c[0] + c[1];
    if (total <= options.min_count) continue;
    const double female_share = static_cast<double>(c[0]) / static_cast<double>(total);
    const double male_share = static_cast<double>(c[1]) / static_cast<double>(total);
    if (female_share >= options.purity) {
      table.female.insert(name);
    } else if (male_share >= options.purity) {
      table.male.insert(name);
    }
  }
  return table;
}

NameGenderTable build_name_gender_table(const std::filesystem::path& dir,
                                        const NameTableOptions& options) {
  const auto files = find_name_count_files(dir);
  return build_name_gender_table(files, options);
}

void write_name_gender_table(std::ostream& out, const NameGenderTable& table) {
  std::map<std::string_view, char> sorted;
  for (const auto& n : table.female) sorted.emplace(n, 'F');
  for (const auto& n : table.male) sorted.emplace(n, 'M');
  for (const auto& [name, g] : sorted) out << name << '\t' << g << '\n';
}

NameGenderTable load_name_gender_table(std::istream& in, const std::string& source) {
  NameGenderTable table;
  std::string line;
  std::size_t line_no = 0;
  while (next_line(in, line, line_no)) {
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2 || (fields[1] != "F" && fields[1] != "M")) {
      throw LoadError(source, line_no, "expected 'name<TAB>F|M'");
    }
    auto name = to_lower(fields[0]);
    if (table.female.contains(name) || table.male.contains(name)) {
      throw LoadError(source, line_no, "duplicate name '" + name + "'");
    }
    (fields[1] == "F" ? table.female : table.male).insert(std::move(name));
  }
  return table;
}

NameGenderTable load_name_gender_table_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_name_gender_table(in, path);
}

}  // namespace corpkit
