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

#include "corpkit/io.hpp"

#include <charconv>
#include <cmath>
#include <unistd.h>

#include "corpkit/error.hpp"
#include "corpkit/text.hpp"

namespace corpkit {
namespace {

std::string clean_field(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_association_tsv(std::ostream& out, const AssociationTable& table) {
  out << "word\tscore\tfreq_target\tfreq_reference\tsmoothed\n";
  for (const auto& [word, e] : table.by_score()) {
    out << word << '\t' << format_double(e.score) << '\t' << e.freq_target << '\t'
        << e.freq_reference << '\t' << (e.smoothed ? "true" : "false") << '\n';
  }
}

AssociationTable read_association_tsv(std::istream& in, const std::string& source) {
  AssociationTable table;
  table.target_name = "target";
  table.reference_name = "reference";
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.starts_with("word\t")) continue;
    const auto f = split_tabs(line);
    if (f.size() != 5) throw LoadError(source, line_no, "expected 5 tab-separated fields");
    AssociationEntry e;
    if (!parse_number(f[1], e.score) || !std::isfinite(e.score)) {
      throw LoadError(source, line_no, "score is not a finite number");
    }
    if (!parse_number(f[2], e.freq_target) || !parse_number(f[3], e.freq_reference)) {
      throw LoadError(source, line_no, "frequencies must be non-negative integers");
    }
    if (f[4] == "true") {
      e.smoothed = true;
    } else if (f[4] != "false") {
      throw LoadError(source, line_no, "smoothed must be true or false");
    }
    if (f[0].empty()) throw LoadError(source, line_no, "empty word");
    if (!table.entries.emplace(std::string(f[0]), e).second) {
      throw LoadError(source, line_no, "duplicate word '" + std::string(f[0]) + "'");
    }
  }
  return table;
}

AssociationTable read_association_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  auto table = read_association_tsv(in, path);
  table.target_name = std::filesystem::path(path).stem().string();
  return table;
}

void write_trend_csv(std::ostream& out, const TrendCurve& curve) {
  out << "bin_center,n_words,mean_v,mean_a,mean_d\n";
  for (const auto& b : curve.bins) {
    out << format_double(b.center) << ',' << b.n_words << ',' << format_double(b.mean_valence)
        << ',' << format_double(b.mean_arousal) << ',' << format_double(b.mean_dominance) << '\n';
  }
}

void write_annotation_tsv(std::ostream& out, std::span<const Document> docs) {
  out << "doc_id\tuser\ttext\n";
  for (const auto& d : docs) {
    out << clean_field(d.doc_id) << '\t' << clean_field(d.user_display_name) << '\t'
        << clean_field(d.text) << '\n';
  }
}

nlohmann::ordered_json to_json(const PipelineStats& stats) {
  nlohmann::ordered_json j;
  j["input"] = stats.input;
  j["kept"] = stats.kept;
  nlohmann::ordered_json dropped;
  for (std::size_t i = 0; i < kDropReasonCount; ++i) {
    dropped[std::string(to_string(static_cast<DropReason>(i)))] = stats.dropped[i];
  }
  j["dropped"] = dropped;
  j["decode_errors"] = stats.decode_errors;
  return j;
}

nlohmann::ordered_json to_json(const Chi2Result& r) {
  return {{"statistic", r.statistic}, {"df", r.degrees_of_freedom}, {"p", r.p_value}};
}

nlohmann::ordered_json to_json(const EmotionProfile& p) {
  nlohmann::ordered_json j;
  j["corpus"] = p.corpus_name;
  j["denominator"] = p.denominator;
  j["empty"] = p.empty();
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.counts) {
    labels[std::string(to_string(e))] = {{"count", c}, {"percent", p.percent.at(e)}};
  }
  j["labels"] = labels;
  return j;
}

nlohmann::ordered_json to_json(const VadExtremesProfile& p) {
  nlohmann::ordered_json j;
  j["corpus"] = p.corpus_name;
  j["low_max"] = p.low_max;
  j["high_min"] = p.high_min;
  j["denominator"] = p.denominator;
  j["empty"] = p.empty();
  for (auto d : kAllVadDimensions) {
    const auto& x = p[d];
    j[std::string(to_string(d))] = {
        {"low", {{"count", x.low_count}, {"percent", x.low_percent}}},
        {"high", {{"count", x.high_count}, {"percent", x.high_percent}}}};
  }
  return j;
}

nlohmann::ordered_json to_json(const AgeProfile& p) {
  nlohmann::ordered_json j;
  j["corpus"] = p.corpus_name;
  j["denominator"] = p.denominator;
  j["empty"] = p.empty();
  nlohmann::ordered_json groups = nlohmann::ordered_json::object();
  for (const auto& [g, c] : p.counts) {
    groups[std::string(to_string(g))] = {{"count", c}, {"percent", p.percent.at(g)}};
  }
  j["groups"] = groups;
  return j;
}

nlohmann::ordered_json to_json(const TrendCurve& c) {
  nlohmann::ordered_json j;
  j["step"] = c.step;
  j["min_words"] = c.min_words;
  auto bins = nlohmann::ordered_json::array();
  for (const auto& b : c.bins) {
    bins.push_back({{"bin_center", b.center},
                    {"n_words", b.n_words},
                    {"mean_v", b.mean_valence},
                    {"mean_a", b.mean_arousal},
                    {"mean_d", b.mean_dominance}});
  }
  j["bins"] = bins;
  return j;
}

void write_emotion_csv(std::ostream& out, std::span<const EmotionProfile> profiles) {
  out << "corpus,label,count,denominator,percent\n";
  for (const auto& p : profiles) {
    for (const auto& [e, c] : p.counts) {
      out << csv_field(p.corpus_name) << ',' << to_string(e) << ',' << c << ',' << p.denominator
          << ',' << format_double(p.percent.at(e)) << '\n';
    }
  }
}

void write_vad_csv(std::ostream& out, std::span<const VadExtremesProfile> profiles) {
  out << "corpus,dimension,class,count,denominator,percent\n";
  for (const auto& p : profiles) {
    if (p.empty()) continue;
    for (auto d : kAllVadDimensions) {
      const auto& x = p[d];
      out << csv_field(p.corpus_name) << ',' << to_string(d) << ",low," << x.low_count << ','
          << p.denominator << ',' << format_double(x.low_percent) << '\n';
      out << csv_field(p.corpus_name) << ',' << to_string(d) << ",high," << x.high_count << ','
          << p.denominator << ',' << format_double(x.high_percent) << '\n';
    }
  }
}

void write_age_csv(std::ostream& out, std::span<const AgeProfile> profiles) {
  out << "corpus,group,count,denominator,percent\n";
  for (const auto& p : profiles) {
    for (const auto& [g, c] : p.counts) {
      out << csv_field(p.corpus_name) << ',' << to_string(g) << ',' << c << ',' << p.denominator
          << ',' << format_double(p.percent.at(g)) << '\n';
    }
  }
}

AtomicFile::AtomicFile(std::filesystem::path target) : target_(std::move(target)) {
  temp_ = target_;
  temp_ += ".tmp." + std::to_string(::getpid());
  out_.open(temp_, std::ios::binary | std::ios::trunc);
  if (!out_) throw LoadError(target_.string(), 0, "cannot open output for writing");
}

AtomicFile::~AtomicFile() {
  if (!committed_) {
    out_.close();
    std::error_code ec;
    std::filesystem::remove(temp_, ec);
  }
}

void AtomicFile::commit() {
  out_.flush();
  if (!out_) throw LoadError(target_.string(), 0, "write failed");
  out_.close();
  std::filesystem::rename(temp_, target_);
  committed_ = true;
}

}  // namespace corpkit
