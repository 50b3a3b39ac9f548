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

// Writes a deterministic synthetic study: a raw stream of query-term
// documents, a general reference stream, and small lexicons in the formats
// the corpkit loaders accept. Used by the end-to-end tests and the README
// walkthrough.

#include <algorithm>
#include <array>
#include <set>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corpkit/document.hpp"

namespace {

namespace fs = std::filesystem;
using corpkit::Document;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Cumulative-weight sampler.
class Sampler {
 public:
  explicit Sampler(std::vector<double> weights) {
    double acc = 0;
    for (double w : weights) cumulative_.push_back(acc += w);
  }
  std::size_t draw(Rng& rng) const {
    const double x = rng.uniform() * cumulative_.back();
    return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), x) -
                                    cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
};

const std::vector<std::string> kCalmWords = {
    "peace", "quiet", "silence", "nature", "enjoy", "bliss", "calm", "forest", "reading",
    "coffee", "morning", "walk", "prefer", "comfort", "peaceful", "beach", "sunset",
    "reflect", "mountain", "garden", "gentle", "rest", "journal", "tea", "freedom"};
const std::vector<std::string> kSadWords = {
    "sad", "alone", "cry", "depressed", "empty", "miss", "hurt", "scared", "anxiety",
    "lost", "tired", "broken", "nobody", "crying", "pain", "dark", "hate", "fear",
    "sick", "forgotten", "depression", "bored", "worthless", "grief", "misery"};
const std::vector<std::string> kFunctionWords = {
    "the", "i", "to", "and", "a", "of", "my", "is", "in", "it", "you", "so", "me", "that",
    "for", "on", "this", "with", "be", "just", "feel", "not", "all", "at", "but", "when",
    "can't", "don't", "i'm", "it's", "night", "day", "time", "today", "really", "always"};
const std::vector<std::string> kFemaleNames = {"mary", "linda", "susan", "emma", "olivia",
                                               "sophia", "grace", "chloe", "hannah", "julia"};
const std::vector<std::string> kMaleNames = {"john", "james", "robert", "michael", "david",
                                             "daniel", "kevin", "brian", "jason", "ryan"};
const std::vector<std::string> kSharedNames = {"alex", "jordan", "taylor", "casey", "riley"};

std::vector<std::string> make_vocabulary(Rng& rng, std::size_t n) {
  static const std::array<const char*, 20> onsets = {"b", "c", "d", "f", "g", "h", "k", "l",
                                                     "m", "n", "p", "r", "s", "t", "v", "w",
                                                     "br", "st", "tr", "pl"};
  static const std::array<const char*, 6> vowels = {"a", "e", "i", "o", "u", "ea"};
  std::vector<std::string> out;
  std::set<std::string> seen(kCalmWords.begin(), kCalmWords.end());
  seen.insert(kSadWords.begin(), kSadWords.end());
  seen.insert(kFunctionWords.begin(), kFunctionWords.end());
  for (const char* q : {"solitude", "lonely", "loneliness"}) seen.insert(q);
  while (out.size() < n) {
    std::string w;
    const std::size_t syllables = 2 + rng.below(2);
    for (std::size_t s = 0; s < syllables; ++s) {
      w += onsets[rng.below(onsets.size())];
      w += vowels[rng.below(vowels.size())];
    }
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

struct Theme {
  double calm;
  double sad;
};

struct World {
  std::vector<std::string> words;  // function words, calm, sad, filler
  std::size_t calm_begin, sad_begin, filler_begin;
};

std::string make_text(Rng& rng, const World& w, const Sampler& filler, const Theme& theme,
                      const std::string& query) {
  const std::size_t n = 5 + rng.below(14);
  const std::size_t query_pos = query.empty() ? n : rng.below(n);
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    std::string word;
    if (i == query_pos) {
      word = rng.chance(0.15) ? "#" + query : (rng.chance(0.2) ? std::string(1, std::toupper(query[0])) + query.substr(1) : query);
    } else {
      const double x = rng.uniform();
      if (x < 0.35) {
        word = w.words[rng.below(w.calm_begin)];
      } else if (x < 0.35 + theme.calm) {
        word = w.words[w.calm_begin + rng.below(w.sad_begin - w.calm_begin)];
      } else if (x < 0.35 + theme.calm + theme.sad) {
        word = w.words[w.sad_begin + rng.below(w.filler_begin - w.sad_begin)];
      } else {
        word = w.words[w.filler_begin + filler.draw(rng)];
      }
    }
    if (!text.empty()) text += ' ';
    text += word;
  }
  if (rng.chance(0.05)) text = "@friend" + std::to_string(rng.below(50)) + " " + text;
  if (rng.chance(0.1)) text += rng.chance(0.5) ? "!" : "...";
  return text;
}

std::string display_name(Rng& rng, std::size_t author) {
  const double x = rng.uniform();
  std::string first;
  if (x < 0.3) {
    first = kFemaleNames[author % kFemaleNames.size()];
  } else if (x < 0.55) {
    first = kMaleNames[author % kMaleNames.size()];
  } else if (x < 0.65) {
    first = kSharedNames[author % kSharedNames.size()];
  } else {
    return "user_" + std::to_string(author);
  }
  first[0] = static_cast<char>(std::toupper(first[0]));
  static const std::array<const char*, 4> seps = {" ", ".", "_", " "};
  return first + seps[author % seps.size()] + "X" + std::to_string(author % 97);
}

void write_stream(const fs::path& path, Rng& rng, const World& w, const Sampler& filler,
                  std::size_t docs, std::size_t authors, const std::string& id_prefix,
                  const std::vector<std::pair<std::string, Theme>>& queries) {
  std::ofstream out(path, std::ios::binary);
  std::vector<std::string> names(authors);
  for (std::size_t a = 0; a < authors; ++a) names[a] = display_name(rng, a);
  const auto epoch = corpkit::parse_rfc3339("2018-11-01T00:00:00Z").value();
  std::string previous = "first post of the day";
  for (std::size_t i = 0; i < docs; ++i) {
    Document d;
    d.doc_id = id_prefix + std::to_string(i);
    // A few prolific authors exercise the per-user cap.
    const std::size_t author = rng.chance(0.1) ? rng.below(20) : rng.below(authors);
    d.author_id = "a" + std::to_string(author);
    d.user_display_name = names[author];
    d.timestamp = epoch + std::chrono::seconds(static_cast<std::int64_t>(rng.below(90 * 86400)));
    const auto& [query, theme] = queries[rng.below(queries.size())];
    const double kind = rng.uniform();
    if (kind < 0.03) {
      d.text = previous;  // duplicate
    } else if (kind < 0.06) {
      d.text = query.empty() ? "so tired" : "so " + query;  // too short
    } else if (kind < 0.10) {
      d.text = make_text(rng, w, filler, theme, query) + " https://t.co/x" + std::to_string(i);
    } else {
      d.text = make_text(rng, w, filler, theme, query);
    }
    previous = d.text;
    corpkit::write_document(out, d);
  }
}

void write_lexicons(const fs::path& dir, Rng& rng, const World& w) {
  std::ofstream emo(dir / "emolex.txt", std::ios::binary);
  std::ofstream vad(dir / "vad.txt", std::ios::binary);
  std::ofstream age(dir / "age.csv", std::ios::binary);
  vad << "Word\tValence\tArousal\tDominance\n";
  age << "term,group,score,pvalue\n";
  static const std::array<const char*, 10> emotions = {
      "anger", "anticipation", "disgust", "fear", "joy", "negative", "positive", "sadness",
      "surprise", "trust"};
  static const std::array<const char*, 4> groups = {"13to18", "19to22", "23to29", "30plus"};
  auto score3 = [](double x) { return std::round(x * 1000.0) / 1000.0; };
  for (std::size_t i = 0; i < w.words.size(); ++i) {
    const auto& word = w.words[i];
    const bool calm = i >= w.calm_begin && i < w.sad_begin;
    const bool sad = i >= w.sad_begin && i < w.filler_begin;
    const bool listed = calm || sad || rng.chance(0.6);
    if (listed) {
      for (const char* e : emotions) {
        const std::string em = e;
        double p = 0.06;
        if (calm && (em == "joy" || em == "positive" || em == "trust" || em == "anticipation")) p = 0.8;
        if (sad && (em == "sadness" || em == "negative" || em == "fear" || em == "anger")) p = 0.8;
        emo << word << '\t' << em << '\t' << (rng.chance(p) ? 1 : 0) << '\n';
      }
      double v = rng.uniform(), a = rng.uniform(), d = rng.uniform();
      if (calm) { v = 0.6 + 0.4 * v; a = 0.35 * a; d = 0.5 + 0.5 * d; }
      if (sad) { v = 0.3 * v; a = 0.5 + 0.5 * a; d = 0.35 * d; }
      vad << word << '\t' << score3(v) << '\t' << score3(a) << '\t' << score3(d) << '\n';
    }
    if (rng.chance(0.5)) {
      const std::size_t g = rng.below(groups.size());
      const double s = rng.uniform() - 0.3;
      const double p = rng.chance(0.8) ? rng.uniform() * 0.05 : 0.05 + rng.uniform() * 0.9;
      age << word << ',' << groups[g] << ',' << score3(s) << ',' << score3(p) << '\n';
    }
  }
  age << "\"miss you\",13to18,0.3,0.001\n";
  age << "\"feel so\",30plus,0.2,0.01\n";
}

void write_name_counts(const fs::path& dir, Rng& rng) {
  fs::create_directories(dir);
  for (int year : {1939, 1940, 1975, 2000, 2017}) {
    std::ofstream out(dir / ("yob" + std::to_string(year) + ".txt"), std::ios::binary);
    auto row = [&](const std::string& name, char g, std::size_t count) {
      std::string cap = name;
      cap[0] = static_cast<char>(std::toupper(cap[0]));
      out << cap << ',' << g << ',' << count << '\n';
    };
    for (const auto& n : kFemaleNames) {
      row(n, 'F', 40 + rng.below(400));
      if (rng.chance(0.3)) row(n, 'M', rng.below(5));
    }
    for (const auto& n : kMaleNames) {
      row(n, 'M', 40 + rng.below(400));
      if (rng.chance(0.3)) row(n, 'F', rng.below(5));
    }
    for (const auto& n : kSharedNames) {
      row(n, 'F', 30 + rng.below(100));
      row(n, 'M', 30 + rng.below(100));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a deterministic synthetic study for corpkit"};
  std::string out_dir = "synthetic";
  std::uint64_t seed = 20190601;
  std::size_t solo_docs = 12000, general_docs = 12000, vocab = 3000;
  app.add_option("-o,--out-dir", out_dir)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--solo-docs", solo_docs, "Raw query-term documents")->capture_default_str();
  app.add_option("--general-docs", general_docs, "Raw general documents")->capture_default_str();
  app.add_option("--vocabulary", vocab, "Filler vocabulary size")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  World w;
  // Some invented words lean calm or sad so the trend curve has range.
  std::vector<std::string> calm = kCalmWords, sad = kSadWords, rest;
  const auto invented = make_vocabulary(rng, vocab + 600);
  for (std::size_t i = 0; i < invented.size(); ++i) {
    if (i < 1200 && i % 4 == 1) {
      calm.push_back(invented[i]);
    } else if (i < 1200 && i % 4 == 3) {
      sad.push_back(invented[i]);
    } else {
      rest.push_back(invented[i]);
    }
  }
  rest.resize(vocab);
  w.words = kFunctionWords;
  w.calm_begin = w.words.size();
  w.words.insert(w.words.end(), calm.begin(), calm.end());
  w.sad_begin = w.words.size();
  w.words.insert(w.words.end(), sad.begin(), sad.end());
  w.filler_begin = w.words.size();
  w.words.insert(w.words.end(), rest.begin(), rest.end());
  std::vector<double> zipf;
  for (std::size_t r = 1; r <= vocab; ++r) zipf.push_back(1.0 / std::pow(static_cast<double>(r), 0.9));
  const Sampler filler(zipf);

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  write_stream(dir / "solo_raw.jsonl", rng, w, filler, solo_docs, solo_docs / 3, "s",
               {{"solitude", {0.30, 0.05}}, {"lonely", {0.06, 0.25}}, {"loneliness", {0.05, 0.30}}});
  write_stream(dir / "general_raw.jsonl", rng, w, filler, general_docs, general_docs / 3, "g",
               {{"", {0.10, 0.10}}});
  write_lexicons(dir, rng, w);
  write_name_counts(dir / "ssa", rng);
  std::cout << "wrote synthetic study to " << dir.string() << "\n";
  return 0;
}
