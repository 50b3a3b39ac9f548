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

// Acceptance suite. Prints one line per criterion:
//   PASS|FAIL|SKIP  <n>  <title>  <detail>
// and exits non-zero when any criterion fails. Criteria that depend on
// external data files are skipped when the data is not configured:
//   CORPKIT_SSA_DIR      directory holding the yearly yobYYYY.txt name files
//   CORPKIT_AGE_LEXICON  the published age-association lexicon as CSV

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corpkit/association.hpp"
#include "corpkit/corpus.hpp"
#include "corpkit/ingest.hpp"
#include "corpkit/io.hpp"
#include "corpkit/lexicons.hpp"
#include "corpkit/profiles.hpp"
#include "corpkit/stats.hpp"
#include "corpkit/text.hpp"
#include "oracle/oracles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace corpkit;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

// Collects the first few failed expectations of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  Outcome outcome(std::string pass_detail) const {
    if (ok()) return {Status::kPass, std::move(pass_detail)};
    return {Status::kFail, std::to_string(failures_) + " failed check(s): " + notes_};
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  return os.str();
}

Corpus corpus_of(const std::string& name, const std::vector<std::string>& tokens) {
  CorpusBuilder b;
  b.add_tokens(tokens);
  return Corpus(name, std::move(b));
}

// 1 -------------------------------------------------------------------------

Outcome pmi_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20190601);
  Checker c;
  AssocConfig cfg;
  cfg.min_total_freq = 1;
  std::size_t compared = 0;
  for (int pair = 0; pair < 200; ++pair) {
    const auto a = testing::random_tokens(rng, 1000, 25 + pair % 50);
    const auto b = testing::random_tokens(rng, 1000, 25 + (pair * 7) % 50);
    const auto ca = corpus_of("a", a);
    const auto cb = corpus_of("b", b);
    const auto assoc = build_association_table(ca, cb, cfg, 1 + pair % 4);
    const auto contrast = contrast_table(cb, ca, cfg, 1);
    std::set<std::string> vocab(a.begin(), a.end());
    vocab.insert(b.begin(), b.end());
    c.expect(assoc.entries.size() == vocab.size(), "table size differs from vocabulary");
    for (const auto& w : vocab) {
      const auto* e = assoc.find(w);
      const auto* f = contrast.find(w);
      if (!e || !f) {
        c.expect(false, "missing word " + w);
        continue;
      }
      const double forward = oracle::pmi_difference(a, b, w);
      const double backward = oracle::pmi_difference(b, a, w);
      c.expect(std::abs(e->score - forward) <= 1e-9, "assoc score off for " + w);
      c.expect(std::abs(f->score - backward) <= 1e-9, "contrast score off for " + w);
      compared += 2;
    }
  }
  const double secs = seconds_since(start);
  c.expect(secs < 10.0, "runtime " + fmt(secs) + " s exceeds 10 s");
  return c.outcome(std::to_string(compared) + " scores within 1e-9 in " + fmt(secs) + " s");
}

// 2 -------------------------------------------------------------------------

Outcome association_properties() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Count> freq(0, 2000);
  std::uniform_int_distribution<Count> extra(1, 200000);
  std::uniform_int_distribution<Count> scale(2, 50);
  Checker c;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    Count ft = freq(rng), fr = freq(rng);
    if (ft == 0 && fr == 0) ft = 1;
    const Count tt = ft + extra(rng), tr = fr + extra(rng);
    const double s = association_score(ft, fr, tt, tr).score;
    c.expect(s == -association_score(fr, ft, tr, tt).score, "antisymmetry");
    if (ft > 0 && fr > 0) {
      const Count k = scale(rng);
      c.expect(std::abs(association_score(k * ft, k * fr, k * tt, k * tr).score - s) <= 1e-12,
               "scale invariance");
    }
    if (ft + 1 <= tt) c.expect(association_score(ft + 1, fr, tt, tr).score > s, "monotonicity");
  }

  // Minimum combined frequency 25, inclusive.
  for (Count total = 20; total <= 30; ++total) {
    const Count ft = total / 2 + 1, fr = total - ft;
    const auto t = Corpus::from_counts("t", 1, {{"w", ft}, {"pad", 1000}});
    const auto r = Corpus::from_counts("r", 1, {{"w", fr}, {"pad", 1000}});
    const bool present = build_association_table(t, r).find("w") != nullptr;
    c.expect(present == (total >= 25), "min-frequency boundary at " + std::to_string(total));
  }

  // Strong threshold ±1.5, inclusive; random scores around the boundary.
  std::uniform_real_distribution<double> near(-2.0, 2.0);
  AssociationTable table;
  for (int i = 0; i < 2000; ++i) {
    table.entries["w" + std::to_string(i)] = {near(rng), 30, 1, false};
  }
  table.entries["pos_edge"] = {1.5, 30, 1, false};
  table.entries["neg_edge"] = {-1.5, 1, 30, false};
  table.entries["pos_below"] = {std::nextafter(1.5, 0.0), 30, 1, false};
  table.entries["neg_above"] = {std::nextafter(-1.5, 0.0), 1, 30, false};
  const auto pos = strong_words(table, Direction::kPositive);
  const auto neg = strong_words(table, Direction::kNegative);
  for (const auto& [w, e] : table.entries) {
    c.expect(pos.contains(w) == (e.score >= 1.5), "positive threshold for " + w);
    c.expect(neg.contains(w) == (e.score <= -1.5), "negative threshold for " + w);
  }
  c.expect(pos.contains("pos_edge") && neg.contains("neg_edge"), "threshold not inclusive");
  c.expect(!pos.contains("pos_below") && !neg.contains("neg_above"), "threshold too loose");
  return c.outcome(std::to_string(trials) + " random count sets, boundaries 25 and 1.5 exact");
}

// 3 -------------------------------------------------------------------------

Outcome pipeline_invariants() {
  std::mt19937_64 rng(31337);
  Checker c;
  PipelineConfig cfg;
  cfg.query_terms = {"lonely", "loneliness", "solitude"};
  std::uint64_t kept_total = 0;
  for (int s = 0; s < 100; ++s) {
    auto raw = testing::random_stream(rng, 50 + rng() % 300);
    const auto base = run_pipeline(raw, cfg, "c", 1);
    c.expect(base.stats.reconciles(), "stats do not reconcile");
    c.expect(base.stats.input == raw.size(), "input count");
    c.expect(base.stats.kept == base.kept.size(), "kept count");
    kept_total += base.stats.kept;

    std::map<std::string, int> per_author;
    std::set<std::string> keys;
    for (const auto& d : base.kept) {
      const auto tokens = tokenize(d.text);
      c.expect(tokens.size() >= 3, "survivor shorter than 3 tokens");
      c.expect(!contains_url(d.text), "survivor has a URL");
      c.expect(std::any_of(tokens.begin(), tokens.end(),
                           [&](const auto& t) { return cfg.query_terms.contains(t); }),
               "survivor lacks a query term");
      c.expect(++per_author[d.author_id] <= 3, "author over cap");
      c.expect(keys.insert(duplicate_key(d.text)).second, "normalized duplicate survived");
    }

    for (int perm = 0; perm < 3; ++perm) {
      std::shuffle(raw.begin(), raw.end(), rng);
      const auto again = run_pipeline(raw, cfg, "c", 1 + perm * 3);
      c.expect(again.stats == base.stats, "stats depend on input order");
      c.expect(again.corpus.same_counts(base.corpus), "corpus depends on input order");
    }
  }
  return c.outcome("100 streams x 3 permutations, " + std::to_string(kept_total) +
                   " survivors checked");
}

// 4 -------------------------------------------------------------------------

Outcome ssa_reproduction() {
  const char* dir = std::getenv("CORPKIT_SSA_DIR");
  if (!dir || !*dir) {
    return {Status::kSkip, "set CORPKIT_SSA_DIR to the yearly name files (yob1940..yob2017)"};
  }
  const auto start = Clock::now();
  NameTableOptions opt;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  NameGenderTable table;
  try {
    table = build_name_gender_table(fs::path(dir), opt);
  } catch (const std::exception& e) {
    return {Status::kFail, e.what()};
  }
  const double secs = seconds_since(start);
  Checker c;
  const double f = static_cast<double>(table.female.size());
  const double m = static_cast<double>(table.male.size());
  c.expect(std::abs(f - 19714) <= 0.01 * 19714, "female " + std::to_string(table.female.size()));
  c.expect(std::abs(m - 10909) <= 0.01 * 10909, "male " + std::to_string(table.male.size()));
  c.expect(secs < 30.0, "runtime " + fmt(secs) + " s exceeds 30 s");
  return c.outcome(std::to_string(table.female.size()) + " female, " +
                   std::to_string(table.male.size()) + " male in " + fmt(secs) + " s");
}

// 5 -------------------------------------------------------------------------

Outcome age_reproduction() {
  const char* path = std::getenv("CORPKIT_AGE_LEXICON");
  if (!path || !*path) return {Status::kSkip, "set CORPKIT_AGE_LEXICON to the age lexicon CSV"};
  AgeLexicon lex;
  try {
    lex = load_age_lexicon_file(path);
  } catch (const std::exception& e) {
    return {Status::kFail, e.what()};
  }
  const auto& s = lex.summary;
  Checker c;
  c.expect(s.alnum_terms == 8093, "alpha-numeric terms " + std::to_string(s.alnum_terms));
  const std::array<std::uint64_t, 4> want = {1921, 845, 1130, 3055};
  for (std::size_t g = 0; g < want.size(); ++g) {
    c.expect(s.per_group[g] == want[g], std::string(to_string(kAllAgeGroups[g])) + " " +
                                            std::to_string(s.per_group[g]));
  }
  return c.outcome(std::to_string(s.alnum_terms) + " terms, groups " +
                   std::to_string(s.per_group[0]) + "/" + std::to_string(s.per_group[1]) + "/" +
                   std::to_string(s.per_group[2]) + "/" + std::to_string(s.per_group[3]));
}

// 6 -------------------------------------------------------------------------

Outcome chi_squared() {
  Checker c;
  const auto r = chi2_2x2(30, 70, 10, 90);
  c.expect(r.statistic == 12.5, "statistic is not exactly 12.5");
  c.expect(r.degrees_of_freedom == 1, "df");
  const double reference = oracle::chi2_df1_tail(12.5);
  c.expect(std::abs(r.p_value - reference) <= 1e-6, "p differs from quadrature oracle");
  c.expect(chi2_2x2(30, 70, 30, 70).p_value == 1.0, "p(0) != 1");

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> cell(0, 10000);
  std::uniform_int_distribution<std::uint64_t> scale(1, 20);
  int tables = 0;
  while (tables < 1000) {
    const std::uint64_t a = cell(rng), b = cell(rng), d0 = cell(rng), d = cell(rng);
    if (a + b == 0 || d0 + d == 0 || a + d0 == 0 || b + d == 0) continue;
    ++tables;
    const auto x = chi2_2x2(a, b, d0, d);
    c.expect(chi2_2x2(a, d0, b, d).statistic == x.statistic, "transpose");
    c.expect(chi2_2x2(d0, d, a, b).statistic == x.statistic, "row swap");
    c.expect(chi2_2x2(b, a, d, d0).statistic == x.statistic, "column swap");
    const auto k = scale(rng);
    const double scaled = chi2_2x2(k * a, k * b, k * d0, k * d).statistic;
    c.expect(std::abs(scaled - k * x.statistic) <= 1e-9 * std::max(1.0, k * x.statistic),
             "scaling by k");
    c.expect(std::abs(x.statistic - oracle::chi2_by_expected(a, b, d0, d)) <=
                 1e-9 * std::max(1.0, x.statistic),
             "expected-count form");
  }
  return c.outcome("12.5 exact, p=" + format_double(r.p_value) + ", 1000 random tables");
}

// 7 -------------------------------------------------------------------------

Outcome binning() {
  Checker c;
  VadLexicon lex;
  AssociationTable t;
  auto add = [&](const std::string& w, double score) {
    lex.entries[w] = {0.5, 0.5, 0.5};
    t.entries[w] = {score, 30, 1, false};
  };
  add("at", 1.25);
  add("below", 1.2499);
  add("low_edge", 0.75);
  const auto curve = vad_trend(t, lex, 0.5, 1);
  std::map<double, std::uint64_t> bins;
  for (const auto& b : curve.bins) bins[b.center] = b.n_words;
  c.expect(bins.size() == 2 && bins[1.0] == 2 && bins[1.5] == 1, "1.25 -> 1.5, 1.2499 -> 1.0");

  VadLexicon big;
  AssociationTable tt;
  for (int i = 0; i < 100; ++i) {
    const auto w = "full" + std::to_string(i);
    big.entries[w] = {0.5, 0.5, 0.5};
    tt.entries[w] = {0.1, 30, 1, false};
  }
  for (int i = 0; i < 99; ++i) {
    const auto w = "thin" + std::to_string(i);
    big.entries[w] = {0.5, 0.5, 0.5};
    tt.entries[w] = {2.0, 30, 1, false};
  }
  const auto kept = vad_trend(tt, big, 0.5, 100);
  c.expect(kept.bins.size() == 1 && kept.bins[0].center == 0.0 && kept.bins[0].n_words == 100,
           "bin with 99 types kept or bin with 100 dropped");
  return c.outcome("boundaries 1.25/1.2499 and 99/100 types hold");
}

// 8 -------------------------------------------------------------------------

Outcome profile_exactness() {
  Checker c;
  EmotionLexicon emo;
  emo.entries["happy"] = {Emotion::kJoy, Emotion::kPositive};
  emo.entries["sad"] = {Emotion::kSadness, Emotion::kNegative};
  const auto ep = emotion_profile(
      Corpus::from_counts("c", 1, {{"happy", 2}, {"sad", 1}, {"zzz", 1}}), emo);
  c.expect(ep.denominator == 3, "emotion denominator");
  c.expect(ep.counts.at(Emotion::kJoy) * 3 == 2 * ep.denominator &&
               std::abs(ep.percent.at(Emotion::kJoy) - 200.0 / 3) < 1e-12,
           "joy 66.67%");
  c.expect(std::abs(ep.percent.at(Emotion::kSadness) - 100.0 / 3) < 1e-12, "sadness 33.33%");
  c.expect(emotion_profile(Corpus::from_counts("c", 1, {{"zzz", 1}}), emo).empty(),
           "empty emotion profile");

  VadLexicon vad;
  vad.entries["hi"] = {0.75, 0.75, 0.75};
  vad.entries["lo"] = {0.25, 0.25, 0.25};
  vad.entries["mid"] = {0.5, 0.5, 0.5};
  const auto vp = vad_extremes(Corpus::from_counts("c", 1, {{"hi", 1}, {"lo", 1}, {"mid", 1}}), vad);
  for (auto d : kAllVadDimensions) {
    c.expect(vp[d].high_count == 1 && vp[d].low_count == 1, "VAD 0.75/0.25 boundaries");
  }

  AgeLexicon age;
  age.entries["lol"].set(static_cast<std::size_t>(AgeGroup::k13to18));
  age.entries["family"].set(static_cast<std::size_t>(AgeGroup::k30plus));
  age.entries["work"].set(static_cast<std::size_t>(AgeGroup::k30plus));
  age.entries["both"].set(static_cast<std::size_t>(AgeGroup::k13to18));
  age.entries["both"].set(static_cast<std::size_t>(AgeGroup::k19to22));
  const auto ap = age_profile(
      Corpus::from_counts("c", 1, {{"lol", 1}, {"family", 1}, {"work", 1}, {"zzz", 1}}), age);
  c.expect(std::abs(ap.percent.at(AgeGroup::k13to18) - 100.0 / 3) < 1e-12, "13to18 33.33%");
  c.expect(std::abs(ap.percent.at(AgeGroup::k30plus) - 200.0 / 3) < 1e-12, "30plus 66.67%");
  const auto both = age_profile(
      Corpus::from_counts("c", 1, {{"both", 2}, {"lol", 3}, {"work", 1}, {"zzz", 4}}), age);
  c.expect(both.denominator == 6 && both.counts.at(AgeGroup::k13to18) == 5 &&
               both.counts.at(AgeGroup::k19to22) == 2,
           "multi-group token counted once in the denominator");

  EmotionProfile a = ep, b = ep;
  a.percent[Emotion::kJoy] = 10.0;
  b.percent[Emotion::kJoy] = 7.0;
  c.expect(profile_diff(a, b).at(Emotion::kJoy) == 10.0 - 7.0, "profile_diff sign");
  return c.outcome("emotion, VAD, age and diff micro-corpora exact");
}

// 9 -------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int sh(const std::string& cmd) { return std::system(cmd.c_str()); }

Outcome end_to_end() {
  const fs::path work = fs::temp_directory_path() / "corpkit_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string cli = CORPKIT_CLI_PATH;
  const std::string synth = CORPKIT_SYNTH_PATH;
  const std::string w = work.string();
  const std::string quiet = " 2>>" + w + "/log.txt";

  Checker c;
  if (sh(synth + " -o " + w + " >/dev/null" + quiet) != 0) return {Status::kFail, "synthetic generator failed"};

  std::uint64_t docs = 0;
  for (const std::string term : {"solitude", "lonely", "loneliness"}) {
    const int rc = sh(cli + " ingest -i " + w + "/solo_raw.jsonl -q " + term + " --name " + term +
                      " -o " + w + "/" + term + ".jsonl --stats " + w + "/" + term +
                      ".stats.json" + quiet);
    c.expect(rc == 0, "ingest " + term);
  }
  c.expect(sh(cli + " ingest -i " + w + "/general_raw.jsonl --name general -o " + w +
              "/general.jsonl --stats " + w + "/general.stats.json" + quiet) == 0,
           "ingest general");
  for (const std::string name : {"solitude", "lonely", "loneliness", "general"}) {
    std::ifstream in(work / (name + ".jsonl"));
    docs += static_cast<std::uint64_t>(
        std::count(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>(), '\n'));
  }
  c.expect(docs >= 10000, "only " + std::to_string(docs) + " documents after ingest");

  const std::string args =
      " report -t " + w + "/solitude.jsonl -t " + w + "/lonely.jsonl -t " + w +
      "/loneliness.jsonl -r " + w + "/general.jsonl -l " + w + "/emolex.txt --vad " + w +
      "/vad.txt --age-lexicon " + w + "/age.csv --ssa-dir " + w +
      "/ssa --exclude solitude,lonely,loneliness --contrast solitude "
      "--contrast-against lonely,loneliness --seed 7";
  double slowest = 0;
  auto report = [&](const std::string& out, unsigned threads) {
    const auto start = Clock::now();
    const int rc = sh(cli + args + " --threads " + std::to_string(threads) + " -o " + w + "/" +
                      out + quiet);
    slowest = std::max(slowest, seconds_since(start));
    c.expect(rc == 0, "report " + out + " exited " + std::to_string(rc));
    return slurp(work / out);
  };
  const auto first = report("report_a.json", 1);
  const auto second = report("report_b.json", 1);
  const auto many = report("report_c.json", std::max(4u, std::thread::hardware_concurrency()));
  c.expect(!first.empty(), "empty report");
  c.expect(first == second, "two 1-thread runs differ");
  c.expect(first == many, "1-thread and many-thread runs differ");
  c.expect(slowest < 60.0, "report took " + fmt(slowest) + " s");
  const auto outcome = c.outcome(std::to_string(docs) + " documents, " +
                                 std::to_string(first.size()) + " report bytes identical, " +
                                 "slowest run " + fmt(slowest) + " s");
  if (c.ok()) fs::remove_all(work);
  return outcome;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "PMI oracle equivalence", pmi_oracle},
      {2, "association properties", association_properties},
      {3, "pipeline invariants", pipeline_invariants},
      {4, "name table reproduction", ssa_reproduction},
      {5, "age lexicon reproduction", age_reproduction},
      {6, "chi-squared", chi_squared},
      {7, "trend binning contract", binning},
      {8, "profile exactness", profile_exactness},
      {9, "end-to-end determinism", end_to_end},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    failed += o.status == Status::kFail;
    std::cout << tag << "  " << cr.number << "  " << cr.title << "  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
