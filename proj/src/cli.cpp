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

#include "corpkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "corpkit/association.hpp"
#include "corpkit/corpus.hpp"
#include "corpkit/document.hpp"
#include "corpkit/error.hpp"
#include "corpkit/ingest.hpp"
#include "corpkit/io.hpp"
#include "corpkit/lexicons.hpp"
#include "corpkit/profiles.hpp"
#include "corpkit/stats.hpp"
#include "corpkit/text.hpp"
#include "json.hpp"

namespace corpkit::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Bad flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Missing or unreadable input paths.
class InputError : public Error {
 public:
  using Error::Error;
};

// Reads a JSON object of flag values. Keys are long flag names without the
// leading dashes and apply to the subcommand being run. A nested object
// named after that subcommand applies only to it; objects named after other
// subcommands are ignored.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* app) : app_(app) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    const auto json = nlohmann::json::parse(input, nullptr, false);
    if (json.is_discarded() || !json.is_object()) {
      throw CLI::FileError("config file is not a JSON object");
    }
    const auto selected = app_->get_subcommands();
    if (selected.empty()) return {};
    const std::string sub = selected.front()->get_name();
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : json.items()) {
      if (!value.is_object()) {
        items.push_back(item(sub, key, value));
      } else if (key == sub) {
        for (const auto& [k, v] : value.items()) {
          if (v.is_object()) throw CLI::FileError("config: nested object under '" + key + "." + k + "'");
          items.push_back(item(sub, k, v));
        }
      }
    }
    return items;
  }

 private:
  static CLI::ConfigItem item(const std::string& sub, const std::string& key,
                              const nlohmann::json& value) {
    CLI::ConfigItem it;
    it.parents = {sub};
    it.name = key;
    if (value.is_array()) {
      for (const auto& v : value) it.inputs.push_back(scalar(v));
    } else {
      it.inputs.push_back(scalar(value));
    }
    return it;
  }

  static std::string scalar(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  const CLI::App* app_;
};

struct NamedPath {
  std::string name;
  std::string path;
};

// "name=path" or a bare path (name = file stem).
NamedPath parse_named_path(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq != std::string::npos && eq > 0 && arg.substr(0, eq).find('/') == std::string::npos) {
    return {arg.substr(0, eq), arg.substr(eq + 1)};
  }
  return {fs::path(arg).stem().string(), arg};
}

void require_file(const std::string& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw InputError("file not found: " + path);
  std::ifstream probe(path);
  if (!probe) throw InputError("file not readable: " + path);
}

void require_dir(const std::string& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) throw InputError("directory not found: " + path);
}

WordSet parse_word_list(const std::vector<std::string>& raw) {
  WordSet out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      const auto t = trim(piece);
      if (!t.empty()) out.insert(to_lower(t));
    }
  }
  return out;
}

// Everything a subcommand needs to print or write its result.
class Context {
 public:
  Context(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  std::ostream& err() { return err_; }

  void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
      write(out_);
      out_.flush();
      return;
    }
    AtomicFile file(path);
    write(file.stream());
    file.commit();
  }

  std::vector<Document> load_documents(const std::string& path) {
    auto result = read_documents_file(path);
    if (result.malformed > 0) {
      err_ << path << ": skipped " << result.malformed << " malformed line(s)\n";
      for (const auto& issue : result.issues) {
        err_ << path << ":" << issue.line << ": " << issue.message << "\n";
      }
    }
    decode_errors_ += result.malformed;
    return std::move(result.documents);
  }

  std::uint64_t decode_errors() const { return decode_errors_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::uint64_t decode_errors_ = 0;
};

struct CommonOptions {
  std::string output;
  unsigned threads = 0;
};

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("-o,--output", common.output, "Output file (default: stdout)");
  sub->add_option("--threads", common.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();
}

void add_assoc_options(CLI::App* sub, AssocConfig& cfg) {
  sub->add_option("--min-freq", cfg.min_total_freq, "Minimum combined frequency")
      ->capture_default_str();
  sub->add_option("--threshold", cfg.strong_threshold, "Strong-association threshold")
      ->capture_default_str();
  sub->add_option("--smoothing", cfg.zero_count_substitute, "Substitute for a zero count")
      ->capture_default_str();
}

std::vector<NamedPath> named_paths(const std::vector<std::string>& specs) {
  std::vector<NamedPath> out;
  for (const auto& s : specs) out.push_back(parse_named_path(s));
  for (const auto& p : out) require_file(p.path);
  return out;
}

Corpus load_corpus(Context& ctx, const NamedPath& np, unsigned threads) {
  const auto docs = ctx.load_documents(np.path);
  return build_corpus(np.name, docs, threads);
}

// Pools several inputs into one corpus named "a+b+...".
Corpus load_union(Context& ctx, const std::vector<NamedPath>& paths, unsigned threads) {
  std::vector<Document> docs;
  std::string name;
  for (const auto& p : paths) {
    auto part = ctx.load_documents(p.path);
    docs.insert(docs.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
    name += (name.empty() ? "" : "+") + p.name;
  }
  return build_corpus(name, docs, threads);
}

Json chi2_or_null(const std::function<Chi2Result()>& test) {
  try {
    return to_json(test());
  } catch (const DomainError&) {
    return nullptr;
  }
}

Json emotion_tests(const std::vector<EmotionProfile>& profiles) {
  Json tests = Json::array();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      const auto& a = profiles[i];
      const auto& b = profiles[j];
      if (a.empty() || b.empty()) continue;
      for (auto e : kAllEmotions) {
        tests.push_back({{"label", to_string(e)},
                         {"a", a.corpus_name},
                         {"b", b.corpus_name},
                         {"test", chi2_or_null([&] {
                            return proportion_test(a.counts.at(e), a.denominator, b.counts.at(e),
                                                   b.denominator);
                          })}});
      }
    }
  }
  return tests;
}

Json vad_tests(const std::vector<VadExtremesProfile>& profiles) {
  Json tests = Json::array();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      const auto& a = profiles[i];
      const auto& b = profiles[j];
      if (a.empty() || b.empty()) continue;
      for (auto d : kAllVadDimensions) {
        for (const bool high : {false, true}) {
          const Count ka = high ? a[d].high_count : a[d].low_count;
          const Count kb = high ? b[d].high_count : b[d].low_count;
          tests.push_back(
              {{"dimension", to_string(d)},
               {"class", high ? "high" : "low"},
               {"a", a.corpus_name},
               {"b", b.corpus_name},
               {"test", chi2_or_null([&] {
                  return proportion_test(ka, a.denominator, kb, b.denominator);
                })}});
        }
      }
    }
  }
  return tests;
}

Json age_tests(const std::vector<AgeProfile>& profiles) {
  Json tests = Json::array();
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      const auto& a = profiles[i];
      const auto& b = profiles[j];
      if (a.empty() || b.empty()) continue;
      for (auto g : kAllAgeGroups) {
        tests.push_back({{"group", to_string(g)},
                         {"a", a.corpus_name},
                         {"b", b.corpus_name},
                         {"test", chi2_or_null([&] {
                            return proportion_test(a.counts.at(g), a.denominator, b.counts.at(g),
                                                   b.denominator);
                          })}});
      }
    }
  }
  return tests;
}

Json age_summary_json(const AgeLexicon& lex) {
  Json groups;
  for (auto g : kAllAgeGroups) groups[std::string(to_string(g))] = lex.summary.per_group[static_cast<std::size_t>(g)];
  return {{"rows", lex.summary.rows},
          {"alnum_terms", lex.summary.alnum_terms},
          {"dropped_not_alnum", lex.summary.dropped_not_alnum},
          {"dropped_not_positive", lex.summary.dropped_not_positive},
          {"dropped_not_significant", lex.summary.dropped_not_significant},
          {"kept_per_group", groups}};
}

Json strong_list_json(const AssociationTable& table, const Corpus& freq_corpus, Direction dir,
                      std::size_t k, const AssocConfig& cfg) {
  Json list = Json::array();
  for (const auto& w : top_frequent_strong(table, freq_corpus, dir, k, cfg)) {
    const auto* e = table.find(w);
    list.push_back({{"word", w},
                    {"score", e->score},
                    {"freq", freq_corpus.freq(w)},
                    {"smoothed", e->smoothed}});
  }
  return list;
}

Json gender_json(const std::string& corpus_name, std::span<const Document> docs,
                 const NameGenderTable& names, const EmotionLexicon* emolex,
                 const WordSet& exclude, unsigned threads) {
  const auto split = split_by_gender(docs, names, corpus_name, threads);
  Json j;
  j["corpus"] = corpus_name;
  j["documents"] = {{"female", split.female.doc_count()},
                    {"male", split.male.doc_count()},
                    {"unknown", split.unknown_count}};
  if (emolex) {
    const auto f = emotion_profile(split.female, *emolex, exclude);
    const auto m = emotion_profile(split.male, *emolex, exclude);
    j["profiles"] = {{"female", to_json(f)}, {"male", to_json(m)}};
    if (f.empty() || m.empty()) {
      j["diff_female_minus_male"] = nullptr;
    } else {
      Json diff;
      for (const auto& [e, v] : profile_diff(f, m)) diff[std::string(to_string(e))] = v;
      j["diff_female_minus_male"] = diff;
    }
    j["tests"] = emotion_tests({f, m});
  }
  return j;
}

struct NameSource {
  std::string names_file;
  std::string ssa_dir;
  NameTableOptions options;
};

void add_name_source(CLI::App* sub, NameSource& src) {
  sub->add_option("--names", src.names_file, "Cached name-gender table (from `names`)");
  sub->add_option("--ssa-dir", src.ssa_dir, "Directory of yobYYYY.txt name-count files");
  sub->add_option("--year-from", src.options.year_from)->capture_default_str();
  sub->add_option("--year-to", src.options.year_to)->capture_default_str();
  sub->add_option("--min-count", src.options.min_count, "Names need more than this many uses")
      ->capture_default_str();
  sub->add_option("--purity", src.options.purity, "Minimum share for one gender")
      ->capture_default_str();
}

bool has_name_source(const NameSource& src) { return !src.names_file.empty() || !src.ssa_dir.empty(); }

void check_name_source(const NameSource& src) {
  if (!src.names_file.empty() && !src.ssa_dir.empty()) {
    throw UsageError("--names and --ssa-dir are mutually exclusive");
  }
  if (!src.names_file.empty()) require_file(src.names_file);
  if (!src.ssa_dir.empty()) require_dir(src.ssa_dir);
}

NameGenderTable load_names(const NameSource& src, unsigned threads) {
  if (!src.names_file.empty()) return load_name_gender_table_file(src.names_file);
  auto options = src.options;
  options.threads = threads;
  return build_name_gender_table(fs::path(src.ssa_dir), options);
}

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    throw UsageError("unsupported --format '" + format + "'");
  }
}

// ---------------------------------------------------------------------------
// Subcommands. Each registers its flags and returns the action to run.

using Action = std::function<void(Context&)>;

Action register_ingest(CLI::App& app) {
  auto* sub = app.add_subcommand("ingest", "Filter raw documents into a corpus");
  struct Opts {
    CommonOptions common;
    std::vector<std::string> inputs;
    std::vector<std::string> query;
    PipelineConfig cfg;
    bool keep_urls = false;
    std::string stats;
    std::string name = "corpus";
  };
  auto o = std::make_shared<Opts>();
  add_common(sub, o->common);
  sub->add_option("-i,--input", o->inputs, "Line-delimited JSON documents");
  sub->add_option("-q,--query", o->query, "Query terms (repeatable or comma separated)")
      ->delimiter(',');
  sub->add_option("--min-tokens", o->cfg.min_tokens)->capture_default_str();
  sub->add_option("--per-user-cap", o->cfg.per_user_cap)->capture_default_str();
  sub->add_flag("--keep-urls", o->keep_urls, "Do not drop documents containing URLs");
  sub->add_option("--stats", o->stats, "Write pipeline statistics JSON here (default: stderr)");
  sub->add_option("--name", o->name, "Corpus name")->capture_default_str();
  return [o](Context& ctx) {
    if (o->inputs.empty()) throw UsageError("ingest: --input is required");
    for (const auto& p : o->inputs) require_file(p);
    auto cfg = o->cfg;
    cfg.drop_urls = !o->keep_urls;
    for (const auto& term : parse_word_list(o->query)) {
      const auto tokens = tokenize(term);
      if (tokens.size() != 1) throw UsageError("query term '" + term + "' is not a single token");
      cfg.query_terms.insert(tokens.front());
    }
    cfg.validate();
    std::vector<Document> docs;
    for (const auto& p : o->inputs) {
      auto part = ctx.load_documents(p);
      docs.insert(docs.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
    auto result = run_pipeline(std::move(docs), cfg, o->name, o->common.threads);
    result.stats.decode_errors = ctx.decode_errors();
    ctx.emit(o->common.output, [&](std::ostream& os) { write_documents(os, result.kept); });
    const auto stats = to_json(result.stats).dump(2) + "\n";
    if (o->stats.empty()) {
      ctx.err() << stats;
    } else {
      ctx.emit(o->stats, [&](std::ostream& os) { os << stats; });
    }
  };
}

Action register_sample(CLI::App& app) {
  auto* sub = app.add_subcommand("sample", "Draw documents for manual annotation (TSV)");
  struct Opts {
    CommonOptions common;
    std::string input;
    std::vector<std::string> query;
    int n = 100;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  add_common(sub, o->common);
  sub->add_option("-i,--input", o->input, "Line-delimited JSON documents");
  sub->add_option("-q,--query", o->query, "Only sample documents containing one of these terms")
      ->delimiter(',');
  sub->add_option("-n,--count", o->n, "Sample size")->capture_default_str();
  sub->add_option("--seed", o->seed)->capture_default_str();
  return [o](Context& ctx) {
    if (o->input.empty()) throw UsageError("sample: --input is required");
    require_file(o->input);
    if (o->n < 1) throw UsageError("sample: --count must be >= 1");
    auto docs = ctx.load_documents(o->input);
    const auto terms = parse_word_list(o->query);
    if (!terms.empty()) {
      std::erase_if(docs, [&](const Document& d) { return !matches_query(d, terms); });
    }
    const auto sample = sample_for_annotation(docs, o->n, o->seed);
    if (sample.shortfall) {
      ctx.err() << "warning: requested " << o->n << " documents but only "
                << sample.documents.size() << " available\n";
    }
    ctx.emit(o->common.output, [&](std::ostream& os) { write_annotation_tsv(os, sample.documents); });
  };
}

struct TablePairOpts {
  CommonOptions common;
  std::vector<std::string> targets;
  std::vector<std::string> references;
  AssocConfig cfg;
};

void add_table_pair(CLI::App* sub, TablePairOpts& o) {
  add_common(sub, o.common);
  sub->add_option("-t,--target", o.targets, "Target corpus [name=]path (repeat to pool)");
  sub->add_option("-r,--reference", o.references, "Reference corpus [name=]path (repeat to pool)");
  add_assoc_options(sub, o.cfg);
}

struct LoadedPair {
  Corpus target;
  Corpus reference;
  AssociationTable table;
};

LoadedPair load_pair(Context& ctx, const TablePairOpts& o, const char* cmd) {
  if (o.targets.empty() || o.references.empty()) {
    throw UsageError(std::string(cmd) + ": --target and --reference are required");
  }
  const auto targets = named_paths(o.targets);
  const auto references = named_paths(o.references);
  o.cfg.validate();
  LoadedPair p;
  p.target = load_union(ctx, targets, o.common.threads);
  p.reference = load_union(ctx, references, o.common.threads);
  p.table = build_association_table(p.target, p.reference, o.cfg, o.common.threads);
  return p;
}

Action register_assoc(CLI::App& app) {
  auto* sub = app.add_subcommand("assoc", "Association (or contrast) table of target vs reference");
  struct Opts : TablePairOpts {
    std::string format = "tsv";
  };
  auto o = std::make_shared<Opts>();
  add_table_pair(sub, *o);
  sub->add_option("--format", o->format, "tsv or json")->capture_default_str();
  return [o](Context& ctx) {
    check_format(o->format, {"tsv", "json"});
    const auto p = load_pair(ctx, *o, "assoc");
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "tsv") {
        write_association_tsv(os, p.table);
        return;
      }
      Json entries = Json::array();
      for (const auto& [w, e] : p.table.by_score()) {
        entries.push_back({{"word", w},
                           {"score", e.score},
                           {"freq_target", e.freq_target},
                           {"freq_reference", e.freq_reference},
                           {"smoothed", e.smoothed}});
      }
      Json j{{"target", p.table.target_name},
             {"reference", p.table.reference_name},
             {"target_tokens", p.target.total_tokens()},
             {"reference_tokens", p.reference.total_tokens()},
             {"entries", entries}};
      os << j.dump(2) << "\n";
    });
  };
}

Action register_strong(CLI::App& app) {
  auto* sub = app.add_subcommand("strong", "Most frequent strongly associated words");
  struct Opts : TablePairOpts {
    std::string direction = "both";
    std::size_t k = 25;
    std::string format = "tsv";
  };
  auto o = std::make_shared<Opts>();
  add_table_pair(sub, *o);
  sub->add_option("--direction", o->direction, "positive, negative or both")
      ->capture_default_str();
  sub->add_option("-k,--top", o->k, "List length")->capture_default_str();
  sub->add_option("--format", o->format, "tsv or json")->capture_default_str();
  return [o](Context& ctx) {
    check_format(o->format, {"tsv", "json"});
    if (o->direction != "positive" && o->direction != "negative" && o->direction != "both") {
      throw UsageError("strong: --direction must be positive, negative or both");
    }
    if (o->k < 1) throw UsageError("strong: --top must be >= 1");
    const auto p = load_pair(ctx, *o, "strong");
    std::vector<std::pair<Direction, const Corpus*>> dirs;
    if (o->direction != "negative") dirs.push_back({Direction::kPositive, &p.target});
    if (o->direction != "positive") dirs.push_back({Direction::kNegative, &p.reference});
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "json") {
        Json j{{"target", p.table.target_name}, {"reference", p.table.reference_name}};
        for (const auto& [dir, corpus] : dirs) {
          j[dir == Direction::kPositive ? "positive" : "negative"] =
              strong_list_json(p.table, *corpus, dir, o->k, o->cfg);
        }
        os << j.dump(2) << "\n";
        return;
      }
      os << "direction\trank\tword\tscore\tfreq\tsmoothed\n";
      for (const auto& [dir, corpus] : dirs) {
        const auto words = top_frequent_strong(p.table, *corpus, dir, o->k, o->cfg);
        for (std::size_t i = 0; i < words.size(); ++i) {
          const auto* e = p.table.find(words[i]);
          os << (dir == Direction::kPositive ? "positive" : "negative") << '\t' << i + 1 << '\t'
             << words[i] << '\t' << format_double(e->score) << '\t' << corpus->freq(words[i])
             << '\t' << (e->smoothed ? "true" : "false") << '\n';
        }
      }
    });
  };
}

struct ProfileOpts {
  CommonOptions common;
  std::vector<std::string> inputs;
  std::vector<std::string> exclude;
  std::string format = "json";
};

void add_profile_opts(CLI::App* sub, ProfileOpts& o) {
  add_common(sub, o.common);
  sub->add_option("-i,--input", o.inputs, "Corpus [name=]path (repeatable)");
  sub->add_option("--exclude", o.exclude, "Words left out of every count (e.g. query terms)");
  sub->add_option("--format", o.format, "json or csv")->capture_default_str();
}

std::vector<Corpus> load_inputs(Context& ctx, const std::vector<NamedPath>& inputs, unsigned threads) {
  std::vector<Corpus> out;
  for (const auto& np : inputs) out.push_back(load_corpus(ctx, np, threads));
  return out;
}

Action register_emotions(CLI::App& app) {
  auto* sub = app.add_subcommand("emotions", "Emotion-word percentages with chi-squared tests");
  struct Opts : ProfileOpts {
    std::string lexicon;
  };
  auto o = std::make_shared<Opts>();
  add_profile_opts(sub, *o);
  sub->add_option("-l,--lexicon", o->lexicon, "Emotion lexicon (word TAB emotion TAB 0/1)");
  return [o](Context& ctx) {
    check_format(o->format, {"json", "csv"});
    if (o->inputs.empty() || o->lexicon.empty()) {
      throw UsageError("emotions: --input and --lexicon are required");
    }
    const auto inputs = named_paths(o->inputs);
    require_file(o->lexicon);
    const auto lex = load_emotion_lexicon_file(o->lexicon);
    const auto exclude = parse_word_list(o->exclude);
    std::vector<EmotionProfile> profiles;
    for (const auto& c : load_inputs(ctx, inputs, o->common.threads)) {
      profiles.push_back(emotion_profile(c, lex, exclude));
    }
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "csv") {
        write_emotion_csv(os, profiles);
        return;
      }
      Json j{{"profiles", Json::array()}, {"tests", emotion_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      os << j.dump(2) << "\n";
    });
  };
}

Action register_vad(CLI::App& app) {
  auto* sub = app.add_subcommand("vad", "Share of high/low valence, arousal and dominance words");
  struct Opts : ProfileOpts {
    std::string vad;
    double low = 0.25;
    double high = 0.75;
  };
  auto o = std::make_shared<Opts>();
  add_profile_opts(sub, *o);
  sub->add_option("--vad", o->vad, "VAD lexicon (word TAB v TAB a TAB d)");
  sub->add_option("--low", o->low, "Scores <= this are low")->capture_default_str();
  sub->add_option("--high", o->high, "Scores >= this are high")->capture_default_str();
  return [o](Context& ctx) {
    check_format(o->format, {"json", "csv"});
    if (o->inputs.empty() || o->vad.empty()) throw UsageError("vad: --input and --vad are required");
    if (!(o->low < o->high)) throw UsageError("vad: --low must be below --high");
    const auto inputs = named_paths(o->inputs);
    require_file(o->vad);
    const auto lex = load_vad_lexicon_file(o->vad);
    const auto exclude = parse_word_list(o->exclude);
    std::vector<VadExtremesProfile> profiles;
    for (const auto& c : load_inputs(ctx, inputs, o->common.threads)) {
      profiles.push_back(vad_extremes(c, lex, o->low, o->high, exclude));
    }
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "csv") {
        write_vad_csv(os, profiles);
        return;
      }
      Json j{{"profiles", Json::array()}, {"tests", vad_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      os << j.dump(2) << "\n";
    });
  };
}

Action register_vad_trend(CLI::App& app) {
  auto* sub = app.add_subcommand("vad-trend", "Binned VAD means along an association score axis");
  struct Opts : TablePairOpts {
    std::string table;
    std::string vad;
    double step = 0.5;
    std::uint64_t min_words = 100;
    std::string format = "csv";
  };
  auto o = std::make_shared<Opts>();
  add_table_pair(sub, *o);
  sub->add_option("--table", o->table, "Association table TSV (instead of --target/--reference)");
  sub->add_option("--vad", o->vad, "VAD lexicon");
  sub->add_option("--step", o->step, "Bin width")->capture_default_str();
  sub->add_option("--min-words", o->min_words, "Smallest bin reported")->capture_default_str();
  sub->add_option("--format", o->format, "csv or json")->capture_default_str();
  return [o](Context& ctx) {
    check_format(o->format, {"csv", "json"});
    if (o->vad.empty()) throw UsageError("vad-trend: --vad is required");
    if (!o->table.empty() && (!o->targets.empty() || !o->references.empty())) {
      throw UsageError("vad-trend: use either --table or --target/--reference");
    }
    if (!(o->step > 0)) throw UsageError("vad-trend: --step must be > 0");
    if (o->min_words < 1) throw UsageError("vad-trend: --min-words must be >= 1");
    if (!o->table.empty()) require_file(o->table);
    require_file(o->vad);
    AssociationTable table;
    if (!o->table.empty()) {
      table = read_association_tsv_file(o->table);
    } else {
      table = load_pair(ctx, *o, "vad-trend").table;
    }
    const auto lex = load_vad_lexicon_file(o->vad);
    const auto curve = vad_trend(table, lex, o->step, o->min_words);
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "csv") {
        write_trend_csv(os, curve);
      } else {
        os << to_json(curve).dump(2) << "\n";
      }
    });
  };
}

Action register_gender(CLI::App& app) {
  auto* sub = app.add_subcommand("gender", "Split by inferred author gender and compare emotions");
  struct Opts : ProfileOpts {
    std::string lexicon;
    NameSource names;
  };
  auto o = std::make_shared<Opts>();
  add_profile_opts(sub, *o);
  sub->add_option("-l,--lexicon", o->lexicon, "Emotion lexicon");
  add_name_source(sub, o->names);
  return [o](Context& ctx) {
    check_format(o->format, {"json"});
    if (o->inputs.empty() || o->lexicon.empty() || !has_name_source(o->names)) {
      throw UsageError("gender: --input, --lexicon and one of --names/--ssa-dir are required");
    }
    const auto inputs = named_paths(o->inputs);
    require_file(o->lexicon);
    check_name_source(o->names);
    const auto lex = load_emotion_lexicon_file(o->lexicon);
    const auto names = load_names(o->names, o->common.threads);
    const auto exclude = parse_word_list(o->exclude);
    Json results = Json::array();
    for (const auto& np : inputs) {
      const auto docs = ctx.load_documents(np.path);
      results.push_back(gender_json(np.name, docs, names, &lex, exclude, o->common.threads));
    }
    ctx.emit(o->common.output, [&](std::ostream& os) {
      Json j{{"names", {{"female", names.female.size()}, {"male", names.male.size()}}},
             {"corpora", results}};
      os << j.dump(2) << "\n";
    });
  };
}

Action register_age(CLI::App& app) {
  auto* sub = app.add_subcommand("age", "Percentage of words associated with each age group");
  struct Opts : ProfileOpts {
    std::string lexicon;
    double alpha = 0.05;
  };
  auto o = std::make_shared<Opts>();
  add_profile_opts(sub, *o);
  sub->add_option("-l,--age-lexicon", o->lexicon, "Age lexicon CSV (term,group,score,pvalue)");
  sub->add_option("--alpha", o->alpha, "Significance level")->capture_default_str();
  return [o](Context& ctx) {
    check_format(o->format, {"json", "csv"});
    if (o->inputs.empty() || o->lexicon.empty()) {
      throw UsageError("age: --input and --age-lexicon are required");
    }
    const auto inputs = named_paths(o->inputs);
    require_file(o->lexicon);
    const auto lex = load_age_lexicon_file(o->lexicon, o->alpha);
    const auto exclude = parse_word_list(o->exclude);
    std::vector<AgeProfile> profiles;
    for (const auto& c : load_inputs(ctx, inputs, o->common.threads)) {
      profiles.push_back(age_profile(c, lex, exclude));
    }
    ctx.emit(o->common.output, [&](std::ostream& os) {
      if (o->format == "csv") {
        write_age_csv(os, profiles);
        return;
      }
      Json j{{"lexicon", age_summary_json(lex)},
             {"profiles", Json::array()},
             {"tests", age_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      os << j.dump(2) << "\n";
    });
  };
}

Action register_names(CLI::App& app) {
  auto* sub = app.add_subcommand("names", "Build the first-name gender table from yearly name counts");
  struct Opts {
    CommonOptions common;
    NameSource names;
  };
  auto o = std::make_shared<Opts>();
  add_common(sub, o->common);
  add_name_source(sub, o->names);
  return [o](Context& ctx) {
    if (o->names.ssa_dir.empty()) throw UsageError("names: --ssa-dir is required");
    if (!o->names.names_file.empty()) throw UsageError("names: --names is an input for other commands");
    check_name_source(o->names);
    const auto table = load_names(o->names, o->common.threads);
    ctx.err() << "female names: " << table.female.size() << ", male names: " << table.male.size()
              << "\n";
    ctx.emit(o->common.output, [&](std::ostream& os) { write_name_gender_table(os, table); });
  };
}

Action register_report(CLI::App& app) {
  auto* sub = app.add_subcommand("report", "Run every analysis into one JSON bundle");
  struct Opts {
    CommonOptions common;
    std::vector<std::string> targets;
    std::string reference;
    AssocConfig cfg;
    std::size_t k = 25;
    std::string emolex, vad, age;
    double alpha = 0.05;
    NameSource names;
    std::vector<std::string> exclude;
    std::string contrast;
    std::vector<std::string> contrast_against;
    double low = 0.25, high = 0.75, step = 0.5;
    std::uint64_t min_words = 100;
    int sample_n = 100;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opts>();
  add_common(sub, o->common);
  sub->add_option("-t,--target", o->targets, "Sub-corpus [name=]path (repeatable)");
  sub->add_option("-r,--reference", o->reference, "Reference corpus [name=]path");
  add_assoc_options(sub, o->cfg);
  sub->add_option("-k,--top", o->k, "Length of strong-word lists")->capture_default_str();
  sub->add_option("-l,--lexicon", o->emolex, "Emotion lexicon");
  sub->add_option("--vad", o->vad, "VAD lexicon");
  sub->add_option("--age-lexicon", o->age, "Age lexicon CSV");
  sub->add_option("--alpha", o->alpha, "Age-lexicon significance level")->capture_default_str();
  add_name_source(sub, o->names);
  sub->add_option("--exclude", o->exclude, "Words excluded from lexicon profiles");
  sub->add_option("--contrast", o->contrast, "Target name placed on the positive side");
  sub->add_option("--contrast-against", o->contrast_against, "Target names pooled on the negative side")
      ->delimiter(',');
  sub->add_option("--low", o->low)->capture_default_str();
  sub->add_option("--high", o->high)->capture_default_str();
  sub->add_option("--step", o->step)->capture_default_str();
  sub->add_option("--min-words", o->min_words)->capture_default_str();
  sub->add_option("--sample-n", o->sample_n, "Annotation sample size per sub-corpus")
      ->capture_default_str();
  sub->add_option("--seed", o->seed)->capture_default_str();
  return [o](Context& ctx) {
    if (o->targets.empty() || o->reference.empty()) {
      throw UsageError("report: --target and --reference are required");
    }
    const auto targets = named_paths(o->targets);
    const auto reference = named_paths({o->reference}).front();
    for (const auto* p : {&o->emolex, &o->vad, &o->age}) {
      if (!p->empty()) require_file(*p);
    }
    if (has_name_source(o->names)) check_name_source(o->names);
    o->cfg.validate();
    if (!(o->low < o->high)) throw UsageError("report: --low must be below --high");
    if (!(o->step > 0) || o->min_words < 1 || o->k < 1 || o->sample_n < 1) {
      throw UsageError("report: --step, --min-words, --top and --sample-n must be positive");
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (!index.emplace(targets[i].name, i).second) {
        throw UsageError("report: duplicate target name '" + targets[i].name + "'");
      }
    }
    if (o->contrast.empty() != o->contrast_against.empty()) {
      throw UsageError("report: --contrast and --contrast-against go together");
    }
    for (const auto& n : o->contrast_against) {
      if (!index.contains(n) || n == o->contrast) throw UsageError("report: bad --contrast-against '" + n + "'");
    }
    if (!o->contrast.empty() && !index.contains(o->contrast)) {
      throw UsageError("report: unknown --contrast target '" + o->contrast + "'");
    }
    const unsigned threads = o->common.threads;

    std::vector<std::vector<Document>> target_docs;
    std::vector<Corpus> corpora;
    for (const auto& t : targets) {
      target_docs.push_back(ctx.load_documents(t.path));
      corpora.push_back(build_corpus(t.name, target_docs.back(), threads));
    }
    const auto reference_docs = ctx.load_documents(reference.path);
    const Corpus reference_corpus = build_corpus(reference.name, reference_docs, threads);
    std::vector<Corpus> all = corpora;
    all.push_back(reference_corpus);

    std::optional<EmotionLexicon> emolex;
    std::optional<VadLexicon> vad;
    std::optional<AgeLexicon> age;
    std::optional<NameGenderTable> names;
    if (!o->emolex.empty()) emolex = load_emotion_lexicon_file(o->emolex);
    if (!o->vad.empty()) vad = load_vad_lexicon_file(o->vad);
    if (!o->age.empty()) age = load_age_lexicon_file(o->age, o->alpha);
    if (has_name_source(o->names)) names = load_names(o->names, threads);
    const auto exclude = parse_word_list(o->exclude);

    Json report;
    report["config"] = {{"min_total_freq", o->cfg.min_total_freq},
                        {"strong_threshold", o->cfg.strong_threshold},
                        {"zero_count_substitute", o->cfg.zero_count_substitute},
                        {"top_k", o->k},
                        {"vad_low_max", o->low},
                        {"vad_high_min", o->high},
                        {"bin_step", o->step},
                        {"min_words", o->min_words},
                        {"age_alpha", o->alpha},
                        {"exclude", exclude},
                        {"sample_n", o->sample_n},
                        {"seed", o->seed}};
    Json corpora_json = Json::array();
    for (const auto& c : all) {
      corpora_json.push_back({{"name", c.name()},
                              {"documents", c.doc_count()},
                              {"tokens", c.total_tokens()},
                              {"vocabulary", c.vocabulary_size()}});
    }
    report["corpora"] = corpora_json;
    if (ctx.decode_errors() > 0) report["decode_errors"] = ctx.decode_errors();

    Json assoc = Json::array();
    for (const auto& c : corpora) {
      const auto table = build_association_table(c, reference_corpus, o->cfg, threads);
      std::size_t smoothed = 0;
      for (const auto& [w, e] : table.entries) smoothed += e.smoothed;
      assoc.push_back(
          {{"target", c.name()},
           {"reference", reference_corpus.name()},
           {"entries", table.entries.size()},
           {"smoothed_entries", smoothed},
           {"strong_positive", strong_words(table, Direction::kPositive, o->cfg).size()},
           {"strong_negative", strong_words(table, Direction::kNegative, o->cfg).size()},
           {"top_positive", strong_list_json(table, c, Direction::kPositive, o->k, o->cfg)}});
    }
    report["association"] = assoc;

    if (!o->contrast.empty()) {
      const Corpus& a = corpora[index.at(o->contrast)];
      std::vector<Corpus> parts;
      std::string b_name;
      for (const auto& n : o->contrast_against) {
        parts.push_back(corpora[index.at(n)]);
        b_name += (b_name.empty() ? "" : "+") + n;
      }
      const Corpus b = merge_corpora(b_name, parts);
      const auto table = contrast_table(a, b, o->cfg, threads);
      Json contrast{{"a", a.name()},
                    {"b", b.name()},
                    {"entries", table.entries.size()},
                    {"top_positive", strong_list_json(table, a, Direction::kPositive, o->k, o->cfg)},
                    {"top_negative", strong_list_json(table, b, Direction::kNegative, o->k, o->cfg)}};
      if (vad) contrast["vad_trend"] = to_json(vad_trend(table, *vad, o->step, o->min_words));
      report["contrast"] = contrast;
    }

    if (emolex) {
      std::vector<EmotionProfile> profiles;
      for (const auto& c : all) profiles.push_back(emotion_profile(c, *emolex, exclude));
      Json j{{"profiles", Json::array()}, {"tests", emotion_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      report["emotions"] = j;
    }
    if (vad) {
      std::vector<VadExtremesProfile> profiles;
      for (const auto& c : all) profiles.push_back(vad_extremes(c, *vad, o->low, o->high, exclude));
      Json j{{"profiles", Json::array()}, {"tests", vad_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      report["vad"] = j;
    }
    if (age) {
      std::vector<AgeProfile> profiles;
      for (const auto& c : all) profiles.push_back(age_profile(c, *age, exclude));
      Json j{{"lexicon", age_summary_json(*age)}, {"profiles", Json::array()}, {"tests", age_tests(profiles)}};
      for (const auto& p : profiles) j["profiles"].push_back(to_json(p));
      report["age"] = j;
    }
    if (names) {
      Json g = Json::array();
      for (std::size_t i = 0; i < targets.size(); ++i) {
        g.push_back(gender_json(targets[i].name, target_docs[i], *names,
                                emolex ? &*emolex : nullptr, exclude, threads));
      }
      g.push_back(gender_json(reference.name, reference_docs, *names, emolex ? &*emolex : nullptr,
                              exclude, threads));
      report["gender"] = {{"names", {{"female", names->female.size()}, {"male", names->male.size()}}},
                          {"corpora", g}};
    }

    Json samples = Json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const auto s = sample_for_annotation(target_docs[i], o->sample_n, o->seed);
      Json ids = Json::array();
      for (const auto& d : s.documents) ids.push_back(d.doc_id);
      samples.push_back({{"corpus", targets[i].name}, {"shortfall", s.shortfall}, {"doc_ids", ids}});
    }
    report["samples"] = samples;

    ctx.emit(o->common.output, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"corpkit: contrastive corpus analysis with word-association and lexicon profiles", "corpkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "corpkit 1.0.0");
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "JSON file with flag values; command-line flags win");

  std::map<std::string, Action> actions;
  actions["ingest"] = register_ingest(app);
  actions["sample"] = register_sample(app);
  actions["assoc"] = register_assoc(app);
  actions["strong"] = register_strong(app);
  actions["emotions"] = register_emotions(app);
  actions["vad"] = register_vad(app);
  actions["vad-trend"] = register_vad_trend(app);
  actions["gender"] = register_gender(app);
  actions["age"] = register_age(app);
  actions["names"] = register_names(app);
  actions["report"] = register_report(app);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::ConfigError& e) {
    std::string msg = e.what();
    const std::string prefix = "INI was not able to parse ";
    if (msg.starts_with(prefix)) msg = "unknown config key '" + msg.substr(prefix.size()) + "'";
    err << "error: " << msg << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Context ctx(out, err);
  try {
    for (auto* sub : app.get_subcommands()) actions.at(sub->get_name())(ctx);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IdentityConflictError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace corpkit::cli
