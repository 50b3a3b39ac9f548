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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpkit/cli.hpp"
#include "corpkit/document.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace corpkit;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir;

  Workspace() {
    dir = fs::temp_directory_path() /
          ("corpkit_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  std::string write(const std::string& name, const std::string& body) const {
    std::ofstream(dir / name, std::ios::binary) << body;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir / name, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string docs(const std::string& name, const std::vector<Document>& d) const {
    std::ofstream out(dir / name, std::ios::binary);
    write_documents(out, d);
    return path(name);
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "corpkit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Document> repeated(const std::string& prefix, const std::string& text, int n,
                               const std::string& user = "someone") {
  std::vector<Document> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(testing::doc(prefix + std::to_string(i), text + " " + prefix + std::to_string(i),
                               prefix + std::to_string(i), i, user));
  }
  return out;
}

}  // namespace

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"assoc", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"assoc"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  const auto v = run({"--version"});
  CHECK(v.code == cli::kExitOk);
}

TEST_CASE("cli: ingest writes kept documents and reconciling stats") {
  Workspace ws;
  std::vector<Document> raw = {
      testing::doc("1", "i feel so lonely", "a", 0),
      testing::doc("2", "I  feel so LONELY", "b", 1),
      testing::doc("3", "so lonely", "c", 2),
      testing::doc("4", "lonely nights http://a.co/x", "d", 3),
      testing::doc("5", "lonely and quiet evening", "e", 4),
      testing::doc("6", "nothing about it here", "f", 5),
  };
  const auto in = ws.docs("raw.jsonl", raw);
  {
    std::ofstream append(in, std::ios::app);
    append << "{broken\n";
  }
  const auto r = run({"ingest", "-i", in, "-q", "lonely,solitude", "-o", ws.path("kept.jsonl"),
                      "--stats", ws.path("stats.json")});
  REQUIRE(r.code == cli::kExitOk);
  const auto stats = nlohmann::json::parse(ws.read("stats.json"));
  CHECK(stats["input"] == 6);
  CHECK(stats["kept"] == 2);
  CHECK(stats["dropped"]["no_query_match"] == 1);
  CHECK(stats["dropped"]["duplicate"] == 1);
  CHECK(stats["decode_errors"] == 1);
  std::istringstream kept(ws.read("kept.jsonl"));
  CHECK(read_documents(kept).documents.size() == 2);
}

TEST_CASE("cli: missing input is an input error and writes nothing") {
  Workspace ws;
  const auto r = run({"assoc", "-t", ws.path("nope.jsonl"), "-r", ws.path("nope2.jsonl"), "-o",
                      ws.path("out.tsv")});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.err.find("nope.jsonl") != std::string::npos);
  CHECK_FALSE(fs::exists(ws.path("out.tsv")));
  CHECK(fs::is_empty(ws.dir));
}

TEST_CASE("cli: identity conflict across pooled inputs") {
  Workspace ws;
  const auto a = ws.docs("a.jsonl", repeated("d", "quiet night", 3));
  const auto b = ws.docs("b.jsonl", repeated("d", "other text", 1));
  const auto r = run({"assoc", "-t", a, "-t", b, "-r", a});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.err.find("d0") != std::string::npos);
}

TEST_CASE("cli: assoc, strong and vad-trend") {
  Workspace ws;
  auto target = repeated("t", "alone alone quiet", 30);
  auto reference = repeated("r", "quiet busy busy", 30);
  const auto t = ws.docs("solo.jsonl", target);
  const auto r = ws.docs("general.jsonl", reference);

  const auto tsv = run({"assoc", "-t", t, "-r", r, "--threads", "2"});
  REQUIRE(tsv.code == cli::kExitOk);
  // alone: 60 of 150 target tokens, absent in the reference (0.5 of 150).
  CHECK(tsv.out.find("alone\t6.906890595608519\t60\t0\ttrue\n") != std::string::npos);
  CHECK(tsv.out.find("quiet\t0\t30\t30\tfalse\n") != std::string::npos);

  const auto json = run({"assoc", "-t", t, "-r", r, "--format", "json"});
  REQUIRE(json.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["target"] == "solo");
  CHECK(j["reference"] == "general");
  CHECK(j["entries"][0]["word"] == "alone");

  const auto strong = run({"strong", "-t", t, "-r", r, "--direction", "positive"});
  REQUIRE(strong.code == cli::kExitOk);
  CHECK(strong.out.find("alone") != std::string::npos);
  CHECK(strong.out.find("busy") == std::string::npos);

  ws.write("table.tsv", tsv.out);
  const auto vad = ws.write("vad.txt", "alone\t0.2\t0.3\t0.4\nbusy\t0.6\t0.7\t0.8\n");
  const auto trend =
      run({"vad-trend", "--table", ws.path("table.tsv"), "--vad", vad, "--min-words", "1"});
  REQUIRE(trend.code == cli::kExitOk);
  CHECK(trend.out.starts_with("bin_center,n_words,mean_v,mean_a,mean_d\n"));
  CHECK(trend.out.find("\n7,1,0.2,0.3,0.4\n") != std::string::npos);

  CHECK(run({"assoc", "-t", t, "-r", r, "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"assoc", "-t", t, "-r", r, "--smoothing", "2"}).code == cli::kExitUsage);
}

TEST_CASE("cli: emotions, gender and config file") {
  Workspace ws;
  auto female = repeated("f", "happy happy day", 4, "Mary Jane");
  auto male = repeated("m", "sad day", 4, "john.smith");
  auto all = female;
  all.insert(all.end(), male.begin(), male.end());
  const auto corpus = ws.docs("all.jsonl", all);
  const auto lex = ws.write("emo.txt", "happy\tjoy\t1\nsad\tsadness\t1\nday\tjoy\t0\n");
  const auto names = ws.write("names.tsv", "john\tM\nmary\tF\n");

  const auto e = run({"emotions", "-i", corpus, "-l", lex});
  REQUIRE(e.code == cli::kExitOk);
  const auto ej = nlohmann::json::parse(e.out);
  CHECK(ej.dump().find("\"denominator\":20") != std::string::npos);

  const auto g = run({"gender", "-i", corpus, "-l", lex, "--names", names});
  REQUIRE(g.code == cli::kExitOk);
  const auto gj = nlohmann::json::parse(g.out);
  CHECK(gj.dump().find("\"unknown\":0") != std::string::npos);

  const auto cfg = ws.write("cfg.json", R"({"lexicon": ")" + lex + R"(", "emotions": {"format": "csv"}})");
  const auto c = run({"--config", cfg, "emotions", "-i", corpus});
  REQUIRE(c.code == cli::kExitOk);
  CHECK(c.out.starts_with("corpus,label,count,denominator,percent\n"));
  // Flags on the command line win over the file.
  const auto over = run({"--config", cfg, "emotions", "-i", corpus, "--format", "json"});
  REQUIRE(over.code == cli::kExitOk);
  CHECK(over.out.starts_with("{"));

  const auto bad = ws.write("bad.json", R"({"nonsense": 1})");
  const auto b = run({"--config", bad, "emotions", "-i", corpus, "-l", lex});
  CHECK(b.code == cli::kExitUsage);
  CHECK(b.err.find("nonsense") != std::string::npos);
}
