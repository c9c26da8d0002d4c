// Copyright 2026 The Topicshift Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "topicshift/error.h"
#include "topicshift/format.h"
#include "topicshift/pipeline.h"

namespace ts = topicshift;
namespace fs = std::filesystem;

namespace {

const std::string kData = TOPICSHIFT_DATA_DIR;

std::string Read(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string Header(const fs::path &path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  return line;
}

fs::path TempDir(const std::string &name) {
  fs::path dir = fs::temp_directory_path() / ("topicshift_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ts::PipelineConfig DemoConfig(const fs::path &out) {
  ts::PipelineConfig c = ts::DefaultConfig();
  c.publications = kData + "/demo/publications.jsonl";
  c.events = kData + "/demo/events.jsonl";
  c.output = out.string();
  return c;
}

int Cli(const std::string &args) {
  std::string command = std::string(TOPICSHIFT_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("hashtag word splitting") {
  CHECK(ts::SplitHashtagWords("BigData") == "Big Data");
  CHECK(ts::SplitHashtagWords("AIEthics") == "AI Ethics");
  CHECK(ts::SplitHashtagWords("big_data") == "big data");
  CHECK(ts::SplitHashtagWords("IoT") == "IoT");
  CHECK(ts::SplitHashtagWords("COVID19") == "COVID19");
  CHECK(ts::SplitHashtagWords("bigdata") == "bigdata");
  CHECK(ts::SplitHashtagWords("MachineLearning") == "Machine Learning");
}

TEST_CASE("config json round trip and validation") {
  ts::PipelineConfig c = ts::DefaultConfig();
  ts::ApplyConfigJson({{"top_n", 50}, {"platforms", {"news", "blog"}}, {"seed", 9}}, &c);
  CHECK(c.top_n == 50);
  CHECK(c.platforms.size() == 2);
  CHECK(c.cluster.seed == 9);
  ts::PipelineConfig d = ts::DefaultConfig();
  ts::ApplyConfigJson(ts::ConfigToJson(c), &d);
  CHECK(ts::ConfigToJson(d) == ts::ConfigToJson(c));

  CHECK_THROWS_AS(ts::ApplyConfigJson({{"bogus", 1}}, &c), ts::Error);
  CHECK_THROWS_AS(ts::ApplyConfigJson({{"top_n", "many"}}, &c), ts::Error);
  CHECK_THROWS_AS(ts::ApplyConfigJson({{"platforms", {"myspace"}}}, &c), ts::Error);

  ts::PipelineConfig bad = ts::DefaultConfig();
  bad.top_n = 0;
  try {
    ts::ValidateConfig(bad, "topics");
    FAIL("expected an error");
  } catch (const ts::Error &e) {
    CHECK(e.kind() == ts::ErrorKind::kInvalidArgument);
    CHECK(std::string(e.what()) == "top_n must be ≥ 1");
  }
  ts::PipelineConfig missing = ts::DefaultConfig();
  missing.publications = "/nonexistent.jsonl";
  missing.events = "/nonexistent.jsonl";
  try {
    ts::ValidateConfig(missing, "ingest");
    FAIL("expected an error");
  } catch (const ts::Error &e) {
    CHECK(e.kind() == ts::ErrorKind::kMissingInput);
  }
}

TEST_CASE("every emitted file follows its schema") {
  fs::path out = TempDir("schema");
  std::ostringstream log;
  auto written = ts::RunCommand("all", DemoConfig(out), log);
  CHECK(written.size() == 24);
  for (const auto &name : written) {
    CHECK_MESSAGE(fs::file_size(out / name) > 0, name);
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
      ts::Json json = ts::Json::parse(Read(out / name));
      CHECK_FALSE(json.is_null());
    }
  }
  CHECK(Header(out / "coverage.csv") == "platform,all_events,unique_events,mentioned_papers,share_pct");
  CHECK(Header(out / "terms.csv") == "label,doc_frequency,relevance,retained");
  CHECK(Header(out / "hashtags.csv") == "canonical,display,frequency");
  CHECK(Header(out / "topic_sets.csv") == "group,canonical,frequency,share_pct,share_docs_pct");
  CHECK(Header(out / "similarity.csv") == "group,K,H,T_all,T_blog,T_news,T_policy,T_wikipedia");
  CHECK(Header(out / "classification.csv") == "canonical,type");
  CHECK(Header(out / "rank_shifts.csv") == "topic,rank_k,rank_t,rank_h,t_direction,h_direction");
  CHECK(Header(out / "edges_terms.csv") == "source,target,cooccurrence,strength");

  auto coverage = ts::Json::parse(Read(out / "coverage.json"));
  CHECK(coverage["publications"] == 50);
  CHECK(coverage["platforms"].size() == 5);
  auto graph = ts::Json::parse(Read(out / "graph_terms.json"));
  for (const auto &node : graph["nodes"]) {
    CHECK(node.contains("label"));
    CHECK(node["cluster"].get<int>() >= 1);
    CHECK(node["position"].size() == 2);
    CHECK(node["overlay"].size() == 4);
  }
  auto report = ts::Json::parse(Read(out / "report.json"));
  for (const char *key : {"coverage", "similarity", "venn", "classification", "rank_shifts"}) {
    CHECK(report.contains(key));
  }
  for (const auto &[key, value] : report["classification"].items()) {
    CHECK(report["venn"]["regions"][key] == value.size());
  }
  std::string svg = Read(out / "term_map.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // The demo contains one duplicate tweet and one Spanish news item.
  CHECK(coverage["platforms"][4]["all_events"] == 161);
  CHECK(coverage["platforms"][4]["unique_events"] == 160);
  fs::remove_all(out);
}

TEST_CASE("fixture mode runs topics and compare only") {
  fs::path out = TempDir("fixture");
  ts::PipelineConfig c = ts::DefaultConfig();
  c.fixture = kData + "/appendix_topics.csv";
  c.output = out.string();
  std::ostringstream log;
  ts::RunCommand("compare", c, log);
  std::ifstream in(out / "similarity.csv");
  std::string line;
  std::map<std::string, std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    auto cells = ts::SplitCsvLine(line);
    rows[cells[0]] = cells;
  }
  CHECK(rows["T_blog"][5] == "0.9587");
  CHECK_THROWS_AS(ts::RunCommand("map", c, log), ts::Error);
  fs::remove_all(out);
}

TEST_CASE("malformed records stop the run with a schema error") {
  fs::path dir = TempDir("schema_error");
  fs::create_directories(dir);
  std::ofstream(dir / "pubs.jsonl") << "{\"doi\":\"10.1/a\"}\n{broken\n";
  std::ofstream(dir / "events.jsonl")
      << "{\"event_id\":\"1\",\"platform\":\"news\",\"dois\":[\"10.1/a\"]}\n";
  ts::PipelineConfig c = ts::DefaultConfig();
  c.publications = (dir / "pubs.jsonl").string();
  c.events = (dir / "events.jsonl").string();
  c.output = (dir / "out").string();
  std::ostringstream log;
  try {
    ts::RunCommand("ingest", c, log);
    FAIL("expected an error");
  } catch (const ts::Error &e) {
    CHECK(e.kind() == ts::ErrorKind::kSchema);
    CHECK(std::string(e.what()).find(":2: error") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("command line exit codes and config precedence") {
  fs::path dir = TempDir("cli");
  fs::create_directories(dir);
  CHECK(Cli("--help") == 0);
  CHECK(Cli("topics --top-n 0") == 3);
  CHECK(Cli("ingest --publications /nonexistent --events /nonexistent") == 2);
  CHECK(Cli("map") == 2);
  CHECK(Cli("bogus") == 3);

  std::ofstream(dir / "config.json") << "{\"top_n\": 7, \"seed\": 3}\n";
  std::string base = std::string(TOPICSHIFT_CLI) + " topics --print-config --config " +
                     (dir / "config.json").string();
  auto run = [](const std::string &command) {
    std::string text;
    FILE *pipe = popen(command.c_str(), "r");
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) text.append(buf, n);
    pclose(pipe);
    return ts::Json::parse(text);
  };
  auto from_file = run(base);
  CHECK(from_file["top_n"] == 7);
  CHECK(from_file["seed"] == 3);
  auto flag_wins = run(base + " --top-n 12");
  CHECK(flag_wins["top_n"] == 12);
  CHECK(flag_wins["seed"] == 3);
  auto env = run("TOPICSHIFT_CONFIG=" + (dir / "config.json").string() + " " +
                 TOPICSHIFT_CLI + " topics --print-config --seed 5");
  CHECK(env["top_n"] == 7);
  CHECK(env["seed"] == 5);
  fs::remove_all(dir);
}

}  // TEST_SUITE
