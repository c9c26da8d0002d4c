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

// topicshift: command-line front end.
//
// Configuration precedence, lowest first: built-in defaults, the file named
// by TOPICSHIFT_CONFIG, the file given with --config, explicit flags.
//
// Exit status: 0 success, 2 missing input, 3 invalid arguments or records,
// 1 anything else.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "topicshift/error.h"
#include "topicshift/pipeline.h"

namespace ts = topicshift;

namespace {

int ExitCode(ts::ErrorKind kind) {
  switch (kind) {
    case ts::ErrorKind::kMissingInput:
      return 2;
    case ts::ErrorKind::kSchema:
    case ts::ErrorKind::kInvalidArgument:
    case ts::ErrorKind::kDomain:
      return 3;
  }
  return 1;
}

}  // namespace

int main(int argc, char **argv) {
  const ts::PipelineConfig defaults = ts::DefaultConfig();
  ts::PipelineConfig flags = defaults;
  std::vector<std::string> platforms;
  for (ts::Platform p : defaults.platforms) platforms.emplace_back(ts::PlatformName(p));

  CLI::App app{"Compare research topics across publications and altmetric sources."};
  app.get_formatter()->column_width(40);
  std::string command;
  std::string config_path;
  bool print_config = false;

  app.add_option("command", command, "ingest|extract|topics|compare|map|linkage|report|all")
      ->check(CLI::IsMember(ts::Commands()));
  app.add_option("--config", config_path, "JSON config file");
  app.add_flag("--print-config", print_config, "Print the effective config and exit");
  app.add_option("--publications", flags.publications, "Publications (JSON Lines)")
      ->capture_default_str();
  app.add_option("--events", flags.events, "Altmetric events (JSON Lines)")
      ->capture_default_str();
  app.add_option("--fixture", flags.fixture, "Topic frequency table (CSV)")
      ->capture_default_str();
  app.add_option("--platforms", platforms, "Sources to include, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--language", flags.language, "Event language filter, empty for none")
      ->capture_default_str();
  app.add_option("--top-n", flags.top_n, "Topics per set")->capture_default_str();
  app.add_option("--relevance-fraction", flags.relevance_fraction,
                 "Share of candidate terms kept")
      ->capture_default_str();
  app.add_option("--min-occurrences", flags.min_occurrences,
                 "Minimum events per candidate term")
      ->capture_default_str();
  app.add_option("--min-occurrences-keywords", flags.min_occurrences_keywords,
                 "Minimum publications per keyword")
      ->capture_default_str();
  app.add_option("--resolution", flags.cluster.resolution, "Clustering resolution")
      ->capture_default_str();
  app.add_option("--min-cluster-size", flags.cluster.min_cluster_size,
                 "Smallest cluster kept as is")
      ->capture_default_str();
  app.add_option("--merge-small", flags.cluster.merge_small,
                 "Attach clusters below the minimum size (true|false)")
      ->capture_default_str();
  app.add_option("--seed", flags.cluster.seed, "Random seed")->capture_default_str();
  app.add_option("--restarts", flags.cluster.restarts, "Clustering restarts")
      ->capture_default_str();
  app.add_option("--layout-iterations", flags.layout_iterations, "Layout iteration cap")
      ->capture_default_str();
  app.add_option("--linkage-keywords", flags.linkage_keywords,
                 "Keywords in linkage output")
      ->capture_default_str();
  app.add_option("--linkage-terms", flags.linkage_terms,
                 "Terms per keyword in linkage output")
      ->capture_default_str();
  app.add_option("--weighted-cosine", flags.weighted_cosine,
                 "Frequency-weighted similarity (true|false)")
      ->capture_default_str();
  app.add_option("--tagger-lexicon", flags.tagger_lexicon, "Extra tagger lexicon (TSV)")
      ->capture_default_str();
  app.add_option("--noun-stoplist", flags.noun_stoplist, "Noun stoplist")
      ->capture_default_str();
  app.add_option("--sentence-abbreviations", flags.sentence_abbreviations,
                 "Abbreviations that do not end sentences")
      ->capture_default_str();
  app.add_option("--label-abbreviations", flags.label_abbreviations,
                 "Label abbreviation expansions (TSV)")
      ->capture_default_str();
  app.add_option("-o,--output", flags.output, "Output directory")->capture_default_str();
  app.add_option("--threads", flags.threads, "Worker threads, 0 for the default")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    ts::PipelineConfig config = defaults;
    if (const char *env = std::getenv("TOPICSHIFT_CONFIG"); env && *env) {
      ts::ApplyConfigFile(env, &config);
    }
    if (!config_path.empty()) ts::ApplyConfigFile(config_path, &config);

    // Explicit flags win over both files.
    auto given = [&](const char *name) { return app.count(name) > 0; };
    if (given("--publications")) config.publications = flags.publications;
    if (given("--events")) config.events = flags.events;
    if (given("--fixture")) config.fixture = flags.fixture;
    if (given("--platforms")) {
      ts::Json names = platforms;
      ts::ApplyConfigJson({{"platforms", names}}, &config);
    }
    if (given("--language")) config.language = flags.language;
    if (given("--top-n")) config.top_n = flags.top_n;
    if (given("--relevance-fraction")) config.relevance_fraction = flags.relevance_fraction;
    if (given("--min-occurrences")) config.min_occurrences = flags.min_occurrences;
    if (given("--min-occurrences-keywords")) {
      config.min_occurrences_keywords = flags.min_occurrences_keywords;
    }
    if (given("--resolution")) config.cluster.resolution = flags.cluster.resolution;
    if (given("--min-cluster-size")) {
      config.cluster.min_cluster_size = flags.cluster.min_cluster_size;
    }
    if (given("--merge-small")) config.cluster.merge_small = flags.cluster.merge_small;
    if (given("--seed")) config.cluster.seed = flags.cluster.seed;
    if (given("--restarts")) config.cluster.restarts = flags.cluster.restarts;
    if (given("--layout-iterations")) config.layout_iterations = flags.layout_iterations;
    if (given("--linkage-keywords")) config.linkage_keywords = flags.linkage_keywords;
    if (given("--linkage-terms")) config.linkage_terms = flags.linkage_terms;
    if (given("--weighted-cosine")) config.weighted_cosine = flags.weighted_cosine;
    if (given("--tagger-lexicon")) config.tagger_lexicon = flags.tagger_lexicon;
    if (given("--noun-stoplist")) config.noun_stoplist = flags.noun_stoplist;
    if (given("--sentence-abbreviations")) {
      config.sentence_abbreviations = flags.sentence_abbreviations;
    }
    if (given("--label-abbreviations")) {
      config.label_abbreviations = flags.label_abbreviations;
    }
    if (given("--output")) config.output = flags.output;
    if (given("--threads")) config.threads = flags.threads;

    if (print_config) {
      std::cout << ts::Dump(ts::ConfigToJson(config));
      return 0;
    }
    if (command.empty()) {
      std::cerr << "topicshift: a command is required\n";
      return 3;
    }
    ts::RunCommand(command, config, std::cerr);
  } catch (const ts::Error &e) {
    std::cerr << "topicshift: " << e.what() << "\n";
    return ExitCode(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "topicshift: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
