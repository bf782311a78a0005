// Copyright 2026 The etype Authors.
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

// Command-line front end for the event type induction pipeline.
//
//   etype extract      --parses FILE --out DIR
//   etype select       --pair-freq FILE --background FILE [--occurrences FILE] --out DIR
//   etype disambiguate --features FILE --dictionary FILE --out DIR
//   etype featurize    --occurrences FILE --features FILE --senses FILE --out DIR
//   etype cluster      --pair-features FILE --out DIR
//   etype evaluate     --pred FILE --ref FILE [--out FILE]
//   etype run-all      --config FILE
//
// Exit status: 0 on success, 2 for bad input, 1 for anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "etype/errors.h"
#include "etype/formats.h"
#include "etype/pipeline.h"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct Overrides {
  std::optional<uint64_t> seed;
  std::optional<double> keep_fraction;
  std::optional<size_t> mwp_length;
  std::optional<double> rbo_p;
  std::optional<int> pca_dim;
  std::optional<int> num_clusters;
  std::optional<int> max_iters;
  std::optional<int> pretrain_epochs;
  std::optional<std::string> out_dir;
};

uint64_t ParseSeed(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw etype::InputError(std::string(what) + ": not an unsigned integer: '" +
                            text + "'");
  }
}

etype::PipelineConfig ResolveConfig(const std::string& config_file,
                                    const Overrides& o) {
  etype::PipelineConfig config;
  if (!config_file.empty()) config = etype::PipelineConfig::Load(config_file);
  if (const char* env = std::getenv("ETYPE_SEED"); env && *env) {
    config.seed = ParseSeed(env, "ETYPE_SEED");
  }
  if (o.seed) config.seed = *o.seed;
  if (o.keep_fraction) config.keep_fraction = *o.keep_fraction;
  if (o.mwp_length) config.mwp_length = *o.mwp_length;
  if (o.rbo_p) config.rbo_p = *o.rbo_p;
  if (o.pca_dim) config.pca_dim = *o.pca_dim;
  if (o.num_clusters) config.train.num_clusters = *o.num_clusters;
  if (o.max_iters) config.train.max_iters = *o.max_iters;
  if (o.pretrain_epochs) config.train.pretrain_epochs = *o.pretrain_epochs;
  if (o.out_dir) config.paths.output_dir = *o.out_dir;
  config.Validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event type induction from predicate-object pairs"};
  app.set_version_flag("--version", std::string(etype::ToolVersion()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  Overrides o;
  app.add_option("--config", config_file, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Random seed (overrides ETYPE_SEED)");
  app.add_option("--keep-fraction", o.keep_fraction,
                 "Fraction of salient lemmas kept per role");
  app.add_option("--mwp-length", o.mwp_length,
                 "Length of masked-word prediction lists");
  app.add_option("--rbo-p", o.rbo_p, "Rank-biased overlap persistence");
  app.add_option("--pca-dim", o.pca_dim, "Context feature dimension");
  app.add_option("-k,--num-clusters", o.num_clusters, "Number of event types");
  app.add_option("--max-iters", o.max_iters, "Clustering iteration cap");
  app.add_option("--pretrain-epochs", o.pretrain_epochs,
                 "Autoencoder pretraining epochs");

  std::string parses, pair_freq, background, occurrences, features,
      dictionary, senses, pair_features, pred, ref, out;

  auto* extract = app.add_subcommand("extract", "Extract predicate-object pairs");
  extract->add_option("--parses", parses, "Parsed sentence JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--out", out, "Output directory")->required();

  auto* select = app.add_subcommand("select", "Rank and keep salient lemmas");
  select->add_option("--pair-freq", pair_freq, "Pair frequency TSV")
      ->required()
      ->check(CLI::ExistingFile);
  select->add_option("--background", background, "Background statistics TSV")
      ->required()
      ->check(CLI::ExistingFile);
  select->add_option("--occurrences", occurrences,
                     "Occurrence JSONL to filter to salient lemmas")
      ->check(CLI::ExistingFile);
  select->add_option("--out", out, "Output directory")->required();

  auto* disambiguate =
      app.add_subcommand("disambiguate", "Assign senses to predicate mentions");
  disambiguate->add_option("--features", features, "Mention feature JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  disambiguate->add_option("--dictionary", dictionary, "Sense dictionary JSON")
      ->required()
      ->check(CLI::ExistingFile);
  disambiguate->add_option("--out", out, "Output directory")->required();

  auto* featurize = app.add_subcommand("featurize", "Build pair features");
  featurize->add_option("--occurrences", occurrences, "Occurrence JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  featurize->add_option("--features", features, "Mention feature JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  featurize->add_option("--senses", senses, "Sense assignment JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  featurize->add_option("--out", out, "Output directory")->required();

  auto* cluster = app.add_subcommand("cluster", "Train and cluster pairs");
  cluster->add_option("--pair-features", pair_features, "Pair feature JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cluster->add_option("--out", out, "Output directory")->required();

  auto* evaluate =
      app.add_subcommand("evaluate", "Score predicted against reference labels");
  evaluate->add_option("--pred", pred, "Predicted labels")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--ref", ref, "Reference labels")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--out", out, "Write the report here, not stdout");

  auto* run_all = app.add_subcommand("run-all", "Run every stage in order");
  run_all->add_option("--out", o.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const etype::PipelineConfig config = ResolveConfig(config_file, o);
    if (*extract) {
      etype::CmdExtract(parses, out, config);
    } else if (*select) {
      std::optional<etype::fs::path> occ;
      if (!occurrences.empty()) occ = occurrences;
      etype::CmdSelect(pair_freq, background, occ, out, config);
    } else if (*disambiguate) {
      etype::CmdDisambiguate(features, dictionary, out, config);
    } else if (*featurize) {
      etype::CmdFeaturize(occurrences, features, senses, out, config);
    } else if (*cluster) {
      etype::CmdCluster(pair_features, out, config);
    } else if (*evaluate) {
      const std::string report = etype::CmdEvaluate(pred, ref);
      if (out.empty()) {
        std::cout << report << '\n';
      } else {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot write " + out);
        file << report << '\n';
      }
    } else if (*run_all) {
      if (config_file.empty()) {
        throw etype::InputError("run-all requires --config");
      }
      etype::CmdRunAll(config);
    }
  } catch (const etype::InputError& e) {
    std::cerr << "etype: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "etype: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
