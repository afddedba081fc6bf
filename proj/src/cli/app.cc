// Copyright 2026 The locmt Authors.
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


#include "locmt/cli/app.h"

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.h"
#include "locmt/common/error.h"
#include "locmt/corpus/segment_io.h"

namespace locmt::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Resolve(const std::string& base, const std::string& p) {
  if (p.empty() || fs::path(p).is_absolute()) return p;
  return (fs::path(base) / p).lexically_normal().string();
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("config '") + key + "': " + e.what());
  }
}

// Error with `where` prepended to its message.
Error Located(const Error& e, const std::string& where) {
  const std::string what = e.what();
  const std::string prefix = std::string(ErrorCodeName(e.code())) + ": ";
  return Error(e.code(), where + ": " + (what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what));
}

}  // namespace

PipelineConfig PipelineConfig::FromJson(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "pipeline config must be a JSON object");
  PipelineConfig c;
  for (const auto& [k, v] : j.items()) {
    if (k == "manifest") {
      c.manifest = Resolve(base_dir, Get<std::string>(j, "manifest"));
    } else if (k == "output_dir") {
      c.output_dir = Resolve(base_dir, Get<std::string>(j, "output_dir"));
    } else if (k == "filters") {
      c.filters = Get<std::vector<std::string>>(j, "filters");
    } else if (k == "normalize") {
      c.normalize = Get<bool>(j, "normalize");
    } else if (k == "typography") {
      c.typography = corpus::TypographyRules::FromJson(v);
    } else if (k == "valid_size") {
      c.valid_size = Get<std::size_t>(j, "valid_size");
    } else if (k == "test_size") {
      c.test_size = Get<std::size_t>(j, "test_size");
    } else if (k == "seed") {
      c.seed = Get<std::uint64_t>(j, "seed");
    } else if (k == "scope") {
      c.scope = Get<std::string>(j, "scope");
    } else if (k == "signatures") {
      c.signatures = Get<std::map<std::string, std::map<std::string, std::string>>>(j, "signatures");
    } else if (k == "qa_config") {
      c.qa_config = Resolve(base_dir, Get<std::string>(j, "qa_config"));
    } else if (k == "verbosity") {
      c.verbosity = Get<int>(j, "verbosity");
    } else if (k == "threads") {
      c.threads = Get<unsigned>(j, "threads");
    } else {
      throw Error(ErrorCode::kInvalidConfig, "unknown pipeline config key '" + k + "'");
    }
  }
  return c;
}

PipelineConfig LoadPipelineConfig(const std::string& path) {
  json j;
  try {
    j = json::parse(corpus::ReadFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  return PipelineConfig::FromJson(j, fs::path(path).parent_path().string());
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Game localisation corpora: build, clean, split, score and check.", "locmt"};
  app.set_version_flag("--version", LOCMT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  unsigned threads = 0;
  int verbose = 0;
  bool quiet = false;
  auto* config_opt = app.add_option("--config", config_path, "pipeline config JSON (default: $LOCMT_CONFIG)")
                         ->check(CLI::ExistingFile);
  auto* threads_opt = app.add_option("-j,--threads", threads, "worker threads, 0 = all cores");
  app.add_flag("-v,--verbose", verbose, "print progress");
  app.add_flag("-q,--quiet", quiet, "suppress warnings");

  auto add_report = [](CLI::App* sub, internal::ReportFlags& r) {
    sub->add_option("--report", r.prefix, "write <prefix>.json and <prefix>.txt");
    sub->add_flag("--json", r.json, "print the JSON report instead of text");
  };
  std::string typography_path;

  internal::BuildArgs build;
  bool no_normalize = false;
  auto* build_cmd = app.add_subcommand("build", "parse, align, clean and normalize every manifest entry");
  auto* build_manifest = build_cmd->add_option("-m,--manifest", build.manifest, "corpus manifest JSON")
                             ->check(CLI::ExistingFile);
  auto* build_out = build_cmd->add_option("-o,--out", build.output_dir, "output directory");
  auto* build_filter = build_cmd->add_option("--filter", build.filters, "meta filter: key=value or src_tokens>N");
  auto* build_no_norm = build_cmd->add_flag("--no-normalize", no_normalize, "keep typography as found");
  auto* build_typo = build_cmd->add_option("--typography", typography_path, "typography rules JSON")
                         ->check(CLI::ExistingFile);
  add_report(build_cmd, build.report);

  internal::CleanArgs clean;
  auto* clean_cmd = app.add_subcommand("clean", "drop empty, untranslated and duplicate segments");
  clean_cmd->add_option("-i,--in", clean.input, "segments (.jsonl or .tmx)")->required()->check(CLI::ExistingFile);
  clean_cmd->add_option("-o,--out", clean.output, "cleaned segments (.jsonl)");
  auto* clean_filter = clean_cmd->add_option("--filter", clean.filters, "meta filter: key=value or src_tokens>N");
  clean_cmd->add_flag("--normalize", clean.normalize, "apply typography normalization to the survivors");
  auto* clean_typo = clean_cmd->add_option("--typography", typography_path, "typography rules JSON")
                         ->check(CLI::ExistingFile);
  add_report(clean_cmd, clean.report);

  internal::SplitArgs split;
  std::size_t valid_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;
  auto* split_cmd = app.add_subcommand("split", "seeded train/valid/test split");
  split_cmd->add_option("-i,--in", split.input, "segments (.jsonl or .tmx)")->required()->check(CLI::ExistingFile);
  split_cmd->add_option("-o,--out-dir", split.output_dir, "directory for train/valid/test.jsonl");
  auto* split_valid = split_cmd->add_option("--valid", valid_size, "validation set size");
  auto* split_test = split_cmd->add_option("--test", test_size, "test set size");
  auto* split_seed = split_cmd->add_option("--seed", seed, "shuffle seed");
  auto* split_scope = split_cmd->add_option("--scope", split.scope, "key=value a held-out segment must carry");
  add_report(split_cmd, split.report);

  internal::StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "sentence and token counts");
  stats_cmd->add_option("-i,--in", stats.input, "segments (.jsonl or .tmx)")->check(CLI::ExistingFile);
  stats_cmd->add_option("--source", stats.source, "plain-text source side")->check(CLI::ExistingFile);
  stats_cmd->add_option("--target", stats.target, "plain-text target side")->check(CLI::ExistingFile);
  stats_cmd->add_option("--source-lang", stats.source_lang, "source language of plain text")
      ->capture_default_str();
  stats_cmd->add_option("--target-lang", stats.target_lang, "target language of plain text")
      ->capture_default_str();
  add_report(stats_cmd, stats.report);

  internal::ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "write segments as TMX, plain-text bitext or JSONL");
  export_cmd->add_option("-i,--in", exp.input, "segments (.jsonl or .tmx)")->required()->check(CLI::ExistingFile);
  export_cmd->add_option("-f,--format", exp.format, "tmx, bitext or jsonl")
      ->required()
      ->check(CLI::IsMember({"tmx", "bitext", "jsonl"}));
  export_cmd->add_option("-o,--out", exp.output, "output file (bitext: source side)")->required();
  export_cmd->add_option("--out-target", exp.output_target, "bitext target side");

  internal::ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "corpus BLEU, chrF2++ and TER of one system");
  score_cmd->add_option("--hyp", score.hyp, "hypotheses, one per line")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--ref", score.ref, "references, one per line")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--name", score.name, "system name (default: hyp file stem)");
  score_cmd->add_option("--metric", score.metrics, "bleu, chrf or ter (default: all)");
  score_cmd->add_option("--sig", score.signature_overrides, "signature override, e.g. ter.case=mixed");
  add_report(score_cmd, score.report);

  internal::CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "score several systems against one reference");
  compare_cmd->add_option("--ref", compare.ref, "references, one per line")->check(CLI::ExistingFile);
  compare_cmd->add_option("--system", compare.systems, "name=path or path, repeatable");
  compare_cmd->add_option("--from-json", compare.from_json, "render a stored comparison without rescoring")
      ->check(CLI::ExistingFile);
  compare_cmd->add_option("--sig", compare.signature_overrides, "signature override, e.g. bleu.case=lc");
  add_report(compare_cmd, compare.report);

  internal::QaArgs qa;
  auto* qa_cmd = app.add_subcommand("qa", "rule-based localisation checks");
  qa_cmd->add_option("-i,--in", qa.input, "segments (.jsonl or .tmx)")->required()->check(CLI::ExistingFile);
  auto* qa_config = qa_cmd->add_option("--qa-config", qa.config, "QA config JSON")->check(CLI::ExistingFile);
  qa_cmd->add_option("--annotations", qa.annotations, "manual findings JSONL")->check(CLI::ExistingFile);
  qa_cmd->add_option("--findings", qa.findings, "write all findings as JSONL");
  qa_cmd->add_option("--profile", qa.profile, "register profile: tu, vous or unconstrained");
  add_report(qa_cmd, qa.report);

  internal::RecipeArgs recipe;
  auto* recipe_cmd = app.add_subcommand("recipe", "emit the NMT training recipe");
  recipe_cmd->add_option("--set", recipe.sets, "field=value override, repeatable");
  recipe_cmd->add_option("--overrides", recipe.overrides, "JSON object of overrides")->check(CLI::ExistingFile);
  recipe_cmd->add_option("-o,--out", recipe.output, "also write the recipe here");

  CLI::App* active = &app;
  auto help_of = [&] { return active->help(); };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const auto parsed = app.get_subcommands();
    if (!parsed.empty()) active = parsed.front();
    err << "error: " << e.what() << "\n\n" << help_of();
    return kExitUsage;
  }
  active = app.get_subcommands().front();

  internal::Context ctx{out, err};
  try {
    PipelineConfig cfg;
    if (config_opt->count() == 0) {
      if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') config_path = env;
    }
    if (!config_path.empty()) {
      if (!fs::exists(config_path)) throw internal::UsageError(std::string(kConfigEnv) + ": no such file: " + config_path);
      try {
        cfg = LoadPipelineConfig(config_path);
      } catch (const Error& e) {
        throw Located(e, config_path);
      }
    }
    ctx.verbosity = quiet ? 0 : (verbose > 0 ? 2 : cfg.verbosity);
    ctx.threads = threads_opt->count() > 0 ? threads : cfg.threads;

    corpus::TypographyRules typography = cfg.typography;
    if (!typography_path.empty()) {
      try {
        typography = corpus::TypographyRules::FromJson(json::parse(corpus::ReadFile(typography_path)));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kInvalidConfig, typography_path + ": " + e.what());
      } catch (const Error& e) {
        throw Located(e, typography_path);
      }
    }
    std::vector<std::string> sig_defaults;
    for (const auto& [metric, kv] : cfg.signatures) {
      for (const auto& [k, v] : kv) sig_defaults.push_back(metric + "." + k + "=" + v);
    }
    auto with_sig_defaults = [&](std::vector<std::string>& flags) {
      flags.insert(flags.begin(), sig_defaults.begin(), sig_defaults.end());
    };

    if (active == build_cmd) {
      if (build_manifest->count() == 0) build.manifest = cfg.manifest;
      if (build_out->count() == 0) build.output_dir = cfg.output_dir;
      if (build_filter->count() == 0) build.filters = cfg.filters;
      build.normalize = build_no_norm->count() > 0 ? !no_normalize : cfg.normalize;
      build.typography = build_typo->count() > 0 ? typography : cfg.typography;
      if (!build.manifest.empty() && !fs::exists(build.manifest)) {
        throw internal::UsageError("manifest not found: " + build.manifest);
      }
      internal::RunBuild(build, ctx);
    } else if (active == clean_cmd) {
      if (clean_filter->count() == 0) clean.filters = cfg.filters;
      clean.typography = clean_typo->count() > 0 ? typography : cfg.typography;
      internal::RunClean(clean, ctx);
    } else if (active == split_cmd) {
      split.valid_size = split_valid->count() > 0 ? std::optional<std::size_t>(valid_size) : cfg.valid_size;
      split.test_size = split_test->count() > 0 ? std::optional<std::size_t>(test_size) : cfg.test_size;
      split.seed = split_seed->count() > 0 ? std::optional<std::uint64_t>(seed) : cfg.seed;
      if (split_scope->count() == 0) split.scope = cfg.scope;
      if (split.output_dir.empty()) split.output_dir = cfg.output_dir;
      internal::RunSplit(split, ctx);
    } else if (active == stats_cmd) {
      internal::RunStats(stats, ctx);
    } else if (active == export_cmd) {
      internal::RunExport(exp, ctx);
    } else if (active == score_cmd) {
      with_sig_defaults(score.signature_overrides);
      internal::RunScore(score, ctx);
    } else if (active == compare_cmd) {
      if (compare.from_json.empty()) with_sig_defaults(compare.signature_overrides);
      internal::RunCompare(compare, ctx);
    } else if (active == qa_cmd) {
      if (qa_config->count() == 0) qa.config = cfg.qa_config;
      internal::RunQa(qa, ctx);
    } else if (active == recipe_cmd) {
      internal::RunRecipe(recipe, ctx);
    }
  } catch (const internal::UsageError& e) {
    err << "error: " << e.what() << "\n\n" << help_of();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace locmt::cli
