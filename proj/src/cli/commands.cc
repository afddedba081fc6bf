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


#include "commands.h"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "locmt/common/error.h"
#include "locmt/common/parallel.h"
#include "locmt/corpus/clean.h"
#include "locmt/corpus/filter.h"
#include "locmt/corpus/manifest.h"
#include "locmt/corpus/recipe.h"
#include "locmt/corpus/segment.h"
#include "locmt/corpus/segment_io.h"
#include "locmt/corpus/split.h"
#include "locmt/corpus/stats.h"
#include "locmt/locfile/bitext.h"
#include "locmt/locfile/tmx.h"
#include "locmt/metrics/bleu.h"
#include "locmt/metrics/chrf.h"
#include "locmt/metrics/compare.h"
#include "locmt/metrics/score.h"
#include "locmt/metrics/signature.h"
#include "locmt/metrics/ter.h"
#include "locmt/qa/config.h"
#include "locmt/qa/finding.h"
#include "locmt/qa/suite.h"

namespace locmt::cli::internal {
namespace {

namespace fs = std::filesystem;
using corpus::BiSegment;
using nlohmann::json;

std::string Message(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(ErrorCodeName(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Runs fn and prefixes any Error it throws with `where`.
template <typename Fn>
auto InFile(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + Message(e));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, where + ": " + e.what());
  }
}

void Warn(Context& ctx, const std::string& where, const std::vector<Diagnostic>& diags) {
  if (ctx.verbosity < 1) return;
  for (const auto& d : diags) ctx.err << "warning: " << where << ": " << d.ToString() << "\n";
}

void Progress(Context& ctx, const std::string& msg) {
  if (ctx.verbosity >= 2) ctx.err << msg << "\n";
}

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// JSONL segments, or TMX when the name ends in .tmx.
std::vector<BiSegment> ReadCorpus(const std::string& path, Context& ctx) {
  return InFile(path, [&] {
    const std::string bytes = corpus::ReadFile(path);
    if (!EndsWith(path, ".tmx")) return corpus::ReadSegmentsJsonl(bytes);
    const locfile::TmxDocument doc = locfile::ParseTmx(bytes);
    Warn(ctx, path, doc.diagnostics);
    std::vector<BiSegment> out;
    out.reserve(doc.units.size());
    for (const auto& u : doc.units) out.push_back(corpus::SegmentFromUnit(u));
    return out;
  });
}

void WriteOut(const std::string& path, std::string_view content) {
  InFile(path, [&] {
    const fs::path parent = fs::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) fs::create_directories(parent, ec);
    corpus::WriteFile(path, content);
    return 0;
  });
}

json Envelope(std::string_view kind, const json& payload) {
  json j = payload;
  j["report"] = kind;
  j["tool"] = "locmt";
  j["tool_version"] = LOCMT_VERSION;
  return j;
}

void Emit(Context& ctx, const ReportFlags& flags, std::string_view kind, const json& payload,
          const std::string& text) {
  const json j = Envelope(kind, payload);
  const std::string dumped = j.dump(2) + "\n";
  if (!flags.prefix.empty()) {
    WriteOut(flags.prefix + ".json", dumped);
    WriteOut(flags.prefix + ".txt", text);
  }
  ctx.out << (flags.json ? dumped : text);
}

corpus::MetaFilter MakeFilter(const std::vector<std::string>& exprs) {
  corpus::MetaFilter f;
  for (const auto& e : exprs) {
    try {
      corpus::AddFilterExpression(f, e);
    } catch (const Error& err) {
      throw UsageError("--filter: " + Message(err));
    }
  }
  return f;
}

std::string CleanText(const corpus::CleanReport& r) {
  return fmt::format(
      "input                {:>10}\n"
      "removed empty        {:>10}\n"
      "removed untranslated {:>10}\n"
      "removed duplicates   {:>10}\n"
      "removed by filter    {:>10}\n"
      "output               {:>10}\n",
      r.input_count, r.removed_empty, r.removed_untranslated, r.removed_duplicates, r.removed_by_filter,
      r.output_count);
}

std::string StatsText(const corpus::CorpusStats& s) {
  return fmt::format("sentences  {:>12}\nsrc_tokens {:>12}\ntgt_tokens {:>12}\n", s.sentences, s.src_tokens,
                     s.tgt_tokens);
}

std::vector<std::string> DiagnosticStrings(const std::string& where, const std::vector<Diagnostic>& diags) {
  std::vector<std::string> out;
  for (const auto& d : diags) out.push_back(where + ": " + d.ToString());
  return out;
}

std::pair<std::string, std::string> SplitKeyValue(const std::string& s, const std::string& flag) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError(flag + ": expected key=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

std::vector<metrics::MetricSignature> Signatures(const std::vector<std::string>& overrides) {
  std::vector<metrics::MetricSignature> sigs = {metrics::MetricSignature::Bleu(), metrics::MetricSignature::ChrF2pp(),
                                                metrics::MetricSignature::Ter()};
  for (const auto& o : overrides) {
    const auto [lhs, value] = SplitKeyValue(o, "--sig");
    const auto dot = lhs.find('.');
    if (dot == std::string::npos) throw UsageError("--sig: expected metric.key=value, got '" + o + "'");
    try {
      const metrics::Metric m = metrics::ParseMetricName(lhs.substr(0, dot));
      for (auto& s : sigs) {
        if (s.metric == m) metrics::ApplySignatureOverride(s, lhs.substr(dot + 1), value);
      }
    } catch (const Error& e) {
      throw UsageError("--sig: " + Message(e));
    }
  }
  return sigs;
}

std::vector<std::string> ReadLines(const std::string& path) {
  return InFile(path, [&] { return locfile::SplitLines(corpus::ReadFile(path)); });
}

locfile::TranslationUnit ToUnit(const BiSegment& s) {
  locfile::TranslationUnit u;
  locfile::Meta meta = s.meta;
  const auto key = meta.find("key");
  u.source.key = key != meta.end() ? key->second : corpus::FormatId(s.id);
  if (key != meta.end()) meta.erase(key);
  const auto origin = meta.find("origin");
  if (origin != meta.end()) {
    u.origin = origin->second;
    meta.erase(origin);
  }
  u.source.text = s.source_text;
  u.source.lang = s.source_lang;
  u.source.meta = std::move(meta);
  u.target.key = u.source.key;
  u.target.text = s.target_text;
  u.target.lang = s.target_lang;
  return u;
}

}  // namespace

void RunBuild(const BuildArgs& args, Context& ctx) {
  if (args.manifest.empty()) throw UsageError("a manifest is required (--manifest or config 'manifest')");
  if (args.output_dir.empty()) throw UsageError("an output directory is required (--out or config 'output_dir')");
  const corpus::MetaFilter filter = MakeFilter(args.filters);
  const corpus::CorpusManifest manifest = InFile(args.manifest, [&] { return corpus::LoadManifest(args.manifest); });

  const std::size_t n = manifest.entries.size();
  std::vector<corpus::LoadResult> loaded(n);
  std::vector<std::optional<Error>> failures(n);
  ParallelFor(
      n, ctx.threads,
      [&](std::size_t i) {
        try {
          loaded[i] = corpus::LoadEntry(manifest, i);
        } catch (const Error& e) {
          failures[i].emplace(e.code(), "entry '" + manifest.entries[i].game_title + "': " + Message(e));
        }
      },
      1);
  std::vector<std::string> diagnostics;
  json entries = json::array();
  std::vector<std::vector<BiSegment>> parsed;
  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) throw Error(failures[i]->code(), args.manifest + ": " + Message(*failures[i]));
    const std::string where = args.manifest + ": " + manifest.entries[i].game_title;
    Warn(ctx, where, loaded[i].diagnostics);
    for (auto& d : DiagnosticStrings(manifest.entries[i].game_title, loaded[i].diagnostics)) {
      diagnostics.push_back(std::move(d));
    }
    entries.push_back({{"title", manifest.entries[i].game_title}, {"segments", loaded[i].segments.size()}});
    Progress(ctx, fmt::format("loaded {} ({} segments)", manifest.entries[i].game_title, loaded[i].segments.size()));
    parsed.push_back(std::move(loaded[i].segments));
  }

  corpus::MergeResult merged = InFile(args.manifest, [&] { return corpus::Merge(manifest, std::move(parsed)); });
  Warn(ctx, args.manifest, merged.diagnostics);
  for (auto& d : DiagnosticStrings("merge", merged.diagnostics)) diagnostics.push_back(std::move(d));

  corpus::CleanOptions opts;
  opts.filter = filter;
  opts.threads = ctx.threads;
  corpus::CleanResult cleaned = corpus::Clean(std::move(merged.segments), opts);
  Warn(ctx, "clean", cleaned.diagnostics);
  for (auto& d : DiagnosticStrings("clean", cleaned.diagnostics)) diagnostics.push_back(std::move(d));
  if (args.normalize) corpus::NormalizeSegments(cleaned.segments, args.typography, ctx.threads);

  const corpus::CorpusStats stats = corpus::ComputeStats(cleaned.segments, ctx.threads);
  const std::string corpus_path = (fs::path(args.output_dir) / "corpus.jsonl").string();
  WriteOut(corpus_path, corpus::WriteSegmentsJsonl(cleaned.segments));

  const json payload = {{"entries", entries},
                        {"clean", cleaned.report.ToJson()},
                        {"normalized", args.normalize},
                        {"stats", stats.ToJson()},
                        {"corpus", "corpus.jsonl"},
                        {"diagnostics", diagnostics}};
  std::string text = fmt::format("entries {}\n", n);
  text += CleanText(cleaned.report);
  text += StatsText(stats);
  const std::string base = (fs::path(args.output_dir) / "build_report").string();
  WriteOut(base + ".json", Envelope("build", payload).dump(2) + "\n");
  WriteOut(base + ".txt", text);
  Emit(ctx, args.report, "build", payload, text);
}

void RunClean(const CleanArgs& args, Context& ctx) {
  const corpus::MetaFilter filter = MakeFilter(args.filters);
  std::vector<BiSegment> segs = ReadCorpus(args.input, ctx);
  corpus::CleanOptions opts;
  opts.filter = filter;
  opts.threads = ctx.threads;
  corpus::CleanResult cleaned = corpus::Clean(std::move(segs), opts);
  Warn(ctx, args.input, cleaned.diagnostics);
  if (args.normalize) corpus::NormalizeSegments(cleaned.segments, args.typography, ctx.threads);
  if (!args.output.empty()) WriteOut(args.output, corpus::WriteSegmentsJsonl(cleaned.segments));
  json payload = cleaned.report.ToJson();
  payload["normalized"] = args.normalize;
  payload["diagnostics"] = DiagnosticStrings("clean", cleaned.diagnostics);
  Emit(ctx, args.report, "clean", payload, CleanText(cleaned.report));
}

void RunSplit(const SplitArgs& args, Context& ctx) {
  if (!args.seed) throw UsageError("--seed is required (or config 'seed')");
  if (!args.valid_size || !args.test_size) throw UsageError("--valid and --test are required");
  if (args.output_dir.empty()) throw UsageError("--out-dir is required");
  corpus::SplitSpec spec;
  spec.valid_size = *args.valid_size;
  spec.test_size = *args.test_size;
  spec.seed = *args.seed;
  if (!args.scope.empty()) spec.scope = SplitKeyValue(args.scope, "--scope");
  const std::vector<BiSegment> segs = ReadCorpus(args.input, ctx);
  const corpus::SplitResult r = InFile(args.input, [&] { return corpus::Split(segs, spec); });
  const fs::path dir(args.output_dir);
  WriteOut((dir / "train.jsonl").string(), corpus::WriteSegmentsJsonl(r.train));
  WriteOut((dir / "valid.jsonl").string(), corpus::WriteSegmentsJsonl(r.valid));
  WriteOut((dir / "test.jsonl").string(), corpus::WriteSegmentsJsonl(r.test));
  json payload = {{"seed", spec.seed},
                  {"shuffle", corpus::kShuffleName},
                  {"train", r.train.size()},
                  {"valid", r.valid.size()},
                  {"test", r.test.size()}};
  payload["scope"] = spec.scope ? json(spec.scope->first + "=" + spec.scope->second) : json(nullptr);
  const std::string text = fmt::format("seed  {} ({})\ntrain {:>10}\nvalid {:>10}\ntest  {:>10}\n", spec.seed,
                                       corpus::kShuffleName, r.train.size(), r.valid.size(), r.test.size());
  Emit(ctx, args.report, "split", payload, text);
}

void RunStats(const StatsArgs& args, Context& ctx) {
  const bool bitext = !args.source.empty() || !args.target.empty();
  if (bitext == !args.input.empty()) throw UsageError("give either --in or both --source and --target");
  if (bitext && (args.source.empty() || args.target.empty())) {
    throw UsageError("--source and --target must be given together");
  }
  std::vector<BiSegment> segs;
  if (bitext) {
    const std::string src = InFile(args.source, [&] { return corpus::ReadFile(args.source); });
    const std::string tgt = InFile(args.target, [&] { return corpus::ReadFile(args.target); });
    const auto pairs = InFile(args.source + ", " + args.target, [&] { return locfile::ReadBitext(src, tgt); });
    segs.reserve(pairs.size());
    for (const auto& [s, t] : pairs) segs.push_back(corpus::MakeSegment(s, t, args.source_lang, args.target_lang));
  } else {
    segs = ReadCorpus(args.input, ctx);
  }
  const corpus::CorpusStats stats = corpus::ComputeStats(segs, ctx.threads);
  Emit(ctx, args.report, "stats", stats.ToJson(), StatsText(stats));
}

void RunExport(const ExportArgs& args, Context& ctx) {
  if (args.format == "bitext" && args.output_target.empty()) throw UsageError("bitext export needs --out-target");
  const std::vector<BiSegment> segs = ReadCorpus(args.input, ctx);
  if (args.format == "jsonl") {
    WriteOut(args.output, corpus::WriteSegmentsJsonl(segs));
  } else {
    std::vector<locfile::TranslationUnit> units;
    units.reserve(segs.size());
    for (const auto& s : segs) units.push_back(ToUnit(s));
    if (args.format == "tmx") {
      WriteOut(args.output, InFile(args.input, [&] { return locfile::WriteTmx(units); }));
    } else {
      const locfile::Bitext b = InFile(args.input, [&] { return locfile::WriteBitext(units); });
      WriteOut(args.output, b.source);
      WriteOut(args.output_target, b.target);
    }
  }
  Progress(ctx, fmt::format("exported {} segments as {}", segs.size(), args.format));
}

void RunScore(const ScoreArgs& args, Context& ctx) {
  const std::vector<metrics::MetricSignature> sigs = Signatures(args.signature_overrides);
  std::vector<metrics::Metric> wanted;
  for (const auto& m : args.metrics) {
    try {
      wanted.push_back(metrics::ParseMetricName(m));
    } catch (const Error& e) {
      throw UsageError("--metric: " + Message(e));
    }
  }
  if (wanted.empty()) wanted = {metrics::Metric::kBleu, metrics::Metric::kChrF2pp, metrics::Metric::kTer};
  const std::vector<std::string> hyps = ReadLines(args.hyp);
  const std::vector<std::string> refs = ReadLines(args.ref);
  metrics::ScoreReport report;
  report.system_name = args.name.empty() ? fs::path(args.hyp).stem().string() : args.name;
  report.segment_count = hyps.size();
  InFile(args.hyp + " vs " + args.ref, [&] {
    for (const auto& sig : sigs) {
      if (std::find(wanted.begin(), wanted.end(), sig.metric) == wanted.end()) continue;
      switch (sig.metric) {
        case metrics::Metric::kBleu: report.scores.push_back(metrics::Bleu(hyps, refs, sig, ctx.threads)); break;
        case metrics::Metric::kChrF2pp: report.scores.push_back(metrics::ChrF(hyps, refs, sig, ctx.threads)); break;
        case metrics::Metric::kTer: report.scores.push_back(metrics::Ter(hyps, refs, sig, ctx.threads).score); break;
      }
    }
    return 0;
  });
  Emit(ctx, args.report, "score", report.ToJson(), report.ToText());
}

void RunCompare(const CompareArgs& args, Context& ctx) {
  metrics::ComparisonReport report;
  if (!args.from_json.empty()) {
    if (!args.systems.empty() || !args.ref.empty()) throw UsageError("--from-json excludes --ref and --system");
    report = InFile(args.from_json, [&] {
      return metrics::ComparisonReport::FromJson(json::parse(corpus::ReadFile(args.from_json)));
    });
  } else {
    if (args.ref.empty() || args.systems.empty()) throw UsageError("compare needs --ref and at least one --system");
    const std::vector<metrics::MetricSignature> sigs = Signatures(args.signature_overrides);
    const std::vector<std::string> refs = ReadLines(args.ref);
    std::vector<metrics::SystemOutput> systems;
    for (const auto& s : args.systems) {
      metrics::SystemOutput out;
      std::string path = s;
      const auto eq = s.find('=');
      if (eq != std::string::npos) {
        out.name = s.substr(0, eq);
        path = s.substr(eq + 1);
      } else {
        out.name = fs::path(s).stem().string();
      }
      if (!fs::exists(path)) throw UsageError("--system: file not found: " + path);
      out.hyps = ReadLines(path);
      systems.push_back(std::move(out));
    }
    report = InFile(args.ref, [&] { return metrics::Compare(systems, refs, sigs, ctx.threads); });
  }
  Emit(ctx, args.report, "compare", report.ToJson(), report.ToText());
}

void RunQa(const QaArgs& args, Context& ctx) {
  qa::QaConfig config =
      args.config.empty() ? qa::QaConfig::Default() : InFile(args.config, [&] { return qa::LoadQaConfig(args.config); });
  if (!args.profile.empty()) {
    try {
      config.register_profile = qa::ParseRegisterProfile(args.profile);
    } catch (const Error& e) {
      throw UsageError("--profile: " + Message(e));
    }
  }
  const std::vector<BiSegment> segs = ReadCorpus(args.input, ctx);
  qa::QaReport report = InFile(args.input, [&] { return qa::RunSuite(segs, config, ctx.threads); });
  if (!args.annotations.empty()) {
    InFile(args.annotations, [&] {
      qa::AddAnnotations(report, segs, qa::ReadAnnotationsJsonl(corpus::ReadFile(args.annotations)));
      return 0;
    });
  }
  if (!args.findings.empty()) WriteOut(args.findings, qa::FindingsToJsonl(report.findings));
  Emit(ctx, args.report, "qa", report.SummaryJson(), report.SummaryText());
}

void RunRecipe(const RecipeArgs& args, Context& ctx) {
  corpus::NmtRecipe recipe;
  if (!args.overrides.empty()) {
    recipe = InFile(args.overrides, [&] { return corpus::EmitRecipe(json::parse(corpus::ReadFile(args.overrides))); });
  }
  for (const auto& s : args.sets) {
    const auto [k, v] = SplitKeyValue(s, "--set");
    json value;
    try {
      value = json::parse(v);
    } catch (const json::exception&) {
      value = v;
    }
    try {
      corpus::ApplyRecipeOverride(recipe, k, value);
    } catch (const Error& e) {
      throw UsageError("--set: " + Message(e));
    }
  }
  const std::string dumped = recipe.ToJson().dump(2) + "\n";
  if (!args.output.empty()) WriteOut(args.output, dumped);
  ctx.out << dumped;
}

}  // namespace locmt::cli::internal
