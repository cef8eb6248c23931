// Copyright 2026 The emocov Authors.
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

#include "emocov/cli.h"

#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "emocov/arbiter.h"
#include "emocov/augmentor.h"
#include "emocov/config.h"
#include "emocov/corpus_io.h"
#include "emocov/coverage.h"
#include "emocov/error.h"
#include "emocov/extractor.h"
#include "emocov/harness.h"
#include "json.hpp"

namespace emocov {
namespace {

using nlohmann::json;

struct Flags {
  std::string suite_path;
  std::optional<std::string> config_path;
  std::optional<int> k;
  std::optional<long long> budget;
  std::optional<long long> chunk_size;
  std::optional<std::string> out;
  std::optional<int> max_inflight;
  std::optional<std::string> format;
  bool mock = false;
  bool label_all = false;
};

std::string Dump(const json& j, int indent = -1) {
  return j.dump(indent, ' ', false, json::error_handler_t::replace);
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  f << text;
  if (!f.flush()) throw Error(ErrorCode::kIo, "error writing " + path.string());
}

// flag > config file > default.
RunConfig ResolveConfig(const Flags& flags) {
  RunConfig config = flags.config_path ? LoadRunConfig(*flags.config_path)
                                       : DefaultRunConfig();
  if (flags.k) config.coverage.k = *flags.k;
  if (flags.chunk_size) {
    if (*flags.chunk_size < 1) {
      throw Error(ErrorCode::kUsage, "--chunk-size must be at least 1");
    }
    config.chunk_size = static_cast<std::size_t>(*flags.chunk_size);
  }
  if (flags.max_inflight) config.max_inflight = *flags.max_inflight;
  if (flags.mock) config.mock_mode = true;
  if (flags.format) {
    config.corpus_format = ParseCorpusFormat(*flags.format);
    if (!config.corpus_format) {
      throw Error(ErrorCode::kUsage, "unknown --format '" + *flags.format + "'");
    }
  }
  config.extractor.max_inflight = config.max_inflight;
  config.augmentor.max_inflight = config.max_inflight;
  try {
    config.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kUsage, e.what());
  }
  return config;
}

TestSuite LoadSuiteArg(const std::string& path, const RunConfig& config) {
  CorpusFormat format = config.corpus_format.value_or(FormatForPath(path));
  return LoadCorpus(path, format);
}

void Emit(const json& document, const Flags& flags, std::ostream& out) {
  std::string text = Dump(document, 2) + "\n";
  if (flags.out) {
    WriteText(*flags.out, text);
  } else {
    out << text;
  }
}

int CmdCoverage(const Flags& flags, std::ostream& out, std::ostream& err) {
  RunConfig config = ResolveConfig(flags);
  TestSuite suite = LoadSuiteArg(flags.suite_path, config);
  auto resolver = MakeResolver(config);
  auto extractor = MakeExtractor(config.extractor, *resolver);
  CoverageState state(config.coverage);
  state.AddSuite(extractor->ExtractSuite(suite));
  CoverageReport report = state.Report();
  err << "coverage k=" << report.k << ": " << report.covered << "/"
      << report.total << " cells (" << ToDecimalString(report.cov * 100, 2)
      << "%) over " << suite.size() << " sentence(s)\n";
  Emit(ToJson(report, config.coverage), flags, out);
  return 0;
}

int CmdGaps(const Flags& flags, std::ostream& out, std::ostream& err) {
  RunConfig config = ResolveConfig(flags);
  if (flags.budget && *flags.budget < 0) {
    throw Error(ErrorCode::kUsage, "--budget must be non-negative");
  }
  TestSuite suite = LoadSuiteArg(flags.suite_path, config);
  auto resolver = MakeResolver(config);
  auto extractor = MakeExtractor(config.extractor, *resolver);
  CoverageState state(config.coverage);
  state.AddSuite(extractor->ExtractSuite(suite));
  std::size_t budget = flags.budget ? static_cast<std::size_t>(*flags.budget)
                                    : state.total_cells();
  std::vector<GapSpec> plan = PlanGaps(state, budget);
  json gaps = json::array();
  for (const GapSpec& g : plan) {
    gaps.push_back({{"priority", g.priority},
                    {"cell", CellToString(g.cell, config.coverage)},
                    {"prompt", BuildPrompt(g, config.augmentor)}});
  }
  err << "gaps k=" << config.coverage.k << ": listing " << plan.size()
      << " of " << (state.total_cells() - state.covered_count())
      << " uncovered cell(s)\n";
  Emit({{"k", config.coverage.k},
        {"uncovered", state.total_cells() - state.covered_count()},
        {"gaps", std::move(gaps)}},
       flags, out);
  return 0;
}

int CmdRun(const Flags& flags, std::ostream& err) {
  if (!flags.config_path) {
    throw Error(ErrorCode::kUsage, "run requires --config");
  }
  RunConfig config = ResolveConfig(flags);
  if (flags.budget) {
    if (*flags.budget < 0) {
      throw Error(ErrorCode::kUsage, "--budget must be non-negative");
    }
    config.augmentor.max_new_sentences = static_cast<int>(*flags.budget);
  }
  if (flags.out) config.output_dir = *flags.out;
  if (config.corpus_path.empty()) {
    throw Error(ErrorCode::kUsage, "config names no corpus");
  }
  TestSuite corpus = LoadSuiteArg(config.corpus_path, config);
  auto resolver = MakeResolver(config);
  auto extractor = MakeExtractor(config.extractor, *resolver);

  err << "run: " << corpus.size() << " sentence(s), k=" << config.coverage.k
      << ", chunk size " << config.chunk_size
      << (config.mock_mode ? ", mock mode" : "") << "\n";
  ExperimentOutput output = RunExperiment(
      corpus, config.ToExperimentConfig(), *extractor, *resolver);
  WriteArtifacts(output, config.output_dir);

  const ExperimentReport& r = output.report;
  err << "run: " << r.completed_count << " subset(s) completed, "
      << r.skipped_count << " skipped; mean coverage delta "
      << ToDecimalString(r.mean_cov_delta * 100, 2)
      << " pts, mean accuracy delta "
      << ToDecimalString(r.mean_acc_delta * 100, 2) << " pts\n";
  err << "run: artifacts in " << config.output_dir << "\n";
  for (const SubsetResult& s : r.subsets) {
    if (!s.completed) {
      err << "run: subset " << s.subset_index << " skipped: " << s.skip_reason
          << "\n";
    }
  }
  return r.skipped_count > 0 ? ExitCodeFor(ErrorCode::kSutUnavailable) : 0;
}

int CmdLabel(const Flags& flags, std::ostream& err) {
  RunConfig config = ResolveConfig(flags);
  TestSuite suite = LoadSuiteArg(flags.suite_path, config);
  auto resolver = MakeResolver(config);

  std::vector<std::size_t> targets;
  std::vector<Sentence> batch;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (flags.label_all || !suite.sentences[i].gold_label) {
      targets.push_back(i);
      batch.push_back(suite.sentences[i]);
    }
  }
  std::vector<ArbiterVerdict> verdicts =
      ArbitrateBatch(batch, config.ensemble, *resolver, config.max_inflight);
  std::string lines;
  for (std::size_t j = 0; j < verdicts.size(); ++j) {
    suite.sentences[targets[j]].gold_label = verdicts[j].label;
    lines += Dump(ToJson(verdicts[j])) + "\n";
  }
  std::filesystem::path dir = flags.out.value_or(config.output_dir);
  WriteText(dir / "verdicts.jsonl", lines);
  SaveSuite(suite, dir / "labeled.jsonl");
  err << "label: " << verdicts.size() << " sentence(s) labeled; wrote "
      << (dir / "verdicts.jsonl").string() << " and "
      << (dir / "labeled.jsonl").string() << "\n";
  return 0;
}

int CmdEval(const Flags& flags, std::ostream& out, std::ostream& err) {
  RunConfig config = ResolveConfig(flags);
  TestSuite suite = LoadSuiteArg(flags.suite_path, config);
  auto resolver = MakeResolver(config);
  auto sut = resolver->Classifier(config.sut.endpoint);
  AccuracyResult result = EvaluateAccuracy(suite, config.sut, *sut);
  std::size_t correct = 0;
  std::string lines;
  for (const Prediction& p : result.predictions) {
    correct += p.correct ? 1 : 0;
    lines += Dump({{"id", p.sentence_id},
                   {"predicted", ToString(p.predicted)},
                   {"gold", ToString(p.gold)},
                   {"correct", p.correct}}) +
             "\n";
  }
  if (flags.out) {
    WriteText(std::filesystem::path(*flags.out) / "predictions.jsonl", lines);
  }
  err << "eval: " << config.sut.name << " " << correct << "/" << suite.size()
      << " correct\n";
  out << Dump({{"sut", config.sut.name},
               {"correct", correct},
               {"total", suite.size()},
               {"accuracy", RationalToJson(result.accuracy)}},
              2)
      << "\n";
  return 0;
}

void ErrorRecord(std::ostream& err, std::string_view code,
                 const std::string& message, int exit_code,
                 std::optional<std::size_t> line = std::nullopt) {
  json record = {{"code", code}, {"message", message},
                 {"exit_code", exit_code}};
  if (line) record["line"] = *line;
  err << Dump({{"error", record}}) << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"emocov: k-projection coverage and test generation for "
               "emotion classifiers"};
  app.name("emocov");
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path, "Run configuration (JSON)");
    cmd->add_flag("--mock", flags.mock,
                  "Resolve every endpoint to the built-in deterministic mock");
    cmd->add_option("--max-inflight", flags.max_inflight,
                    "Bound on concurrent endpoint requests");
    cmd->add_option("--format", flags.format,
                    "semicolon_text_label or jsonl_native");
  };

  CLI::App* coverage = app.add_subcommand("coverage", "Measure k-projection coverage");
  coverage->add_option("suite", flags.suite_path, "Corpus file")->required();
  coverage->add_option("--k", flags.k, "Projection size (1-4)");
  coverage->add_option("--out", flags.out, "Write the report to this file");
  add_common(coverage);

  CLI::App* gaps = app.add_subcommand("gaps", "List uncovered cells with prompts");
  gaps->add_option("suite", flags.suite_path, "Corpus file")->required();
  gaps->add_option("--k", flags.k, "Projection size (1-4)");
  gaps->add_option("--budget", flags.budget, "Maximum number of gaps");
  gaps->add_option("--out", flags.out, "Write the listing to this file");
  add_common(gaps);

  CLI::App* run = app.add_subcommand("run", "Run the full augmentation experiment");
  run->add_option("--k", flags.k, "Projection size (1-4)");
  run->add_option("--budget", flags.budget,
                  "Generated sentences per subset (max_new_sentences)");
  run->add_option("--chunk-size", flags.chunk_size, "Sentences per subset");
  run->add_option("--out", flags.out, "Output directory");
  add_common(run);

  CLI::App* label = app.add_subcommand("label", "Label sentences by ensemble vote");
  label->add_option("suite", flags.suite_path, "Corpus file")->required();
  label->add_option("--out", flags.out, "Output directory");
  label->add_flag("--all", flags.label_all,
                  "Relabel every sentence, not only unlabeled ones");
  add_common(label);

  CLI::App* eval = app.add_subcommand("eval", "Measure SUT accuracy on a suite");
  eval->add_option("suite", flags.suite_path, "Corpus file")->required();
  eval->add_option("--out", flags.out, "Directory for predictions.jsonl");
  add_common(eval);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    ErrorRecord(err, "usage", e.what(), 2);
    return 2;
  }

  try {
    if (coverage->parsed()) return CmdCoverage(flags, out, err);
    if (gaps->parsed()) return CmdGaps(flags, out, err);
    if (run->parsed()) return CmdRun(flags, err);
    if (label->parsed()) return CmdLabel(flags, err);
    if (eval->parsed()) return CmdEval(flags, out, err);
  } catch (const Error& e) {
    int code = ExitCodeFor(e.code());
    ErrorRecord(err, ErrorCodeName(e.code()), e.what(), code, e.line());
    return code;
  } catch (const std::exception& e) {
    ErrorRecord(err, "internal", e.what(), 4);
    return 4;
  }
  return 2;
}

}  // namespace emocov
