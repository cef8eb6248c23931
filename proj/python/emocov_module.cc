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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the package wrapper; exact ratios stay "num/den" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "emocov/arbiter.h"
#include "emocov/augmentor.h"
#include "emocov/cli.h"
#include "emocov/corpus_io.h"
#include "emocov/coverage.h"
#include "emocov/error.h"
#include "emocov/extractor.h"
#include "emocov/feature_model.h"
#include "emocov/rational.h"
#include "json.hpp"

namespace py = pybind11;

namespace emocov {
namespace {

using nlohmann::json;

ExtractorConfig LexiconConfig(const std::string& lexicon_path) {
  ExtractorConfig config;
  config.lexicon_path = lexicon_path;
  return config;
}

json VectorJson(const FeatureVector& fv) {
  json out = json::object();
  for (FeatureKind k : kAllFeatureKinds) {
    out[std::string(ShortName(k))] = std::string(ToString(fv[k]));
  }
  return out;
}

TestSuite SuiteOf(const std::vector<std::string>& texts) {
  TestSuite suite;
  suite.name = "python";
  for (std::size_t i = 0; i < texts.size(); ++i) {
    suite.sentences.push_back(
        {"s" + std::to_string(i), texts[i], std::nullopt, Origin::kCorpus});
  }
  return suite;
}

CoverageState StateOf(const std::vector<std::string>& texts, int k,
                      const std::string& lexicon_path) {
  CoverageConfig config;
  config.k = k;
  config.Validate();
  Extractor extractor(LexiconConfig(lexicon_path));
  CoverageState state(config);
  state.AddSuite(extractor.ExtractSuite(SuiteOf(texts)));
  return state;
}

std::string Extract(const std::string& text, const std::string& lexicon_path) {
  Extractor extractor(LexiconConfig(lexicon_path));
  return VectorJson(extractor.Extract(text)).dump();
}

std::string Coverage(const std::vector<std::string>& texts, int k,
                     const std::string& lexicon_path) {
  CoverageState state = StateOf(texts, k, lexicon_path);
  return ToJson(state.Report(), state.config()).dump();
}

std::string Gaps(const std::vector<std::string>& texts, int k,
                 std::size_t budget, const std::string& lexicon_path) {
  CoverageState state = StateOf(texts, k, lexicon_path);
  AugmentorConfig augmentor;
  json out = json::array();
  for (const GapSpec& gap : PlanGaps(state, budget)) {
    out.push_back({{"priority", gap.priority},
                   {"cell", CellToString(gap.cell, state.config())},
                   {"prompt", BuildPrompt(gap, augmentor)}});
  }
  return out.dump();
}

std::string Tally(const std::vector<std::pair<std::string, std::string>>& votes) {
  std::vector<ModelProfile> ensemble;
  std::vector<CorpusLabel> labels;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    auto label = ParseCorpusLabel(votes[i].second);
    if (!label) {
      throw Error(ErrorCode::kUnknownLabel, "unknown label: " + votes[i].second);
    }
    ensemble.push_back(
        {"m" + std::to_string(i), "", ParseRational(votes[i].first)});
    labels.push_back(*label);
  }
  ValidateEnsemble(ensemble);
  return ToJson(TallyVotes("python", ensemble, labels)).dump();
}

std::string LoadCorpusJson(const std::string& path) {
  LoadResult result = LoadCorpusLenient(path, FormatForPath(path));
  json sentences = json::array();
  for (const Sentence& s : result.suite.sentences) {
    json row = {{"id", s.id},
                {"text", s.text},
                {"origin", std::string(ToString(s.origin))}};
    row["gold_label"] = s.gold_label
                            ? json(std::string(ToString(*s.gold_label)))
                            : json(nullptr);
    sentences.push_back(std::move(row));
  }
  json issues = json::array();
  for (const LoadIssue& issue : result.issues) {
    issues.push_back({{"line", issue.line},
                      {"code", std::string(ErrorCodeName(issue.code))},
                      {"reason", issue.reason}});
  }
  return json{{"sentences", sentences}, {"issues", issues}}.dump();
}

py::tuple RunCliCaptured(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code;
  {
    py::gil_scoped_release release;
    code = RunCli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace emocov

PYBIND11_MODULE(_emocov, m) {
  using namespace emocov;
  m.doc() = "Emotional feature coverage core";

  static py::exception<Error> error_type(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      exc.attr("exit_code") = ExitCodeFor(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "total_cells",
      [](int k, int n, int alpha) {
        CoverageConfig config{k, n, alpha};
        config.Validate();
        return TotalCells(config);
      },
      py::arg("k"), py::arg("n") = kNumFeatureKinds,
      py::arg("alpha") = kNumEmotions);
  m.def("extract_json", &Extract, py::arg("text"),
        py::arg("lexicon_path") = "");
  m.def("coverage_json", &Coverage, py::arg("texts"), py::arg("k") = 2,
        py::arg("lexicon_path") = "");
  m.def("gaps_json", &Gaps, py::arg("texts"), py::arg("k") = 2,
        py::arg("budget") = 10, py::arg("lexicon_path") = "");
  m.def("tally_json", &Tally, py::arg("votes"));
  m.def("load_corpus_json", &LoadCorpusJson, py::arg("path"));
  m.def("run_cli", &RunCliCaptured, py::arg("args"));
}
