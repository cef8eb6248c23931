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

#include "emocov/coverage.h"

#include <algorithm>
#include <cmath>

#include "emocov/error.h"

namespace emocov {
namespace {

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

std::uint64_t Power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void EnumerateFrom(int start, int n, int k, std::vector<int>& current,
                   std::vector<Projection>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back({current});
    return;
  }
  for (int f = start; f < n; ++f) {
    current.push_back(f);
    EnumerateFrom(f + 1, n, k, current, out);
    current.pop_back();
  }
}

}  // namespace

void CoverageConfig::Validate() const {
  if (n < 1 || alpha < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "coverage space needs n >= 1 and alpha >= 1");
  }
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be in [1, " + std::to_string(n) + "], got " +
                    std::to_string(k));
  }
  if (n > 40 ||
      static_cast<double>(Binomial(n, k)) *
              std::pow(static_cast<double>(alpha), k) >
          static_cast<double>(kMaxCells)) {
    throw Error(ErrorCode::kInvalidArgument, "coverage space too large");
  }
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t CellsPerProjection(const CoverageConfig& config) {
  return Power(static_cast<std::uint64_t>(config.alpha), config.k);
}

std::uint64_t TotalCells(const CoverageConfig& config) {
  return Binomial(config.n, config.k) * CellsPerProjection(config);
}

std::vector<Projection> EnumerateProjections(const CoverageConfig& config) {
  config.Validate();
  std::vector<Projection> out;
  std::vector<int> current;
  EnumerateFrom(0, config.n, config.k, current, out);
  return out;
}

std::vector<int> ToPoint(const FeatureVector& fv) {
  std::vector<int> point;
  point.reserve(kNumFeatureKinds);
  for (FeatureKind k : kAllFeatureKinds) {
    point.push_back(static_cast<int>(Index(fv[k])));
  }
  return point;
}

std::vector<ProjectionCell> CellsOf(std::span<const int> point,
                                    const CoverageConfig& config) {
  std::vector<ProjectionCell> cells;
  for (Projection& p : EnumerateProjections(config)) {
    ProjectionCell cell;
    for (int f : p.features) {
      cell.values.push_back(point[static_cast<std::size_t>(f)]);
    }
    cell.projection = std::move(p);
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<ProjectionCell> CellsOf(const FeatureVector& fv,
                                    const CoverageConfig& config) {
  return CellsOf(ToPoint(fv), config);
}

bool CellMatches(const ProjectionCell& cell, std::span<const int> point) {
  for (std::size_t i = 0; i < cell.projection.features.size(); ++i) {
    auto f = static_cast<std::size_t>(cell.projection.features[i]);
    if (f >= point.size() || point[f] != cell.values[i]) return false;
  }
  return true;
}

bool CellMatches(const ProjectionCell& cell, const FeatureVector& fv) {
  return CellMatches(cell, ToPoint(fv));
}

std::string CellToString(const ProjectionCell& cell,
                         const CoverageConfig& config) {
  std::string out;
  for (std::size_t i = 0; i < cell.values.size(); ++i) {
    if (i > 0) out += ',';
    int f = cell.projection.features[i];
    if (config.IsEmotionalSpace()) {
      out += ShortName(static_cast<FeatureKind>(f));
      out += '=';
      out += ToString(static_cast<Emotion>(cell.values[i]));
    } else {
      out += 'f' + std::to_string(f) + '=' + std::to_string(cell.values[i]);
    }
  }
  return out;
}

std::string ProjectionToString(const Projection& projection,
                               const CoverageConfig& config) {
  std::string out;
  for (int f : projection.features) {
    if (!out.empty()) out += ',';
    if (config.IsEmotionalSpace()) {
      out += ShortName(static_cast<FeatureKind>(f));
    } else {
      out += 'f' + std::to_string(f);
    }
  }
  return out;
}

nlohmann::json ToJson(const CoverageReport& report,
                      const CoverageConfig& config) {
  nlohmann::json per = nlohmann::json::array();
  for (const ProjectionCoverage& p : report.per_projection) {
    per.push_back({{"projection", ProjectionToString(p.projection, config)},
                   {"covered", p.covered},
                   {"total", p.total}});
  }
  return {{"k", report.k},
          {"covered", report.covered},
          {"total", report.total},
          {"cov_numerator", NumeratorString(report.cov)},
          {"cov_denominator", DenominatorString(report.cov)},
          {"cov_percent", ToRoundedDouble(report.cov * 100, 4)},
          {"per_projection", std::move(per)}};
}

CoverageState::CoverageState(CoverageConfig config)
    : config_(config),
      projections_(EnumerateProjections(config_)),
      cells_per_projection_(CellsPerProjection(config_)),
      bits_(TotalCells(config_), false) {}

std::size_t CoverageState::CellIndex(const ProjectionCell& cell) const {
  auto it = std::lower_bound(projections_.begin(), projections_.end(),
                             cell.projection);
  if (it == projections_.end() || *it != cell.projection ||
      cell.values.size() != cell.projection.features.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cell outside coverage space");
  }
  std::size_t value_index = 0;
  for (int v : cell.values) {
    if (v < 0 || v >= config_.alpha) {
      throw Error(ErrorCode::kInvalidArgument, "cell value out of range");
    }
    value_index = value_index * static_cast<std::size_t>(config_.alpha) +
                  static_cast<std::size_t>(v);
  }
  return static_cast<std::size_t>(it - projections_.begin()) *
             cells_per_projection_ +
         value_index;
}

ProjectionCell CoverageState::CellAt(std::size_t index) const {
  ProjectionCell cell;
  cell.projection = projections_.at(index / cells_per_projection_);
  std::size_t value_index = index % cells_per_projection_;
  cell.values.assign(static_cast<std::size_t>(config_.k), 0);
  for (int i = config_.k - 1; i >= 0; --i) {
    cell.values[static_cast<std::size_t>(i)] =
        static_cast<int>(value_index % static_cast<std::size_t>(config_.alpha));
    value_index /= static_cast<std::size_t>(config_.alpha);
  }
  return cell;
}

bool CoverageState::IsCovered(const ProjectionCell& cell) const {
  return bits_[CellIndex(cell)];
}

void CoverageState::CheckPoint(std::span<const int> point) const {
  if (static_cast<int>(point.size()) != config_.n) {
    throw Error(ErrorCode::kInvalidArgument,
                "point has " + std::to_string(point.size()) +
                    " features, expected " + std::to_string(config_.n));
  }
  for (int v : point) {
    if (v < 0 || v >= config_.alpha) {
      throw Error(ErrorCode::kInvalidArgument, "feature value out of range");
    }
  }
}

std::vector<std::size_t> CoverageState::CellIndicesOf(
    std::span<const int> point) const {
  CheckPoint(point);
  std::vector<std::size_t> indices;
  indices.reserve(projections_.size());
  for (std::size_t p = 0; p < projections_.size(); ++p) {
    std::size_t value_index = 0;
    for (int f : projections_[p].features) {
      value_index = value_index * static_cast<std::size_t>(config_.alpha) +
                    static_cast<std::size_t>(point[static_cast<std::size_t>(f)]);
    }
    indices.push_back(p * cells_per_projection_ + value_index);
  }
  return indices;
}

std::size_t CoverageState::Add(std::span<const int> point) {
  std::size_t added = 0;
  for (std::size_t index : CellIndicesOf(point)) {
    if (!bits_[index]) {
      bits_[index] = true;
      ++added;
    }
  }
  covered_ += added;
  return added;
}

std::size_t CoverageState::Add(const FeatureVector& fv) {
  if (!config_.IsEmotionalSpace()) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature vectors need the 4x6 emotional space");
  }
  return Add(ToPoint(fv));
}

void CoverageState::AddSuite(std::span<const FeatureVector> fvs) {
  for (const FeatureVector& fv : fvs) Add(fv);
}

CoverageReport CoverageState::Report() const {
  CoverageReport report;
  report.k = config_.k;
  report.covered = covered_;
  report.total = total_cells();
  report.cov = Rational(covered_, total_cells());
  for (std::size_t p = 0; p < projections_.size(); ++p) {
    ProjectionCoverage pc{projections_[p], 0, cells_per_projection_};
    for (std::size_t i = 0; i < cells_per_projection_; ++i) {
      if (bits_[p * cells_per_projection_ + i]) ++pc.covered;
    }
    report.per_projection.push_back(std::move(pc));
  }
  return report;
}

std::vector<ProjectionCell> CoverageState::Uncovered() const {
  std::vector<ProjectionCell> out;
  out.reserve(total_cells() - covered_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) out.push_back(CellAt(i));
  }
  return out;
}

std::vector<ProjectionCell> CoverageState::Covered() const {
  std::vector<ProjectionCell> out;
  out.reserve(covered_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(CellAt(i));
  }
  return out;
}

CoverageState AddSuite(CoverageState state,
                       std::span<const FeatureVector> fvs) {
  state.AddSuite(fvs);
  return state;
}

}  // namespace emocov
