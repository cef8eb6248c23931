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

#ifndef EMOCOV_COVERAGE_H_
#define EMOCOV_COVERAGE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emocov/feature_model.h"
#include "emocov/rational.h"
#include "json.hpp"

namespace emocov {

// k-projection parameters. n and alpha default to the emotional feature
// space (4 kinds, 6 emotions) and are only varied by tests of the engine
// itself.
struct CoverageConfig {
  int k = 2;
  int n = kNumFeatureKinds;
  int alpha = kNumEmotions;

  // Throws Error(kInvalidArgument) unless 1 <= k <= n and the cell space is
  // small enough to hold as a bitmap.
  void Validate() const;
  bool IsEmotionalSpace() const {
    return n == kNumFeatureKinds && alpha == kNumEmotions;
  }

  friend bool operator==(const CoverageConfig&, const CoverageConfig&) =
      default;
};

// A k-subset of features, as strictly ascending feature indices.
struct Projection {
  std::vector<int> features;

  friend auto operator<=>(const Projection&, const Projection&) = default;
};

// One value assignment to one projection, values aligned with
// projection.features.
struct ProjectionCell {
  Projection projection;
  std::vector<int> values;

  friend auto operator<=>(const ProjectionCell&, const ProjectionCell&) =
      default;
};

std::uint64_t Binomial(int n, int k);
// C(n, k) * alpha^k.
std::uint64_t TotalCells(const CoverageConfig& config);
std::uint64_t CellsPerProjection(const CoverageConfig& config);

// All C(n, k) projections in lexicographic order.
std::vector<Projection> EnumerateProjections(const CoverageConfig& config);

// Feature values of `fv` in canonical kind order.
std::vector<int> ToPoint(const FeatureVector& fv);

// The restriction of `point` to each projection, in projection order.
std::vector<ProjectionCell> CellsOf(std::span<const int> point,
                                    const CoverageConfig& config);
std::vector<ProjectionCell> CellsOf(const FeatureVector& fv,
                                    const CoverageConfig& config);

bool CellMatches(const ProjectionCell& cell, std::span<const int> point);
bool CellMatches(const ProjectionCell& cell, const FeatureVector& fv);

// "verb=sadness,adv=joy" in the emotional space; "f0=1,f2=0" otherwise.
std::string CellToString(const ProjectionCell& cell,
                         const CoverageConfig& config);
std::string ProjectionToString(const Projection& projection,
                               const CoverageConfig& config);

struct ProjectionCoverage {
  Projection projection;
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
};

struct CoverageReport {
  int k = 0;
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
  Rational cov;
  std::vector<ProjectionCoverage> per_projection;
};

// {k, covered, total, cov_numerator, cov_denominator, cov_percent,
//  per_projection: [{projection, covered, total}]}
nlohmann::json ToJson(const CoverageReport& report,
                      const CoverageConfig& config);

// Set of covered projection cells, stored as a bitmap over the canonical
// cell index (projection index * alpha^k + mixed-radix value index).
//
// Single writer. Const members may run concurrently when no writer is
// active.
class CoverageState {
 public:
  explicit CoverageState(CoverageConfig config);

  const CoverageConfig& config() const { return config_; }
  const std::vector<Projection>& projections() const { return projections_; }
  std::uint64_t total_cells() const { return bits_.size(); }
  std::uint64_t covered_count() const { return covered_; }

  std::size_t CellIndex(const ProjectionCell& cell) const;
  ProjectionCell CellAt(std::size_t index) const;

  bool IsCovered(std::size_t index) const { return bits_[index]; }
  bool IsCovered(const ProjectionCell& cell) const;

  // Marks every cell of `point`; returns how many were newly covered.
  std::size_t Add(std::span<const int> point);
  std::size_t Add(const FeatureVector& fv);
  void AddSuite(std::span<const FeatureVector> fvs);

  // Indices of the cells of `point`, in projection order.
  std::vector<std::size_t> CellIndicesOf(std::span<const int> point) const;

  CoverageReport Report() const;
  // Uncovered cells in canonical index order.
  std::vector<ProjectionCell> Uncovered() const;
  std::vector<ProjectionCell> Covered() const;

 private:
  void CheckPoint(std::span<const int> point) const;

  CoverageConfig config_;
  std::vector<Projection> projections_;
  std::size_t cells_per_projection_;
  std::vector<bool> bits_;
  std::uint64_t covered_ = 0;
};

// Value-semantics accumulation: returns `state` with `fvs` added.
CoverageState AddSuite(CoverageState state, std::span<const FeatureVector> fvs);

}  // namespace emocov

#endif  // EMOCOV_COVERAGE_H_
