// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Membership, contextual fraction, Peres strength and minimal-cardinality
// decompositions over deterministic vertices.
//
// The hidden-variable dimension is the number of deterministic vertices
// carrying nonzero weight. The minimal one is found by testing k-subsets of
// the support-compatible vertices for k = 1, 2, ... in lexicographic order,
// so the first feasible subset is also the lexicographically smallest.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxlab/scenario.hpp"
#include "json.hpp"

namespace boxlab {

class NotNoncontextual : public std::runtime_error {
 public:
  NotNoncontextual() : std::runtime_error("box has no noncontextual decomposition") {}
};

class NotLocal : public std::runtime_error {
 public:
  NotLocal() : std::runtime_error("Bell marginal has no local deterministic decomposition") {}
};

class NotDecomposable : public std::runtime_error {
 public:
  NotDecomposable() : std::runtime_error("box is not a mixture of the Peres box and noncontextual boxes") {}
};

class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VertexSet { Nc64, Lhv16 };

struct DecompositionTerm {
  std::size_t vertex;  // DetBoxId / LocalDetBoxId index
  Rational weight;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Sum of weight * vertex, entry by entry (28 entries for Nc64, 16 for Lhv16).
std::vector<Rational> reconstruct(VertexSet set, std::span<const DecompositionTerm> terms);

/// A convex decomposition of a target into deterministic vertices. The
/// constructor checks positivity, normalization and exact reconstruction.
class Decomposition {
 public:
  Decomposition(VertexSet set, std::vector<DecompositionTerm> terms, std::span<const Rational> target);

  VertexSet set() const { return set_; }
  const std::vector<DecompositionTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::string vertex_label(std::size_t i) const;

  /// [{"vertex": "(abge)(de)", "weight": "n/d"}, ...]
  nlohmann::json to_json() const;

 private:
  VertexSet set_;
  std::vector<DecompositionTerm> terms_;
};

struct SearchConfig {
  /// Maximum number of candidate subsets visited across all k.
  std::uint64_t node_budget = 2'000'000;

  /// Default budget, overridden by the BOXLAB_BUDGET environment variable.
  static SearchConfig from_env();
};

enum class SearchStatus { Exact, LowerBoundOnly };

struct DimensionResult {
  /// Exact: the minimal number of vertices. LowerBoundOnly: the largest k for
  /// which every k-subset was refuted, so the true value exceeds it.
  std::size_t d = 0;
  /// Exact: a decomposition of size d. LowerBoundOnly: the (non-minimal)
  /// membership decomposition, if any.
  std::optional<Decomposition> decomposition;
  SearchStatus status = SearchStatus::Exact;
  std::size_t candidates = 0;  // vertices left after support filtering
  std::size_t cap = 0;         // Caratheodory bound: affine dimension + 1
  std::uint64_t nodes = 0;     // subsets visited
  std::uint64_t lp_calls = 0;  // subsets that survived coverage pruning
};

/// Affine dimension of the noncontextual polytope (hull of the 64 vertices)
/// and of the local polytope of the Bell marginal, by exact rank.
std::size_t nc_polytope_dimension();
std::size_t lhv_polytope_dimension();

std::optional<Decomposition> nc_membership(const Box& box);
std::optional<Decomposition> lhv_membership(const BellMarginal& marginal);

struct ContextualFraction {
  Rational ncf;   // max total weight of vertices fitting under the box
  Rational cost;  // 1 - ncf
  std::vector<DecompositionTerm> sub;  // the sub-normalized mixture, sum = ncf
  std::optional<Box> residual;         // (box - sub) / cost, when cost > 0
};

ContextualFraction contextual_fraction(const Box& box);

struct PeresStrength {
  Rational ps;
  std::optional<Box> residual;  // (box - ps * Peres) / (1 - ps), when ps < 1
  std::optional<Decomposition> residual_decomposition;
};

/// Largest p with box = p * Peres + (1 - p) * (noncontextual box).
/// Throws NotDecomposable when no p in [0, 1] works.
PeresStrength peres_strength(const Box& box);

/// Throws NotNoncontextual.
DimensionResult min_nc_dimension(const Box& box, const SearchConfig& config = SearchConfig::from_env());
/// Throws NotLocal.
DimensionResult min_lhv_dimension(const BellMarginal& marginal, const SearchConfig& config = SearchConfig::from_env());

inline constexpr std::size_t kGlobalQuantumDimension = 4;  // two qubits
inline constexpr std::size_t kLocalQuantumDimension = 2;   // one qubit

struct DimensionVerdict {
  bool value;
  DimensionResult dims;
};

/// d > 4. Throws NotNoncontextual, or Inconclusive when the search was capped
/// below the threshold.
DimensionVerdict is_supernoncontextual(const Box& box, const SearchConfig& config = SearchConfig::from_env());
/// d > 2. Throws NotLocal or Inconclusive.
DimensionVerdict is_superlocal(const BellMarginal& marginal, const SearchConfig& config = SearchConfig::from_env());

}  // namespace boxlab
