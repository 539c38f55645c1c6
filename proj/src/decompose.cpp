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

#include "boxlab/decompose.hpp"

#include <cstdlib>
#include <limits>

#include "boxlab/exactlp.hpp"
#include "boxlab/families.hpp"
#include "boxlab/vertices.hpp"

namespace boxlab {

namespace {

std::span<const Rational> vertex_entries(VertexSet set, std::size_t i) {
  if (set == VertexSet::Nc64) return enumerate_nc_vertices().at(i).second.entries();
  return enumerate_local_vertices().at(i).second.entries();
}

std::size_t vertex_count(VertexSet set) { return set == VertexSet::Nc64 ? kNumNcVertices : kNumLocalVertices; }

std::size_t entry_count(VertexSet set) { return set == VertexSet::Nc64 ? kBoxSize : kBellSize; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at each step.
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

std::size_t affine_dimension(VertexSet set) {
  const std::size_t n = vertex_count(set), m = entry_count(set);
  const auto base = vertex_entries(set, 0);
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < n; ++i) {
    const auto v = vertex_entries(set, i);
    std::vector<Rational> row(m);
    for (std::size_t r = 0; r < m; ++r) row[r] = v[r] - base[r];
    diffs.push_back(std::move(row));
  }
  return lp::rank(std::move(diffs));
}

// Exact LP feasibility of target = sum_j q_j v_j, sum q = 1, q >= 0 over
// the given vertices.
std::optional<std::vector<DecompositionTerm>> convex_fit(VertexSet set, std::span<const std::size_t> vertices,
                                                         std::span<const Rational> target) {
  const std::size_t m = entry_count(set);
  lp::LinearProgram prog(vertices.size());
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Rational> row(vertices.size());
    for (std::size_t j = 0; j < vertices.size(); ++j) row[j] = vertex_entries(set, vertices[j])[r];
    prog.add_eq(std::move(row), target[r]);
  }
  prog.add_eq(std::vector<Rational>(vertices.size(), Rational(1)), Rational(1));
  const lp::Result res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) return std::nullopt;
  std::vector<DecompositionTerm> terms;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (!res.solution[j].is_zero()) terms.push_back({vertices[j], res.solution[j]});
  }
  return terms;
}

std::optional<Decomposition> membership(VertexSet set, std::span<const Rational> target) {
  std::vector<std::size_t> all(vertex_count(set));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto terms = convex_fit(set, all, target);
  if (!terms) return std::nullopt;
  return Decomposition(set, std::move(*terms), target);
}

DimensionResult search_min(VertexSet set, std::span<const Rational> target, std::size_t cap,
                           const SearchConfig& config, std::optional<Decomposition> known) {
  const std::size_t m = entry_count(set);
  DimensionResult out;
  out.cap = cap;

  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < vertex_count(set); ++i) {
    if (support_contained(vertex_entries(set, i), target)) cand.push_back(i);
  }
  const std::size_t n = cand.size();
  out.candidates = n;

  // Rows of the candidate matrix that are linearly independent. Since the
  // target lies in the column span (it is a member), dependent rows carry no
  // information for any subset either.
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = vertex_entries(set, cand[j])[r];
  }
  const std::vector<std::size_t> keep = lp::independent_rows(rows);

  // Every nonzero target entry must be hit by some chosen vertex.
  std::vector<std::uint32_t> cover(n, 0);
  std::uint32_t need = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (!target[r].is_zero()) need |= 1u << r;
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[r][j].is_zero()) cover[j] |= 1u << r;
    }
  }

  const std::size_t kmax = std::min(cap, n);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::uint64_t level = binomial(n, k);
    if (level > config.node_budget || out.nodes + level > config.node_budget) {
      out.status = SearchStatus::LowerBoundOnly;
      out.d = k - 1;
      out.decomposition = std::move(known);
      return out;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ++out.nodes;
      std::uint32_t mask = 0;
      for (std::size_t i : idx) mask |= cover[i];
      if (mask == need) {
        ++out.lp_calls;
        lp::LinearProgram prog(k);
        for (std::size_t r : keep) {
          std::vector<Rational> row(k);
          for (std::size_t i = 0; i < k; ++i) row[i] = rows[r][idx[i]];
          prog.add_eq(std::move(row), target[r]);
        }
        const lp::Result res = lp::solve(prog);
        if (res.status == lp::Status::Optimal) {
          std::vector<DecompositionTerm> terms;
          for (std::size_t i = 0; i < k; ++i) terms.push_back({cand[idx[i]], res.solution[i]});
          // Any zero weight would mean a feasible (k-1)-subset, already refuted.
          out.decomposition.emplace(set, std::move(terms), target);
          out.d = k;
          out.status = SearchStatus::Exact;
          return out;
        }
      }
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("decomposition search exhausted the Caratheodory bound for a member box");
}

}  // namespace

std::vector<Rational> reconstruct(VertexSet set, std::span<const DecompositionTerm> terms) {
  std::vector<Rational> sum(entry_count(set));
  for (const auto& t : terms) {
    const auto v = vertex_entries(set, t.vertex);
    for (std::size_t r = 0; r < sum.size(); ++r) {
      if (!v[r].is_zero()) sum[r] += t.weight * v[r];
    }
  }
  return sum;
}

Decomposition::Decomposition(VertexSet set, std::vector<DecompositionTerm> terms, std::span<const Rational> target)
    : set_(set), terms_(std::move(terms)) {
  if (target.size() != entry_count(set_)) throw std::invalid_argument("decomposition target has the wrong size");
  Rational total;
  for (const auto& t : terms_) {
    if (t.vertex >= vertex_count(set_)) throw std::invalid_argument("decomposition vertex out of range");
    if (t.weight.sign() <= 0) throw std::invalid_argument("decomposition weights must be positive");
    total += t.weight;
  }
  if (total != Rational(1)) throw std::invalid_argument("decomposition weights sum to " + total.str());
  const auto sum = reconstruct(set_, terms_);
  for (std::size_t r = 0; r < sum.size(); ++r) {
    if (sum[r] != target[r]) throw std::invalid_argument("decomposition does not reconstruct its target");
  }
}

std::string Decomposition::vertex_label(std::size_t i) const {
  const std::size_t v = terms_.at(i).vertex;
  return set_ == VertexSet::Nc64 ? DetBoxId::from_index(v).label() : LocalDetBoxId::from_index(v).label();
}

nlohmann::json Decomposition::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    arr.push_back({{"vertex", vertex_label(i)}, {"weight", terms_[i].weight.str()}});
  }
  return arr;
}

SearchConfig SearchConfig::from_env() {
  SearchConfig c;
  if (const char* s = std::getenv("BOXLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') c.node_budget = v;
  }
  return c;
}

std::size_t nc_polytope_dimension() {
  static const std::size_t kDim = affine_dimension(VertexSet::Nc64);
  return kDim;
}

std::size_t lhv_polytope_dimension() {
  static const std::size_t kDim = affine_dimension(VertexSet::Lhv16);
  return kDim;
}

std::optional<Decomposition> nc_membership(const Box& box) { return membership(VertexSet::Nc64, box.entries()); }

std::optional<Decomposition> lhv_membership(const BellMarginal& marginal) {
  return membership(VertexSet::Lhv16, marginal.entries());
}

ContextualFraction contextual_fraction(const Box& box) {
  const auto& p = box.entries();
  lp::LinearProgram prog(kNumNcVertices);
  prog.sense = lp::Sense::Maximize;
  prog.objective.assign(kNumNcVertices, Rational(1));
  for (std::size_t r = 0; r < kBoxSize; ++r) {
    std::vector<Rational> row(kNumNcVertices);
    for (std::size_t j = 0; j < kNumNcVertices; ++j) row[j] = vertex_entries(VertexSet::Nc64, j)[r];
    prog.add_le(std::move(row), p[r]);
  }
  const lp::Result res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) throw std::logic_error("contextual-fraction program must be bounded and feasible");

  ContextualFraction out;
  out.ncf = res.value;
  out.cost = Rational(1) - res.value;
  for (std::size_t j = 0; j < kNumNcVertices; ++j) {
    if (!res.solution[j].is_zero()) out.sub.push_back({j, res.solution[j]});
  }
  if (out.cost.sign() > 0) {
    const auto fitted = reconstruct(VertexSet::Nc64, out.sub);
    std::vector<Rational> rest(kBoxSize);
    for (std::size_t r = 0; r < kBoxSize; ++r) rest[r] = (p[r] - fitted[r]) / out.cost;
    out.residual = validate_box(rest, "contextual residual");
  }
  return out;
}

PeresStrength peres_strength(const Box& box) {
  const Box peres = peres_box();
  const auto& p = box.entries();
  const std::size_t n = 1 + kNumNcVertices;  // p, then q_0..q_63
  lp::LinearProgram prog(n);
  prog.sense = lp::Sense::Maximize;
  prog.objective.assign(n, Rational(0));
  prog.objective[0] = Rational(1);
  for (std::size_t r = 0; r < kBoxSize; ++r) {
    std::vector<Rational> row(n);
    row[0] = peres.entries()[r];
    for (std::size_t j = 0; j < kNumNcVertices; ++j) row[1 + j] = vertex_entries(VertexSet::Nc64, j)[r];
    prog.add_eq(std::move(row), p[r]);
  }
  prog.add_eq(std::vector<Rational>(n, Rational(1)), Rational(1));
  const lp::Result res = lp::solve(prog);
  if (res.status != lp::Status::Optimal) throw NotDecomposable();

  PeresStrength out;
  out.ps = res.value;
  const Rational rest_weight = Rational(1) - out.ps;
  if (rest_weight.sign() > 0) {
    std::vector<Rational> rest(kBoxSize);
    for (std::size_t r = 0; r < kBoxSize; ++r) rest[r] = (p[r] - out.ps * peres.entries()[r]) / rest_weight;
    out.residual = validate_box(rest, "Peres residual");
    std::vector<DecompositionTerm> terms;
    for (std::size_t j = 0; j < kNumNcVertices; ++j) {
      if (!res.solution[1 + j].is_zero()) terms.push_back({j, res.solution[1 + j] / rest_weight});
    }
    out.residual_decomposition.emplace(VertexSet::Nc64, std::move(terms), out.residual->entries());
  }
  return out;
}

DimensionResult min_nc_dimension(const Box& box, const SearchConfig& config) {
  auto member = nc_membership(box);
  if (!member) throw NotNoncontextual();
  return search_min(VertexSet::Nc64, box.entries(), nc_polytope_dimension() + 1, config, std::move(member));
}

DimensionResult min_lhv_dimension(const BellMarginal& marginal, const SearchConfig& config) {
  auto member = lhv_membership(marginal);
  if (!member) throw NotLocal();
  return search_min(VertexSet::Lhv16, marginal.entries(), lhv_polytope_dimension() + 1, config, std::move(member));
}

namespace {

DimensionVerdict verdict(DimensionResult dims, std::size_t threshold, const char* what) {
  if (dims.status == SearchStatus::LowerBoundOnly && dims.d < threshold) {
    throw Inconclusive(std::string(what) + ": search budget exhausted after refuting k = " + std::to_string(dims.d));
  }
  // A capped search that refuted every k <= threshold still decides the question.
  const bool value = dims.status == SearchStatus::LowerBoundOnly || dims.d > threshold;
  return {value, std::move(dims)};
}

}  // namespace

DimensionVerdict is_supernoncontextual(const Box& box, const SearchConfig& config) {
  return verdict(min_nc_dimension(box, config), kGlobalQuantumDimension, "supernoncontextuality");
}

DimensionVerdict is_superlocal(const BellMarginal& marginal, const SearchConfig& config) {
  return verdict(min_lhv_dimension(marginal, config), kLocalQuantumDimension, "superlocality");
}

}  // namespace boxlab
