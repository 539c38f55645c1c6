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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/scenario.hpp"

namespace boxlab {

/// Deterministic noncontextual assignment a_x = alpha*x ^ beta,
/// b_y = gamma*y ^ epsilon, D -> d, E -> e.
struct DetBoxId {
  int alpha = 0, beta = 0, gamma = 0, epsilon = 0, d = 0, e = 0;

  /// Bits read as the binary number alpha beta gamma epsilon d e, so the
  /// lexicographic (alpha beta gamma epsilon)(de) order is index order.
  std::size_t index() const;
  static DetBoxId from_index(std::size_t index);
  /// "(abge)(de)", e.g. "(0110)(10)".
  std::string label() const;
  static DetBoxId parse(std::string_view label);
  auto operator<=>(const DetBoxId&) const = default;
};

struct LocalDetBoxId {
  int alpha = 0, beta = 0, gamma = 0, epsilon = 0;

  std::size_t index() const;
  static LocalDetBoxId from_index(std::size_t index);
  std::string label() const;  // "(abge)"
  static LocalDetBoxId parse(std::string_view label);
  auto operator<=>(const LocalDetBoxId&) const = default;
};

inline constexpr std::size_t kNumNcVertices = 64;
inline constexpr std::size_t kNumLocalVertices = 16;

Box det_box(const DetBoxId& id);
BellMarginal local_det_box(const LocalDetBoxId& id);

/// All 64 deterministic boxes in index order. Built once.
const std::vector<std::pair<DetBoxId, Box>>& enumerate_nc_vertices();
const std::vector<std::pair<LocalDetBoxId, BellMarginal>>& enumerate_local_vertices();

/// True when every nonzero entry of `v` is nonzero in `target`.
bool support_contained(std::span<const Rational> v, std::span<const Rational> target);

/// Positions (into `vertices`) of the vertices whose support lies inside the
/// target's support, in input order.
std::vector<std::size_t> support_filter(std::span<const Box> vertices, const Box& target);
std::vector<std::size_t> support_filter(std::span<const BellMarginal> vertices, const BellMarginal& target);

std::vector<Box> nc_vertex_boxes();
std::vector<BellMarginal> local_vertex_boxes();

}  // namespace boxlab
