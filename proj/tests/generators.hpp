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

// Seeded random boxes for property tests.

#include <random>
#include <vector>

#include "boxlab/families.hpp"
#include "boxlab/scenario.hpp"
#include "boxlab/vertices.hpp"

namespace boxlab::gen {

/// `count` positive weights with denominators up to `den`, summing to 1.
inline std::vector<Rational> weights(std::mt19937& rng, std::size_t count, long den = 12) {
  std::uniform_int_distribution<long> d(1, den);
  std::vector<Rational> w(count);
  Rational total;
  for (auto& x : w) {
    x = Rational(d(rng), den);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

/// Mixture of `k` distinct random deterministic vertices.
inline Box nc_box(std::mt19937& rng, std::size_t k) {
  std::vector<std::size_t> ids(kNumNcVertices);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Box> parts;
  for (std::size_t i = 0; i < k; ++i) parts.push_back(det_box(DetBoxId::from_index(ids[i])));
  return mix(weights(rng, k), parts);
}

/// Random mixture of the Peres box, the uniform box and a few vertices;
/// contextual or not depending on the draw.
inline Box any_box(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 5);
  const std::size_t k = nv(rng);
  std::vector<Box> parts{peres_box(), uniform_box()};
  std::uniform_int_distribution<std::size_t> pick(0, kNumNcVertices - 1);
  for (std::size_t i = 0; i < k; ++i) parts.push_back(det_box(DetBoxId::from_index(pick(rng))));
  return mix(weights(rng, parts.size()), parts);
}

// Flips the outcome of observable o in every context that hosts it.
inline Box flip(const Box& b, Observable o) {
  BoxTable t = b.table();
  for (ContextId c : kAllContexts) {
    const int pos = position_in_context(c, o);
    if (pos < 0) continue;
    const auto& src = b.context(c);
    auto& dst = t[static_cast<int>(c)];
    for (std::size_t k = 0; k < src.size(); ++k) {
      std::vector<int> bits = outcome_bits(c, k);
      bits[pos] ^= 1;
      dst[outcome_index(c, bits)] = src[k];
    }
  }
  return validate_box(t);
}

}  // namespace boxlab::gen
