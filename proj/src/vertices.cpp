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

#include "boxlab/vertices.hpp"

#include <stdexcept>

namespace boxlab {

namespace {

int bit_of(char c) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  throw std::invalid_argument("expected a bit");
}

// Strips parentheses and returns the bare bit string.
std::string bare_bits(std::string_view label) {
  std::string bits;
  for (char c : label) {
    if (c == '(' || c == ')') continue;
    bits.push_back(c);
  }
  return bits;
}

}  // namespace

std::size_t DetBoxId::index() const {
  return static_cast<std::size_t>(alpha << 5 | beta << 4 | gamma << 3 | epsilon << 2 | d << 1 | e);
}

DetBoxId DetBoxId::from_index(std::size_t i) {
  if (i >= kNumNcVertices) throw std::out_of_range("deterministic box index out of range");
  const int v = static_cast<int>(i);
  return {v >> 5 & 1, v >> 4 & 1, v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1};
}

std::string DetBoxId::label() const {
  std::string s = "(";
  for (int b : {alpha, beta, gamma, epsilon}) s.push_back(static_cast<char>('0' + b));
  s += ")(";
  s.push_back(static_cast<char>('0' + d));
  s.push_back(static_cast<char>('0' + e));
  return s + ")";
}

DetBoxId DetBoxId::parse(std::string_view label) {
  const std::string bits = bare_bits(label);
  if (bits.size() != 6) throw std::invalid_argument("bad deterministic box label '" + std::string(label) + "'");
  try {
    return {bit_of(bits[0]), bit_of(bits[1]), bit_of(bits[2]), bit_of(bits[3]), bit_of(bits[4]), bit_of(bits[5])};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad deterministic box label '" + std::string(label) + "'");
  }
}

std::size_t LocalDetBoxId::index() const {
  return static_cast<std::size_t>(alpha << 3 | beta << 2 | gamma << 1 | epsilon);
}

LocalDetBoxId LocalDetBoxId::from_index(std::size_t i) {
  if (i >= kNumLocalVertices) throw std::out_of_range("local deterministic box index out of range");
  const int v = static_cast<int>(i);
  return {v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1};
}

std::string LocalDetBoxId::label() const {
  std::string s = "(";
  for (int b : {alpha, beta, gamma, epsilon}) s.push_back(static_cast<char>('0' + b));
  return s + ")";
}

LocalDetBoxId LocalDetBoxId::parse(std::string_view label) {
  const std::string bits = bare_bits(label);
  if (bits.size() != 4) throw std::invalid_argument("bad local box label '" + std::string(label) + "'");
  try {
    return {bit_of(bits[0]), bit_of(bits[1]), bit_of(bits[2]), bit_of(bits[3])};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad local box label '" + std::string(label) + "'");
  }
}

Box det_box(const DetBoxId& id) {
  const int a0 = id.beta, a1 = id.alpha ^ id.beta;
  const int b0 = id.epsilon, b1 = id.gamma ^ id.epsilon;
  BoxTable t;
  for (ContextId c : kAllContexts) t[static_cast<int>(c)].assign(kContextSize[static_cast<int>(c)], Rational(0));
  auto set = [&](ContextId c, std::initializer_list<int> bits) {
    const std::vector<int> b(bits);
    t[static_cast<int>(c)][outcome_index(c, b)] = Rational(1);
  };
  set(ContextId::C0, {a0, b0});
  set(ContextId::C1, {a0, b1, id.d});
  set(ContextId::C2, {a1, b0, id.e});
  set(ContextId::C3, {a1, b1});
  set(ContextId::C4, {id.d, id.e});
  return validate_box(t, id.label());
}

BellMarginal local_det_box(const LocalDetBoxId& id) {
  std::array<Rational, kBellSize> p;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int a = (id.alpha * x) ^ id.beta;
      const int b = (id.gamma * y) ^ id.epsilon;
      p[4 * (2 * x + y) + 2 * a + b] = Rational(1);
    }
  }
  return validate_bell_marginal(p);
}

const std::vector<std::pair<DetBoxId, Box>>& enumerate_nc_vertices() {
  static const auto kVertices = [] {
    std::vector<std::pair<DetBoxId, Box>> v;
    v.reserve(kNumNcVertices);
    for (std::size_t i = 0; i < kNumNcVertices; ++i) {
      const DetBoxId id = DetBoxId::from_index(i);
      v.emplace_back(id, det_box(id));
    }
    return v;
  }();
  return kVertices;
}

const std::vector<std::pair<LocalDetBoxId, BellMarginal>>& enumerate_local_vertices() {
  static const auto kVertices = [] {
    std::vector<std::pair<LocalDetBoxId, BellMarginal>> v;
    v.reserve(kNumLocalVertices);
    for (std::size_t i = 0; i < kNumLocalVertices; ++i) {
      const LocalDetBoxId id = LocalDetBoxId::from_index(i);
      v.emplace_back(id, local_det_box(id));
    }
    return v;
  }();
  return kVertices;
}

bool support_contained(std::span<const Rational> v, std::span<const Rational> target) {
  if (v.size() != target.size()) throw std::invalid_argument("support comparison of mismatched sizes");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero() && target[i].is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> support_filter(std::span<const Box> vertices, const Box& target) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (support_contained(vertices[i].entries(), target.entries())) keep.push_back(i);
  }
  return keep;
}

std::vector<std::size_t> support_filter(std::span<const BellMarginal> vertices, const BellMarginal& target) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (support_contained(vertices[i].entries(), target.entries())) keep.push_back(i);
  }
  return keep;
}

std::vector<Box> nc_vertex_boxes() {
  std::vector<Box> out;
  for (const auto& [id, box] : enumerate_nc_vertices()) out.push_back(box);
  return out;
}

std::vector<BellMarginal> local_vertex_boxes() {
  std::vector<BellMarginal> out;
  for (const auto& [id, m] : enumerate_local_vertices()) out.push_back(m);
  return out;
}

}  // namespace boxlab
