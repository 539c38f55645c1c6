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

#include "boxlab/scenario.hpp"

#include <string_view>

namespace boxlab {

namespace {

using O = Observable;

constexpr std::array<O, 2> kC0{O::A0, O::B0};
constexpr std::array<O, 3> kC1{O::A0, O::B1, O::D};
constexpr std::array<O, 3> kC2{O::A1, O::B0, O::E};
constexpr std::array<O, 2> kC3{O::A1, O::B1};
constexpr std::array<O, 2> kC4{O::D, O::E};

int ci(ContextId c) { return static_cast<int>(c); }

}  // namespace

std::string to_string(ContextId c) { return "C" + std::to_string(ci(c)); }

std::string to_string(Observable o) {
  static constexpr std::array<std::string_view, 6> kNames{"A0", "A1", "B0", "B1", "D", "E"};
  return std::string(kNames[static_cast<int>(o)]);
}

ContextId parse_context(std::string_view name) {
  for (ContextId c : kAllContexts) {
    if (name == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown context '" + std::string(name) + "'");
}

std::span<const Observable> context_observables(ContextId c) {
  switch (c) {
    case ContextId::C0: return kC0;
    case ContextId::C1: return kC1;
    case ContextId::C2: return kC2;
    case ContextId::C3: return kC3;
    case ContextId::C4: return kC4;
  }
  throw std::logic_error("bad context");
}

std::pair<ContextId, ContextId> hosting_contexts(Observable o) {
  switch (o) {
    case O::A0: return {ContextId::C0, ContextId::C1};
    case O::B0: return {ContextId::C0, ContextId::C2};
    case O::B1: return {ContextId::C1, ContextId::C3};
    case O::A1: return {ContextId::C2, ContextId::C3};
    case O::D: return {ContextId::C1, ContextId::C4};
    case O::E: return {ContextId::C2, ContextId::C4};
  }
  throw std::logic_error("bad observable");
}

int position_in_context(ContextId c, Observable o) {
  const auto obs = context_observables(c);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (obs[i] == o) return static_cast<int>(i);
  }
  return -1;
}

std::size_t outcome_index(ContextId c, std::span<const int> bits) {
  if (bits.size() != context_observables(c).size()) {
    throw std::invalid_argument("outcome tuple length does not match context " + to_string(c));
  }
  std::size_t idx = 2 * static_cast<std::size_t>(bits[0]) + static_cast<std::size_t>(bits[1]);
  if (bits.size() == 3) idx += 4 * static_cast<std::size_t>(bits[2]);
  return idx;
}

std::vector<int> outcome_bits(ContextId c, std::size_t index) {
  std::vector<int> bits{static_cast<int>((index >> 1) & 1), static_cast<int>(index & 1)};
  if (context_observables(c).size() == 3) bits.push_back(static_cast<int>((index >> 2) & 1));
  return bits;
}

ValidationError::ValidationError(Observable o, ContextId first, ContextId second)
    : std::runtime_error("no-disturbance violated for " + to_string(o) + " between " + to_string(first) +
                         " and " + to_string(second)),
      kind_(Kind::NoDisturbanceViolation),
      observable_(o),
      contexts_(first, second) {}

Box Box::with_label(std::string label) const {
  Box b = *this;
  b.label_ = std::move(label);
  return b;
}

BoxTable Box::table() const {
  BoxTable t;
  for (ContextId c : kAllContexts) {
    auto row = context(c);
    t[ci(c)].assign(row.begin(), row.end());
  }
  return t;
}

std::pair<Rational, Rational> marginal_in(const Box& box, Observable o, ContextId c) {
  const int pos = position_in_context(c, o);
  if (pos < 0) throw std::invalid_argument(to_string(o) + " is not measured in " + to_string(c));
  Rational p0, p1;
  const auto row = box.context(c);
  for (std::size_t i = 0; i < row.size(); ++i) {
    (outcome_bits(c, i)[pos] == 0 ? p0 : p1) += row[i];
  }
  return {p0, p1};
}

namespace {

// Marginal computed from an unvalidated table; used during validation.
std::pair<Rational, Rational> raw_marginal(const BoxTable& t, Observable o, ContextId c) {
  const int pos = position_in_context(c, o);
  Rational p0, p1;
  const auto& row = t[ci(c)];
  for (std::size_t i = 0; i < row.size(); ++i) {
    (outcome_bits(c, i)[pos] == 0 ? p0 : p1) += row[i];
  }
  return {p0, p1};
}

}  // namespace

Box validate_box(const BoxTable& raw, std::string label) {
  for (ContextId c : kAllContexts) {
    if (raw[ci(c)].size() != kContextSize[ci(c)]) {
      throw ValidationError(ValidationError::Kind::WrongShape,
                            to_string(c) + " has " + std::to_string(raw[ci(c)].size()) + " entries, expected " +
                                std::to_string(kContextSize[ci(c)]));
    }
  }
  for (ContextId c : kAllContexts) {
    Rational sum;
    for (const Rational& v : raw[ci(c)]) {
      if (v.sign() < 0) {
        throw ValidationError(ValidationError::Kind::NegativeEntry,
                              "negative entry " + v.str() + " in " + to_string(c));
      }
      sum += v;
    }
    if (sum != Rational(1)) {
      throw ValidationError(ValidationError::Kind::NotNormalized,
                            to_string(c) + " sums to " + sum.str() + ", not 1");
    }
  }
  for (Observable o : kAllObservables) {
    const auto [first, second] = hosting_contexts(o);
    if (raw_marginal(raw, o, first) != raw_marginal(raw, o, second)) {
      throw ValidationError(o, first, second);
    }
  }
  Box box;
  std::size_t k = 0;
  for (ContextId c : kAllContexts) {
    for (const Rational& v : raw[ci(c)]) box.p_[k++] = v;
  }
  box.label_ = std::move(label);
  return box;
}

Box validate_box(std::span<const Rational> flat, std::string label) {
  if (flat.size() != kBoxSize) {
    throw ValidationError(ValidationError::Kind::WrongShape,
                          "box needs " + std::to_string(kBoxSize) + " entries, got " + std::to_string(flat.size()));
  }
  BoxTable t;
  for (ContextId c : kAllContexts) {
    const auto off = kContextOffset[ci(c)];
    t[ci(c)].assign(flat.begin() + off, flat.begin() + off + kContextSize[ci(c)]);
  }
  return validate_box(t, std::move(label));
}

std::pair<Rational, Rational> single_marginal(const Box& box, Observable o) {
  return marginal_in(box, o, hosting_contexts(o).first);
}

Rational single_expectation(const Box& box, Observable o) {
  const auto [p0, p1] = single_marginal(box, o);
  return p0 - p1;
}

Rational expectation(const Box& box, ContextId c) {
  Rational e;
  const auto row = box.context(c);
  for (std::size_t i = 0; i < row.size(); ++i) {
    int parity = 0;
    for (int b : outcome_bits(c, i)) parity ^= b;
    if (parity == 0) {
      e += row[i];
    } else {
      e -= row[i];
    }
  }
  return e;
}

Rational inequality_lhs(const Box& box) {
  return expectation(box, ContextId::C0) + expectation(box, ContextId::C1) + expectation(box, ContextId::C2) +
         expectation(box, ContextId::C3) - expectation(box, ContextId::C4);
}

namespace {

void check_weights(std::span<const Rational> weights, std::size_t count) {
  if (weights.size() != count) throw std::invalid_argument("mixture needs one weight per component");
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("mixture weight " + w.str() + " is negative");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("mixture weights sum to " + total.str() + ", not 1");
}

}  // namespace

Box mix(std::span<const Rational> weights, std::span<const Box> boxes, std::string label) {
  check_weights(weights, boxes.size());
  std::array<Rational, kBoxSize> acc;
  for (std::size_t j = 0; j < boxes.size(); ++j) {
    const auto& e = boxes[j].entries();
    for (std::size_t i = 0; i < kBoxSize; ++i) acc[i] += weights[j] * e[i];
  }
  return validate_box(acc, std::move(label));
}

BellMarginal validate_bell_marginal(std::span<const Rational> flat) {
  if (flat.size() != kBellSize) throw std::invalid_argument("Bell marginal needs 16 entries");
  for (std::size_t ctx = 0; ctx < 4; ++ctx) {
    Rational sum;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational& v = flat[4 * ctx + k];
      if (v.sign() < 0) {
        throw ValidationError(ValidationError::Kind::NegativeEntry, "negative entry in Bell marginal");
      }
      sum += v;
    }
    if (sum != Rational(1)) {
      throw ValidationError(ValidationError::Kind::NotNormalized, "Bell marginal context does not sum to 1");
    }
  }
  auto at = [&](int x, int y, int a, int b) -> const Rational& { return flat[4 * (2 * x + y) + 2 * a + b]; };
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      if (at(x, 0, a, 0) + at(x, 0, a, 1) != at(x, 1, a, 0) + at(x, 1, a, 1)) {
        throw ValidationError(ValidationError::Kind::NoDisturbanceViolation,
                              "no-signaling violated for A" + std::to_string(x));
      }
    }
  }
  for (int y = 0; y < 2; ++y) {
    for (int b = 0; b < 2; ++b) {
      if (at(0, y, 0, b) + at(0, y, 1, b) != at(1, y, 0, b) + at(1, y, 1, b)) {
        throw ValidationError(ValidationError::Kind::NoDisturbanceViolation,
                              "no-signaling violated for B" + std::to_string(y));
      }
    }
  }
  BellMarginal m;
  std::copy(flat.begin(), flat.end(), m.p_.begin());
  return m;
}

BellMarginal bell_marginal(const Box& box) {
  std::array<Rational, kBellSize> out;
  auto put = [&](int x, int y, int a, int b, const Rational& v) { out[4 * (2 * x + y) + 2 * a + b] += v; };
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      put(0, 0, a, b, box.at(ContextId::C0, 2 * a + b));
      put(1, 1, a, b, box.at(ContextId::C3, 2 * a + b));
      for (int z = 0; z < 2; ++z) {
        const std::size_t idx = 2 * a + b + 4 * z;
        put(0, 1, a, b, box.at(ContextId::C1, idx));  // (a0, b1, d) summed over d
        put(1, 0, a, b, box.at(ContextId::C2, idx));  // (a1, b0, e) summed over e
      }
    }
  }
  return validate_bell_marginal(out);
}

BellMarginal mix(std::span<const Rational> weights, std::span<const BellMarginal> marginals) {
  check_weights(weights, marginals.size());
  std::array<Rational, kBellSize> acc;
  for (std::size_t j = 0; j < marginals.size(); ++j) {
    for (std::size_t i = 0; i < kBellSize; ++i) acc[i] += weights[j] * marginals[j].entries()[i];
  }
  return validate_bell_marginal(acc);
}

}  // namespace boxlab
