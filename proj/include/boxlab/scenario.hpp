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

// The five-context Peres scenario:
//
//   C0 = A0 B0       (4 outcomes, bits (a0,b0))
//   C1 = A0 B1 D     (8 outcomes, bits (a0,b1,d))
//   C2 = A1 B0 E     (8 outcomes, bits (a1,b0,e))
//   C3 = A1 B1       (4 outcomes, bits (a1,b1))
//   C4 = D E         (4 outcomes, bits (d,e))
//
// Two-outcome-bit contexts use index 2*x + y. Three-bit contexts use the
// column order 000,010,100,110,001,011,101,111, i.e. index 2*x + y + 4*z.
// Outcome bit 0 is the +1 eigenvalue, bit 1 is -1.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/rational.hpp"

namespace boxlab {

enum class ContextId { C0 = 0, C1 = 1, C2 = 2, C3 = 3, C4 = 4 };
enum class Observable { A0 = 0, A1 = 1, B0 = 2, B1 = 3, D = 4, E = 5 };

inline constexpr std::size_t kNumContexts = 5;
inline constexpr std::size_t kBoxSize = 28;
inline constexpr std::size_t kBellSize = 16;
inline constexpr std::array<std::size_t, kNumContexts> kContextSize{4, 8, 8, 4, 4};
inline constexpr std::array<std::size_t, kNumContexts> kContextOffset{0, 4, 12, 20, 24};
inline constexpr std::array<ContextId, kNumContexts> kAllContexts{
    ContextId::C0, ContextId::C1, ContextId::C2, ContextId::C3, ContextId::C4};
inline constexpr std::array<Observable, 6> kAllObservables{
    Observable::A0, Observable::A1, Observable::B0, Observable::B1, Observable::D, Observable::E};

std::string to_string(ContextId c);
std::string to_string(Observable o);
ContextId parse_context(std::string_view name);

/// Observables measured in `c`, in outcome-bit order.
std::span<const Observable> context_observables(ContextId c);
/// The two contexts hosting `o` (every observable sits in exactly two).
std::pair<ContextId, ContextId> hosting_contexts(Observable o);
/// Position of `o` inside `c`'s outcome tuple, or -1.
int position_in_context(ContextId c, Observable o);

std::size_t outcome_index(ContextId c, std::span<const int> bits);
std::vector<int> outcome_bits(ContextId c, std::size_t index);

/// Per-context probability vectors before validation.
using BoxTable = std::array<std::vector<Rational>, kNumContexts>;

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { WrongShape, NegativeEntry, NotNormalized, NoDisturbanceViolation };

  ValidationError(Kind kind, std::string message) : std::runtime_error(std::move(message)), kind_(kind) {}
  ValidationError(Observable o, ContextId first, ContextId second);

  Kind kind() const { return kind_; }
  Observable observable() const { return observable_; }
  std::pair<ContextId, ContextId> contexts() const { return contexts_; }

 private:
  Kind kind_;
  Observable observable_ = Observable::A0;
  std::pair<ContextId, ContextId> contexts_{ContextId::C0, ContextId::C0};
};

/// A validated no-disturbance box. Immutable; obtain through validate_box.
class Box {
 public:
  const std::array<Rational, kBoxSize>& entries() const { return p_; }
  std::span<const Rational> context(ContextId c) const {
    return {p_.data() + kContextOffset[static_cast<int>(c)], kContextSize[static_cast<int>(c)]};
  }
  const Rational& at(ContextId c, std::size_t outcome) const {
    return p_[kContextOffset[static_cast<int>(c)] + outcome];
  }
  const std::string& label() const { return label_; }
  Box with_label(std::string label) const;
  BoxTable table() const;

  /// Entry-wise equality; labels are ignored.
  friend bool operator==(const Box& a, const Box& b) { return a.p_ == b.p_; }

 private:
  friend Box validate_box(const BoxTable& raw, std::string label);
  std::array<Rational, kBoxSize> p_;
  std::string label_;
};

/// Checks shape, nonnegativity, normalization and every no-disturbance
/// condition with exact equality.
Box validate_box(const BoxTable& raw, std::string label = {});
Box validate_box(std::span<const Rational> flat, std::string label = {});

/// (p(0|o), p(1|o)) computed inside `c`, which must host `o`.
std::pair<Rational, Rational> marginal_in(const Box& box, Observable o, ContextId c);
std::pair<Rational, Rational> single_marginal(const Box& box, Observable o);
/// <o> = p(0|o) - p(1|o).
Rational single_expectation(const Box& box, Observable o);

/// Sum over outcomes of (-1)^(parity of all outcome bits) * p.
Rational expectation(const Box& box, ContextId c);

/// <A0B0> + <A0B1D> + <A1B0E> + <A1B1> - <DE>; noncontextual boxes give <= 3.
Rational inequality_lhs(const Box& box);

/// Convex mixture with exact weights; weights must be nonnegative and sum to 1.
Box mix(std::span<const Rational> weights, std::span<const Box> boxes, std::string label = {});

/// Marginal onto the four contexts A_xB_y, stored at index 2*x + y, each with
/// outcome index 2*a + b.
class BellMarginal {
 public:
  const std::array<Rational, kBellSize>& entries() const { return p_; }
  std::span<const Rational> context(int x, int y) const { return {p_.data() + 4 * (2 * x + y), 4}; }
  const Rational& at(int x, int y, int a, int b) const { return p_[4 * (2 * x + y) + 2 * a + b]; }
  friend bool operator==(const BellMarginal& a, const BellMarginal& b) { return a.p_ == b.p_; }

 private:
  friend BellMarginal validate_bell_marginal(std::span<const Rational> flat);
  std::array<Rational, kBellSize> p_;
};

/// Nonnegativity, normalization and no-signaling, all exact.
BellMarginal validate_bell_marginal(std::span<const Rational> flat);
BellMarginal bell_marginal(const Box& box);
BellMarginal mix(std::span<const Rational> weights, std::span<const BellMarginal> marginals);

}  // namespace boxlab
