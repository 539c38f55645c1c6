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

#include "boxlab/families.hpp"

#include <stdexcept>

namespace boxlab {

namespace {

// Fills each context from a predicate on its outcome bits; `value` is used
// wherever the predicate holds, 0 elsewhere.
template <typename Pred>
std::vector<Rational> row(ContextId c, const Rational& value, Pred pred) {
  std::vector<Rational> r(kContextSize[static_cast<int>(c)]);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (pred(outcome_bits(c, i))) r[i] = value;
  }
  return r;
}

bool even(const std::vector<int>& bits) {
  int p = 0;
  for (int b : bits) p ^= b;
  return p == 0;
}

bool odd(const std::vector<int>& bits) { return !even(bits); }
bool any(const std::vector<int>&) { return true; }

}  // namespace

Box peres_box() {
  const Rational half(1, 2), quarter(1, 4);
  BoxTable t{row(ContextId::C0, half, even), row(ContextId::C1, quarter, even), row(ContextId::C2, quarter, even),
             row(ContextId::C3, half, even), row(ContextId::C4, half, odd)};
  return validate_box(t, "peres");
}

Box noise_box() {
  const Rational quarter(1, 4);
  BoxTable t{row(ContextId::C0, quarter, any), row(ContextId::C1, quarter, even), row(ContextId::C2, quarter, even),
             row(ContextId::C3, quarter, any), row(ContextId::C4, quarter, any)};
  return validate_box(t, "noise");
}

Box noisy_peres(const Rational& w) {
  if (w.sign() < 0 || w > Rational(1)) throw std::invalid_argument("noisy Peres weight must lie in [0, 1]");
  const std::array<Rational, 2> weights{w, Rational(1) - w};
  const std::array<Box, 2> parts{peres_box(), noise_box()};
  return mix(weights, parts, "noisy-peres W=" + w.str());
}

Box uniform_box() {
  BoxTable t;
  for (ContextId c : kAllContexts) {
    const auto n = static_cast<long>(kContextSize[static_cast<int>(c)]);
    t[static_cast<int>(c)].assign(n, Rational(1, n));
  }
  return validate_box(t, "uniform");
}

}  // namespace boxlab
