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

// Box JSON:
//   {"contexts": {"C0": ["1/2","0","0","1/2"], "C1": [...8...], ...}, "label": "..."}
// Probabilities are rational strings; JSON numbers are rejected so that no
// binary floating point value ever enters a box. Keys are emitted in sorted
// order, which makes the compact dump canonical.

#include <stdexcept>
#include <string>

#include "boxlab/scenario.hpp"
#include "json.hpp"

namespace boxlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json rational_array(std::span<const Rational> values);
std::vector<Rational> parse_rational_array(const nlohmann::json& j, const std::string& where);

nlohmann::json box_to_json(const Box& box);
/// Throws ParseError on malformed input and ValidationError on an invalid box.
Box box_from_json(const nlohmann::json& j);
Box box_from_string(const std::string& text);
/// Compact canonical single-line form.
std::string dump_box(const Box& box);

nlohmann::json bell_marginal_to_json(const BellMarginal& m, const std::string& label = {});
BellMarginal bell_marginal_from_json(const nlohmann::json& j);

}  // namespace boxlab
