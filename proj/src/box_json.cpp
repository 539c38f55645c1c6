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

#include "boxlab/box_json.hpp"

namespace boxlab {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 4> kBellKeys{"A0B0", "A0B1", "A1B0", "A1B1"};

}  // namespace

json rational_array(std::span<const Rational> values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr;
}

std::vector<Rational> parse_rational_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rational strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw ParseError(where + ": probabilities must be rational strings like \"1/3\", got " + item.dump());
    }
    try {
      out.push_back(Rational::parse(item.get<std::string>()));
    } catch (const RationalError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return out;
}

json box_to_json(const Box& box) {
  json contexts = json::object();
  for (ContextId c : kAllContexts) contexts[to_string(c)] = rational_array(box.context(c));
  json j = {{"contexts", contexts}};
  if (!box.label().empty()) j["label"] = box.label();
  return j;
}

Box box_from_json(const json& j) {
  if (!j.is_object() || !j.contains("contexts") || !j["contexts"].is_object()) {
    throw ParseError("box JSON needs an object with a \"contexts\" object");
  }
  const json& ctx = j["contexts"];
  BoxTable t;
  for (ContextId c : kAllContexts) {
    const std::string key = to_string(c);
    if (!ctx.contains(key)) throw ParseError("box JSON is missing context " + key);
    t[static_cast<int>(c)] = parse_rational_array(ctx[key], key);
  }
  for (const auto& [key, _] : ctx.items()) {
    try {
      parse_context(key);
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown context key '" + key + "'");
    }
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    label = j["label"].get<std::string>();
  }
  return validate_box(t, std::move(label));
}

Box box_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return box_from_json(j);
}

std::string dump_box(const Box& box) { return box_to_json(box).dump(); }

json bell_marginal_to_json(const BellMarginal& m, const std::string& label) {
  json contexts = json::object();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) contexts[kBellKeys[2 * x + y]] = rational_array(m.context(x, y));
  }
  json j = {{"contexts", contexts}};
  if (!label.empty()) j["label"] = label;
  return j;
}

BellMarginal bell_marginal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("contexts") || !j["contexts"].is_object()) {
    throw ParseError("Bell marginal JSON needs a \"contexts\" object");
  }
  std::vector<Rational> flat;
  for (const char* key : kBellKeys) {
    if (!j["contexts"].contains(key)) throw ParseError(std::string("missing context ") + key);
    auto row = parse_rational_array(j["contexts"][key], key);
    if (row.size() != 4) throw ParseError(std::string(key) + " needs 4 entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_bell_marginal(flat);
}

}  // namespace boxlab
