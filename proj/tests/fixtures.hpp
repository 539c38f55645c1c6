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

// Reference boxes and decompositions, typed in row by row (C0..C4, outcome
// columns in the 000,010,100,110,001,011,101,111 order).

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/decompose.hpp"
#include "boxlab/scenario.hpp"
#include "boxlab/vertices.hpp"

namespace boxlab::fixtures {

inline std::vector<Rational> parse_row(const std::string& row) {
  std::istringstream is(row);
  std::vector<Rational> out;
  for (std::string tok; is >> tok;) out.push_back(Rational::parse(tok));
  return out;
}

inline BoxTable table(const std::string& c0, const std::string& c1, const std::string& c2, const std::string& c3,
                      const std::string& c4) {
  return {parse_row(c0), parse_row(c1), parse_row(c2), parse_row(c3), parse_row(c4)};
}

inline Box box(const std::string& c0, const std::string& c1, const std::string& c2, const std::string& c3,
               const std::string& c4, std::string label = {}) {
  return validate_box(table(c0, c1, c2, c3, c4), std::move(label));
}

// Ideal Peres box.
inline Box peres() {
  return box("1/2 0 0 1/2", "1/4 0 0 1/4 0 1/4 1/4 0", "1/4 0 0 1/4 0 1/4 1/4 0", "1/2 0 0 1/2", "0 1/2 1/2 0");
}

// Noisy Peres box at W = 1/3.
inline Box noisy_third() {
  return box("1/3 1/6 1/6 1/3", "1/4 0 0 1/4 0 1/4 1/4 0", "1/4 0 0 1/4 0 1/4 1/4 0", "1/3 1/6 1/6 1/3",
             "1/6 1/3 1/3 1/6");
}

// Product-observable box with uniform three-observable contexts.
inline Box product_me() {
  return box("1/2 0 0 1/2", "1/8 1/8 1/8 1/8 1/8 1/8 1/8 1/8", "1/8 1/8 1/8 1/8 1/8 1/8 1/8 1/8", "1/2 0 0 1/2",
             "1/2 0 0 1/2");
}

// Rank-2 state, Peres observables.
inline Box rank2() {
  return box("5/8 1/8 1/8 1/8", "1/2 0 0 0 0 1/4 1/4 0", "1/2 0 0 0 0 1/4 1/4 0", "5/8 1/8 1/8 1/8",
             "1/4 1/4 1/4 1/4");
}

// Classically correlated state, Peres observables.
inline Box cc_peres() {
  return box("1/2 0 0 1/2", "1/4 0 0 1/4 0 1/4 1/4 0", "1/4 0 0 1/4 0 1/4 1/4 0", "1/4 1/4 1/4 1/4",
             "1/4 1/4 1/4 1/4");
}

// Classically correlated state, rotated observables.
inline Box cc_rotated() {
  return box("3/8 1/8 1/8 3/8", "3/8 0 0 3/8 0 1/8 1/8 0", "3/8 0 0 3/8 0 1/8 1/8 0", "3/8 1/8 1/8 3/8",
             "1/2 1/4 1/4 0");
}

// Supernoncontextual box that passes every sub-condition of the
// semi-device-independent test.
inline Box sdi_box() {
  return box("1/2 1/6 1/6 1/6", "5/12 0 0 1/12 0 1/4 1/4 0", "5/12 0 0 1/12 0 1/4 1/4 0", "1/2 1/6 1/6 1/6",
             "1/6 1/3 1/3 1/6");
}

// Noncontextual remainder of sdi_box() after removing 1/3 of the Peres box.
inline Box sdi_residual() {
  return box("1/2 1/4 1/4 0", "1/2 0 0 0 0 1/4 1/4 0", "1/2 0 0 0 0 1/4 1/4 0", "1/2 1/4 1/4 0",
             "1/4 1/4 1/4 1/4");
}

// Box of the Bell-diagonal rank-3 state with Peres observables, computed by
// hand: <A0B0> = <A1B1> = 1/2, C1 and C2 as in the Peres box, C4 uniform.
inline Box rank3_rho() {
  return box("3/8 1/8 1/8 3/8", "1/4 0 0 1/4 0 1/4 1/4 0", "1/4 0 0 1/4 0 1/4 1/4 0", "3/8 1/8 1/8 3/8",
             "1/4 1/4 1/4 1/4");
}

using Terms = std::vector<std::pair<std::string, std::string>>;  // (vertex label, weight)

inline std::vector<DecompositionTerm> terms(const Terms& t) {
  std::vector<DecompositionTerm> out;
  for (const auto& [label, w] : t) out.push_back({DetBoxId::parse(label).index(), Rational::parse(w)});
  return out;
}

// Sixteen-term model offered for the W = 1/3 box.
inline const Terms kNoisyThirdTerms{
    {"0000(00)", "1/8"},  {"0101(00)", "1/8"},  {"1011(00)", "1/24"}, {"1110(00)", "1/24"},
    {"0010(10)", "1/24"}, {"0111(10)", "1/24"}, {"1001(10)", "1/24"}, {"1100(10)", "1/24"},
    {"0011(01)", "1/24"}, {"0110(01)", "1/24"}, {"1000(01)", "1/24"}, {"1101(01)", "1/24"},
    {"0001(11)", "1/24"}, {"0100(11)", "1/24"}, {"1010(11)", "1/8"},  {"1111(11)", "1/8"}};

inline const Terms kProductMeTerms{{"(0000)(00)", "1/8"}, {"(0101)(00)", "1/8"}, {"(1010)(00)", "1/8"},
                                   {"(1111)(00)", "1/8"}, {"(0000)(11)", "1/8"}, {"(0101)(11)", "1/8"},
                                   {"(1010)(11)", "1/8"}, {"(1111)(11)", "1/8"}};

inline const Terms kRank2Terms{{"(0000)(00)", "1/4"}, {"(0010)(10)", "1/8"}, {"(0011)(01)", "1/8"},
                               {"(1000)(01)", "1/8"}, {"(1010)(11)", "1/8"}, {"(1100)(10)", "1/8"},
                               {"(1111)(11)", "1/8"}};

inline const Terms kCcPeresTerms{
    {"(0000)(00)", "1/4"}, {"(0111)(10)", "1/4"}, {"(1101)(01)", "1/4"}, {"(1010)(11)", "1/4"}};

inline const Terms kCcRotatedTerms{{"(0000)(00)", "1/4"}, {"(0101)(00)", "1/4"}, {"(0010)(10)", "1/8"},
                                   {"(0111)(10)", "1/8"}, {"(0011)(01)", "1/8"}, {"(0110)(01)", "1/8"}};

// Four-term model offered for the noise box.
inline const Terms kNoiseTerms{
    {"(0000)(00)", "1/4"}, {"(0110)(10)", "1/4"}, {"(0111)(01)", "1/4"}, {"(0001)(11)", "1/4"}};

// Deterministic boxes copied from the vertex tables, three from each
// (de) block; rows C0..C4 as 0/1 strings.
struct VertexFixture {
  const char* label;
  const char* rows[5];
};

inline const std::vector<VertexFixture> kVertexTables{
    {"(0000)(00)", {"1000", "10000000", "10000000", "1000", "1000"}},
    {"(0101)(00)", {"0001", "00010000", "00010000", "0001", "1000"}},
    {"(1010)(00)", {"1000", "01000000", "00100000", "0001", "1000"}},
    {"(1111)(00)", {"0001", "00100000", "01000000", "1000", "1000"}},
    {"(0101)(10)", {"0001", "00000001", "00010000", "0001", "0010"}},
    {"(1010)(10)", {"1000", "00000100", "00100000", "0001", "0010"}},
    {"(1111)(10)", {"0001", "00000010", "01000000", "1000", "0010"}},
    {"(0101)(01)", {"0001", "00010000", "00000001", "0001", "0100"}},
    {"(1010)(01)", {"1000", "01000000", "00000010", "0001", "0100"}},
    {"(1111)(01)", {"0001", "00100000", "00000100", "1000", "0100"}},
    {"(0101)(11)", {"0001", "00000001", "00000001", "0001", "0001"}},
    {"(1010)(11)", {"1000", "00000100", "00000010", "0001", "0001"}},
    {"(1111)(11)", {"0001", "00000010", "00000100", "1000", "0001"}},
};

inline Box vertex_table_box(const VertexFixture& f) {
  BoxTable t;
  for (int c = 0; c < 5; ++c) {
    for (const char* p = f.rows[c]; *p; ++p) t[c].push_back(Rational(*p - '0'));
  }
  return validate_box(t);
}

}  // namespace boxlab::fixtures
