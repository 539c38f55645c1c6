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

// Exact rational linear programming.
//
// Dense two-phase tableau simplex with Bland's smallest-index rule for both
// the entering and the leaving variable, so the pivot sequence (and hence
// the returned vertex) is a deterministic function of the program. Every
// Optimal answer is checked against the original constraints in exact
// arithmetic, and every Infeasible answer carries a Farkas certificate that
// is checked the same way.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "boxlab/rational.hpp"

namespace boxlab::lp {

class MalformedProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

struct LinearProgram {
  std::size_t num_vars = 0;
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;  // empty means the zero objective

  std::vector<std::vector<Rational>> eq_rows;  // eq_rows[i] . x == eq_rhs[i]
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> le_rows;  // le_rows[i] . x <= le_rhs[i]
  std::vector<Rational> le_rhs;

  std::vector<bool> nonneg;  // per variable; empty means every variable >= 0

  explicit LinearProgram(std::size_t n = 0) : num_vars(n) {}

  void add_eq(std::vector<Rational> row, Rational rhs);
  void add_le(std::vector<Rational> row, Rational rhs);
  bool is_nonneg(std::size_t j) const { return nonneg.empty() || nonneg[j]; }
};

struct Result {
  Status status = Status::Infeasible;
  Rational value;                  // objective value when Optimal
  std::vector<Rational> solution;  // a vertex of the feasible region when Optimal

  // When Infeasible: multipliers (u for eq rows, then v for le rows) with
  // v >= 0, (u^T E + v^T L)_j >= 0 on nonnegative variables and == 0 on free
  // ones, and u^T f + v^T g < 0. Checked inside solve().
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

Result solve(const LinearProgram& program);

/// Exact residual check: all constraints and sign restrictions hold.
bool satisfies(const LinearProgram& program, const std::vector<Rational>& x);

/// Independent exact check of a Farkas certificate as stored in Result.
bool certifies_infeasibility(const LinearProgram& program, const std::vector<Rational>& y);

/// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// Indices of a maximal linearly independent subset of `rows`, chosen
/// greedily in input order.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Rational>>& rows);

}  // namespace boxlab::lp
