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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxlab/decompose.hpp"
#include "boxlab/scenario.hpp"
#include "json.hpp"

namespace boxlab {

class PairNotJoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// <O1 O2> - <O1><O2>, read from a context hosting both. Throws PairNotJoint.
Rational covariance(const Box& box, Observable o1, Observable o2);

/// cov(A0,B0) cov(A1,B1) - cov(A1,B0) cov(A0,B1).
Rational q_witness(const Box& box);

enum class CovarianceSign {
  NonZero,         // cov(D,E) != 0
  StrictlyPositive  // cov(D,E) > 0
};

struct SdiCheck {
  bool value = false;
  Rational q, exp_c1, exp_c2, cov_de;
  bool q_nonzero = false, c1_is_one = false, c2_is_one = false, cov_de_ok = false;
  /// One line per sub-condition, "ok" or "fails".
  std::vector<std::string> reasons;
};

/// Q != 0, <A0B1D> = 1, <A1B0E> = 1 and the cov(D,E) condition.
SdiCheck sdi_contextuality_check(const Box& box, CovarianceSign sign = CovarianceSign::NonZero);

struct ClassifyOptions {
  bool skip_dims = false;  // leave out the subset searches
  CovarianceSign sign = CovarianceSign::NonZero;
  SearchConfig search = SearchConfig::from_env();
};

struct Report {
  std::string label;
  bool nd_valid = true;
  Box box;
  Rational inequality_lhs;
  bool contextual = false;
  Rational cost, ncf;
  std::optional<Decomposition> nc_decomposition;  // membership witness when noncontextual
  std::optional<DimensionResult> min_nc_dim;      // noncontextual boxes only
  std::optional<DimensionResult> min_lhv_dim;     // Bell-local marginals only
  std::optional<bool> supernoncontextual;         // empty when not applicable or inconclusive
  std::optional<bool> superlocal;
  Rational q, cov_de, exp_a0b1d, exp_a1b0e;
  SdiCheck sdi;
  std::optional<Rational> peres_strength;  // empty when NotDecomposable
};

Report classify(const Box& box, const ClassifyOptions& options = {});

nlohmann::json report_to_json(const Report& r);
std::string report_csv_header();
std::string report_csv_row(const Report& r);

/// Decimal rendering with 12 significant digits.
std::string decimal12(const Rational& r);
/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace boxlab
