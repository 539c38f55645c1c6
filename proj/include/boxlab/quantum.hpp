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

// Two-qubit states, observable assignments and the boxes they produce.
//
// Everything here is double precision. rationalize_box is the only way from
// these floats to an exact Box.

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boxlab/scenario.hpp"

namespace boxlab {

using CMatrix4 = Eigen::Matrix4cd;
using CVector4 = Eigen::Vector4cd;

class ParameterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContextNotCommuting : public std::runtime_error {
 public:
  explicit ContextNotCommuting(ContextId c)
      : std::runtime_error("observables in context " + to_string(c) + " do not commute"), context_(c) {}
  ContextId context() const { return context_; }

 private:
  ContextId context_;
};

class NegativeProbability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoExactRationalization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;
inline constexpr double kCommuteTol = 1e-10;
inline constexpr double kProbabilityTol = 1e-12;

enum class StateFamily { MaxEntangled, Werner, CC, Rank2, Rank3Rho, Rank3Sigma };

/// Accepts "max_entangled", "werner", "cc", "rank2", "rank3_rho",
/// "rank3_sigma" (a '-' may replace '_').
StateFamily parse_state_family(std::string_view name);
std::string to_string(StateFamily f);

/// (|00> + |11>) / sqrt(2).
CVector4 psi_me();

/// Density matrix of the named family. `w` is read only for Werner and must
/// lie in [0, 1]. Throws ParameterOutOfRange.
CMatrix4 make_state(StateFamily family, double w = 1.0);

/// Hermitian, unit trace, positive semidefinite. Throws InvalidMatrix.
void check_density(const CMatrix4& rho);
/// Hermitian with spectrum in {+1, -1}. Throws InvalidMatrix.
void check_observable(const CMatrix4& o);

enum class ObservableSetName { Peres, Product, Rotated };
ObservableSetName parse_observable_set(std::string_view name);
std::string to_string(ObservableSetName s);

struct ObservableSet {
  std::array<CMatrix4, 6> ops;  // indexed by Observable
  const CMatrix4& operator[](Observable o) const { return ops[static_cast<int>(o)]; }
};

/// peres: A0=Z1, B0=1Z, B1=1X, A1=X1, D=ZX, E=XZ.
/// product: as peres but D=1X, E=X1.
/// rotated: built from (Z+X)/sqrt2 and (Z-X)/sqrt2 in the same pattern.
ObservableSet make_observables(ObservableSetName name);

/// Throws ContextNotCommuting for the first context with a commutator
/// entry of magnitude >= 1e-10.
void check_commutation(const ObservableSet& obs);

struct RawBox {
  std::array<double, kBoxSize> p{};
  /// Whether D == A0 B1 (resp. E == A1 B0) holds as an operator identity.
  bool d_is_product = false;
  bool e_is_product = false;
  /// Whether C1 (resp. C2) puts all weight on d = a0 ^ b1 (resp. e = a1 ^ b0).
  /// Reported only; the product observable set breaks it on purpose.
  bool c1_follows_product_rule = false;
  bool c2_follows_product_rule = false;
};

/// p(c|C) = tr(rho P1 P2 [P3]) with P = (1 + (-1)^bit O) / 2 in context
/// order. Throws InvalidMatrix, ContextNotCommuting or NegativeProbability.
RawBox box_from_state(const CMatrix4& rho, const ObservableSet& obs);

/// Closest fraction to x with denominator <= max_den.
Rational best_rational(double x, long max_den);

/// Rounds every entry to its best rational at `max_den` and insists on an
/// exactly valid box, with no renormalization afterwards. Throws
/// NoExactRationalization.
Box rationalize_box(std::span<const double> raw, long max_den = 4096, double tol = 1e-9, std::string label = {});

struct PeresIdentities {
  bool a0b0 = false;  // A0 B0 psi == psi
  bool a1b1 = false;  // A1 B1 psi == psi
  bool de = false;    // D E psi == -psi
  bool d_is_a0b1 = false;
  bool e_is_a1b0 = false;
  bool all() const { return a0b0 && a1b1 && de && d_is_a0b1 && e_is_a1b0; }
};

/// Vector identities to 1e-12 in norm, operator identities entrywise.
PeresIdentities verify_peres_identities(const ObservableSet& obs, const CVector4& psi);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct PureQubit {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::Vector2cd ket() const;
  Eigen::Matrix2cd projector() const;
};

/// |0,0> and three states at polar angle arccos(-1/3), azimuths 0, 2pi/3, 4pi/3.
std::array<PureQubit, 4> tetrahedral_states();

/// (1/4) sum_k Z_k (x) conj(Z_k) over the tetrahedral states; a four-term
/// product decomposition of the W = 1/3 Werner state.
CMatrix4 werner_third_from_products();

}  // namespace boxlab
