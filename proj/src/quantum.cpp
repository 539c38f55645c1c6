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

#include "boxlab/quantum.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <vector>

namespace boxlab {

namespace {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

M2 pauli_x() {
  M2 m;
  m << 0, 1, 1, 0;
  return m;
}

M2 pauli_z() {
  M2 m;
  m << 1, 0, 0, -1;
  return m;
}

CMatrix4 kron(const M2& a, const M2& b) { return Eigen::kroneckerProduct(a, b).eval(); }

CMatrix4 pure(const CVector4& v) { return v * v.adjoint(); }

CVector4 ket2(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) { return Eigen::kroneckerProduct(a, b).eval(); }

double max_abs(const CMatrix4& m) { return m.cwiseAbs().maxCoeff(); }

std::string normalize_name(std::string_view name) {
  std::string s(name);
  for (char& c : s) {
    if (c == '-') c = '_';
  }
  return s;
}

}  // namespace

StateFamily parse_state_family(std::string_view name) {
  const std::string s = normalize_name(name);
  if (s == "max_entangled") return StateFamily::MaxEntangled;
  if (s == "werner") return StateFamily::Werner;
  if (s == "cc") return StateFamily::CC;
  if (s == "rank2") return StateFamily::Rank2;
  if (s == "rank3_rho") return StateFamily::Rank3Rho;
  if (s == "rank3_sigma") return StateFamily::Rank3Sigma;
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

std::string to_string(StateFamily f) {
  switch (f) {
    case StateFamily::MaxEntangled: return "max_entangled";
    case StateFamily::Werner: return "werner";
    case StateFamily::CC: return "cc";
    case StateFamily::Rank2: return "rank2";
    case StateFamily::Rank3Rho: return "rank3_rho";
    case StateFamily::Rank3Sigma: return "rank3_sigma";
  }
  return "?";
}

CVector4 psi_me() {
  CVector4 v = CVector4::Zero();
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

CMatrix4 make_state(StateFamily family, double w) {
  const Eigen::Vector2cd zero(1, 0), one(0, 1);
  const Eigen::Vector2cd plus = (zero + one) / std::numbers::sqrt2;
  const Eigen::Vector2cd minus = (zero - one) / std::numbers::sqrt2;
  const Eigen::Vector2cd plus_y = (zero + C(0, 1) * one) / std::numbers::sqrt2;
  CMatrix4 rho;
  switch (family) {
    case StateFamily::MaxEntangled:
      rho = pure(psi_me());
      break;
    case StateFamily::Werner:
      if (!(w >= 0.0 && w <= 1.0)) throw ParameterOutOfRange("Werner parameter must lie in [0, 1]");
      rho = w * pure(psi_me()) + (1.0 - w) * CMatrix4::Identity() / 4.0;
      break;
    case StateFamily::CC:
      rho = (pure(ket2(zero, zero)) + pure(ket2(one, one))) / 2.0;
      break;
    case StateFamily::Rank2:
      rho = (pure(ket2(zero, zero)) + pure(ket2(plus, plus))) / 2.0;
      break;
    case StateFamily::Rank3Rho:
      rho = (pure(ket2(zero, zero)) + pure(ket2(plus, plus)) + pure(ket2(one, one)) + pure(ket2(minus, minus))) / 4.0;
      break;
    case StateFamily::Rank3Sigma:
      rho = (pure(ket2(zero, zero)) + pure(ket2(plus, plus)) + pure(ket2(plus_y, plus_y))) / 3.0;
      break;
  }
  check_density(rho);
  return rho;
}

void check_density(const CMatrix4& rho) {
  if (max_abs(rho - rho.adjoint()) > kHermitianTol) throw InvalidMatrix("density matrix is not Hermitian");
  if (std::abs(rho.trace() - C(1, 0)) > kTraceTol) throw InvalidMatrix("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix4> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigenTol) throw InvalidMatrix("density matrix has a negative eigenvalue");
}

void check_observable(const CMatrix4& o) {
  if (max_abs(o - o.adjoint()) > kHermitianTol) throw InvalidMatrix("observable is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix4> es(o, Eigen::EigenvaluesOnly);
  for (double ev : es.eigenvalues()) {
    if (std::abs(std::abs(ev) - 1.0) > kEigenTol) throw InvalidMatrix("observable spectrum is not within {+1, -1}");
  }
}

ObservableSetName parse_observable_set(std::string_view name) {
  if (name == "peres") return ObservableSetName::Peres;
  if (name == "product") return ObservableSetName::Product;
  if (name == "rotated") return ObservableSetName::Rotated;
  throw std::invalid_argument("unknown observable set '" + std::string(name) + "'");
}

std::string to_string(ObservableSetName s) {
  switch (s) {
    case ObservableSetName::Peres: return "peres";
    case ObservableSetName::Product: return "product";
    case ObservableSetName::Rotated: return "rotated";
  }
  return "?";
}

ObservableSet make_observables(ObservableSetName name) {
  const M2 id = M2::Identity();
  M2 z = pauli_z(), x = pauli_x();
  if (name == ObservableSetName::Rotated) {
    const M2 p = (pauli_z() + pauli_x()) / std::numbers::sqrt2;
    const M2 m = (pauli_z() - pauli_x()) / std::numbers::sqrt2;
    z = p;
    x = m;
  }
  ObservableSet s;
  auto set = [&](Observable o, const CMatrix4& m) { s.ops[static_cast<int>(o)] = m; };
  set(Observable::A0, kron(z, id));
  set(Observable::B0, kron(id, z));
  set(Observable::B1, kron(id, x));
  set(Observable::A1, kron(x, id));
  if (name == ObservableSetName::Product) {
    set(Observable::D, kron(id, x));
    set(Observable::E, kron(x, id));
  } else {
    set(Observable::D, kron(z, x));
    set(Observable::E, kron(x, z));
  }
  check_commutation(s);
  return s;
}

void check_commutation(const ObservableSet& obs) {
  for (ContextId c : kAllContexts) {
    const auto members = context_observables(c);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const CMatrix4& a = obs[members[i]];
        const CMatrix4& b = obs[members[j]];
        if (max_abs(a * b - b * a) >= kCommuteTol) throw ContextNotCommuting(c);
      }
    }
  }
}

RawBox box_from_state(const CMatrix4& rho, const ObservableSet& obs) {
  check_density(rho);
  for (const auto& o : obs.ops) check_observable(o);
  check_commutation(obs);

  RawBox out;
  for (ContextId c : kAllContexts) {
    const auto members = context_observables(c);
    const std::size_t ci = static_cast<std::size_t>(c);
    double total = 0.0;
    for (std::size_t k = 0; k < kContextSize[ci]; ++k) {
      const std::vector<int> bits = outcome_bits(c, k);
      CMatrix4 proj = CMatrix4::Identity();
      for (std::size_t m = 0; m < members.size(); ++m) {
        const double sign = bits[m] == 0 ? 1.0 : -1.0;
        proj = proj * ((CMatrix4::Identity() + sign * obs[members[m]]) / 2.0);
      }
      double p = (rho * proj).trace().real();
      if (p < -kProbabilityTol) {
        throw NegativeProbability("context " + to_string(c) + " outcome " + std::to_string(k) + " has probability " +
                                  std::to_string(p));
      }
      p = std::clamp(p, 0.0, 1.0);
      out.p[kContextOffset[ci] + k] = p;
      total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTol) {
      throw NegativeProbability("context " + to_string(c) + " probabilities sum to " + std::to_string(total));
    }
  }

  const auto product_rule = [&](ContextId c) {
    double off = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
      const std::vector<int> b = outcome_bits(c, k);
      if ((b[0] ^ b[1]) != b[2]) off += out.p[kContextOffset[static_cast<int>(c)] + k];
    }
    return off < kProbabilityTol;
  };
  out.d_is_product = max_abs(obs[Observable::D] - obs[Observable::A0] * obs[Observable::B1]) < kHermitianTol;
  out.e_is_product = max_abs(obs[Observable::E] - obs[Observable::A1] * obs[Observable::B0]) < kHermitianTol;
  out.c1_follows_product_rule = product_rule(ContextId::C1);
  out.c2_follows_product_rule = product_rule(ContextId::C2);
  return out;
}

Rational best_rational(double x, long max_den) {
  if (max_den < 1) throw std::invalid_argument("max denominator must be at least 1");
  if (!std::isfinite(x)) throw NoExactRationalization("non-finite probability");
  const mpq_class exact(x);
  if (exact.get_den() <= max_den) return Rational(exact);
  // Continued-fraction convergents, then the best semiconvergent.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  const mpz_class bound = max_den;
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > bound) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(bound - q0).get_mpz_t(), q1.get_mpz_t());
  const mpq_class semi(p0 + k * p1, q0 + k * q1);
  const mpq_class conv(p1, q1);
  mpq_class e_semi = semi - exact, e_conv = conv - exact;
  if (abs(e_conv) <= abs(e_semi)) return Rational(conv);
  return Rational(semi);
}

Box rationalize_box(std::span<const double> raw, long max_den, double tol, std::string label) {
  if (raw.size() != kBoxSize) throw NoExactRationalization("raw box must have 28 entries");
  for (ContextId c : kAllContexts) {
    const std::size_t ci = static_cast<std::size_t>(c);
    double total = 0.0;
    for (std::size_t k = 0; k < kContextSize[ci]; ++k) total += raw[kContextOffset[ci] + k];
    if (std::abs(total - 1.0) > tol) {
      throw NoExactRationalization("context " + to_string(c) + " sums to " + std::to_string(total));
    }
  }
  std::vector<Rational> flat(kBoxSize);
  for (std::size_t i = 0; i < kBoxSize; ++i) {
    flat[i] = best_rational(raw[i], max_den);
    const double err = std::abs(flat[i].to_double() - raw[i]);
    if (!(err < tol)) {
      throw NoExactRationalization("entry " + std::to_string(i) + " = " + std::to_string(raw[i]) +
                                   " has no fraction with denominator <= " + std::to_string(max_den) +
                                   " within tolerance");
    }
  }
  try {
    return validate_box(flat, std::move(label));
  } catch (const ValidationError& e) {
    throw NoExactRationalization(std::string("rounded box is not exactly valid: ") + e.what());
  }
}

PeresIdentities verify_peres_identities(const ObservableSet& obs, const CVector4& psi) {
  const auto close = [](const CVector4& a, const CVector4& b) { return (a - b).norm() < kHermitianTol; };
  PeresIdentities r;
  r.a0b0 = close(obs[Observable::A0] * obs[Observable::B0] * psi, psi);
  r.a1b1 = close(obs[Observable::A1] * obs[Observable::B1] * psi, psi);
  r.de = close(obs[Observable::D] * obs[Observable::E] * psi, -psi);
  r.d_is_a0b1 = max_abs(obs[Observable::D] - obs[Observable::A0] * obs[Observable::B1]) < kHermitianTol;
  r.e_is_a1b0 = max_abs(obs[Observable::E] - obs[Observable::A1] * obs[Observable::B0]) < kHermitianTol;
  return r;
}

Eigen::Vector2cd PureQubit::ket() const {
  return Eigen::Vector2cd(std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0));
}

Eigen::Matrix2cd PureQubit::projector() const {
  const Eigen::Vector2cd k = ket();
  return k * k.adjoint();
}

std::array<PureQubit, 4> tetrahedral_states() {
  const double t = std::acos(-1.0 / 3.0);
  const double pi = std::numbers::pi;
  return {PureQubit{0.0, 0.0}, PureQubit{t, 0.0}, PureQubit{t, 2.0 * pi / 3.0}, PureQubit{t, 4.0 * pi / 3.0}};
}

CMatrix4 werner_third_from_products() {
  // Pairing Z_k with Z_k itself gives the Werner state's partial transpose
  // (off by 1/6 in the |00><11| corner); the conjugate is what matches.
  CMatrix4 rho = CMatrix4::Zero();
  for (const PureQubit& q : tetrahedral_states()) {
    const M2 z = q.projector();
    rho += kron(z, z.conjugate()) / 4.0;
  }
  return rho;
}

}  // namespace boxlab
