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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "boxlab/families.hpp"
#include "fixtures.hpp"

using namespace boxlab;

namespace {

constexpr double kTol = 1e-12;

double max_abs(const CMatrix4& m) { return m.cwiseAbs().maxCoeff(); }

int numeric_rank(const CMatrix4& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix4> es(rho);
  int r = 0;
  for (double ev : es.eigenvalues()) r += ev > 1e-9;
  return r;
}

// Outcome probabilities from correlators: for commuting +-1 observables,
// p(s) = 2^-n sum over subsets S of prod_{i in S} s_i <prod_{i in S} O_i>.
std::array<double, kBoxSize> correlator_box(const CMatrix4& rho, const ObservableSet& obs) {
  std::array<double, kBoxSize> p{};
  for (ContextId c : kAllContexts) {
    const auto members = context_observables(c);
    const std::size_t n = members.size();
    for (std::size_t k = 0; k < kContextSize[static_cast<int>(c)]; ++k) {
      const auto bits = outcome_bits(c, k);
      double s = 0.0;
      for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        CMatrix4 prod = CMatrix4::Identity();
        double sign = 1.0;
        for (std::size_t m = n; m-- > 0;) {
          if (!(sub >> m & 1u)) continue;
          prod = prod * obs[members[m]];
          if (bits[m]) sign = -sign;
        }
        s += sign * (rho * prod).trace().real();
      }
      p[kContextOffset[static_cast<int>(c)] + k] = s / static_cast<double>(1u << n);
    }
  }
  return p;
}

Box exact_box(StateFamily f, ObservableSetName o, double w = 1.0) {
  return rationalize_box(box_from_state(make_state(f, w), make_observables(o)).p);
}

}  // namespace

TEST(Quantum, state_limits_and_ranks) {
  const CMatrix4 me = psi_me() * psi_me().adjoint();
  EXPECT_LT(max_abs(make_state(StateFamily::Werner, 1.0) - me), kTol);
  EXPECT_LT(max_abs(make_state(StateFamily::Werner, 0.0) - CMatrix4::Identity() / 4.0), kTol);
  EXPECT_LT(max_abs(make_state(StateFamily::MaxEntangled) - me), kTol);
  EXPECT_NEAR(psi_me().norm(), 1.0, kTol);
  EXPECT_EQ(numeric_rank(make_state(StateFamily::CC)), 2);
  EXPECT_EQ(numeric_rank(make_state(StateFamily::Rank2)), 2);
  EXPECT_EQ(numeric_rank(make_state(StateFamily::Rank3Rho)), 3);
  EXPECT_EQ(numeric_rank(make_state(StateFamily::Rank3Sigma)), 3);
  EXPECT_EQ(numeric_rank(make_state(StateFamily::Werner, 0.5)), 4);
  for (double w : {-0.1, 1.5, std::numeric_limits<double>::quiet_NaN()}) {
    EXPECT_THROW(make_state(StateFamily::Werner, w), ParameterOutOfRange);
  }
}

TEST(Quantum, rank3_sigma_spectrum) {
  Eigen::SelfAdjointEigenSolver<CMatrix4> es(make_state(StateFamily::Rank3Sigma));
  double sum = 0.0;
  for (double ev : es.eigenvalues()) {
    EXPECT_GE(ev, -1e-12);
    sum += ev;
  }
  EXPECT_NEAR(sum, 1.0, kTol);
  EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-12);
}

TEST(Quantum, names) {
  EXPECT_EQ(parse_state_family("rank3-rho"), StateFamily::Rank3Rho);
  EXPECT_EQ(parse_state_family("rank3_sigma"), StateFamily::Rank3Sigma);
  EXPECT_EQ(parse_state_family(to_string(StateFamily::Werner)), StateFamily::Werner);
  EXPECT_THROW(parse_state_family("ghz"), std::invalid_argument);
  EXPECT_EQ(parse_observable_set("rotated"), ObservableSetName::Rotated);
  EXPECT_THROW(parse_observable_set("nope"), std::invalid_argument);
}

TEST(Quantum, density_checks) {
  CMatrix4 m = CMatrix4::Identity() / 4.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(check_density(m), InvalidMatrix);
  EXPECT_THROW(check_density(CMatrix4::Identity() / 2.0), InvalidMatrix);
  CMatrix4 neg = CMatrix4::Zero();
  neg.diagonal() << 0.75, 0.5, -0.25, 0.0;
  EXPECT_THROW(check_density(neg), InvalidMatrix);
  EXPECT_THROW(check_observable(CMatrix4::Identity() * 2.0), InvalidMatrix);
}

TEST(Quantum, observable_sets) {
  for (auto name : {ObservableSetName::Peres, ObservableSetName::Product, ObservableSetName::Rotated}) {
    const ObservableSet s = make_observables(name);
    for (const auto& o : s.ops) {
      EXPECT_NO_THROW(check_observable(o));
      EXPECT_LT(max_abs(o * o - CMatrix4::Identity()), kTol);
    }
  }
  ObservableSet bad = make_observables(ObservableSetName::Peres);
  bad.ops[static_cast<int>(Observable::D)] = bad[Observable::A1];
  try {
    check_commutation(bad);
    FAIL() << "expected ContextNotCommuting";
  } catch (const ContextNotCommuting& e) {
    EXPECT_EQ(e.context(), ContextId::C1);
  }
}

TEST(Quantum, peres_identities) {
  EXPECT_TRUE(verify_peres_identities(make_observables(ObservableSetName::Peres), psi_me()).all());
  const auto prod = verify_peres_identities(make_observables(ObservableSetName::Product), psi_me());
  EXPECT_FALSE(prod.d_is_a0b1);
  EXPECT_FALSE(prod.e_is_a1b0);
  EXPECT_TRUE(prod.a0b0);
  EXPECT_TRUE(prod.a1b1);
}

TEST(Quantum, werner_grid_gives_noisy_peres) {
  for (long n = 0; n <= 12; ++n) {
    const double w = static_cast<double>(n) / 12.0;
    const RawBox raw = box_from_state(make_state(StateFamily::Werner, w), make_observables(ObservableSetName::Peres));
    EXPECT_TRUE(raw.d_is_product && raw.e_is_product);
    EXPECT_TRUE(raw.c1_follows_product_rule && raw.c2_follows_product_rule);
    EXPECT_EQ(rationalize_box(raw.p), noisy_peres(Rational(n, 12))) << n;
  }
  EXPECT_EQ(exact_box(StateFamily::MaxEntangled, ObservableSetName::Peres), peres_box());
}

TEST(Quantum, named_state_boxes) {
  EXPECT_EQ(exact_box(StateFamily::CC, ObservableSetName::Rotated), fixtures::cc_rotated());
  EXPECT_EQ(exact_box(StateFamily::CC, ObservableSetName::Peres), fixtures::cc_peres());
  EXPECT_EQ(exact_box(StateFamily::Rank2, ObservableSetName::Peres), fixtures::rank2());
  EXPECT_EQ(exact_box(StateFamily::Rank3Rho, ObservableSetName::Peres), fixtures::rank3_rho());
  const RawBox prod =
      box_from_state(make_state(StateFamily::MaxEntangled), make_observables(ObservableSetName::Product));
  EXPECT_FALSE(prod.d_is_product);
}

TEST(Quantum, best_rational) {
  EXPECT_EQ(best_rational(0.333333333333, 4096), Rational(1, 3));
  EXPECT_EQ(best_rational(std::numbers::pi, 7), Rational(22, 7));
  EXPECT_EQ(best_rational(std::numbers::pi, 200), Rational(355, 113));
  EXPECT_EQ(best_rational(-0.25, 10), Rational(-1, 4));
  EXPECT_EQ(best_rational(0.0, 10), Rational(0));
  EXPECT_EQ(best_rational(2.0, 1), Rational(2));
}

TEST(QuantumProperty, best_rational_is_nearest_within_bound) {
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng);
    const long max_den = 1 + i % 60;
    const Rational r = best_rational(x, max_den);
    EXPECT_LE(r.denominator(), max_den);
    double best = 1e9;
    for (long q = 1; q <= max_den; ++q) {
      const double p = std::round(x * static_cast<double>(q));
      best = std::min(best, std::abs(x - p / static_cast<double>(q)));
    }
    EXPECT_NEAR(std::abs(x - r.to_double()), best, 1e-15) << x << " " << max_den;
  }
}

TEST(Quantum, rationalize_errors) {
  std::array<double, kBoxSize> raw = box_from_state(make_state(StateFamily::Werner, 1.0 / 3.0),
                                                    make_observables(ObservableSetName::Peres))
                                         .p;
  EXPECT_THROW(rationalize_box(raw, 2), NoExactRationalization);
  EXPECT_NO_THROW(rationalize_box(raw, 4096));
  raw[0] += 0.25;  // exact, but no longer normalized
  raw[1] -= 0.25 - 1.0 / 12.0;
  EXPECT_THROW(rationalize_box(raw), NoExactRationalization);
  raw[0] = 1.0 / std::numbers::pi;
  EXPECT_THROW(rationalize_box(raw, 4096, 1e-12), NoExactRationalization);
}

TEST(Quantum, werner_third_from_tetrahedral_products) {
  EXPECT_LT(max_abs(werner_third_from_products() - make_state(StateFamily::Werner, 1.0 / 3.0)), 1e-10);
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const PureQubit& q : tetrahedral_states()) {
    EXPECT_NEAR(q.ket().norm(), 1.0, kTol);
    sum += q.projector();
  }
  EXPECT_LT((sum - 2.0 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(QuantumProperty, projector_products_match_correlators) {
  for (auto f : {StateFamily::MaxEntangled, StateFamily::Werner, StateFamily::CC, StateFamily::Rank2,
                 StateFamily::Rank3Rho, StateFamily::Rank3Sigma}) {
    for (auto o : {ObservableSetName::Peres, ObservableSetName::Product, ObservableSetName::Rotated}) {
      const CMatrix4 rho = make_state(f, 0.7);
      const ObservableSet obs = make_observables(o);
      const auto want = correlator_box(rho, obs);
      const auto got = box_from_state(rho, obs).p;
      for (std::size_t i = 0; i < kBoxSize; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
    }
  }
}

TEST(QuantumProperty, box_is_linear_in_the_state) {
  std::mt19937 rng(52);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ObservableSet obs = make_observables(ObservableSetName::Rotated);
  for (int i = 0; i < 30; ++i) {
    const double l = u(rng);
    const CMatrix4 a = make_state(StateFamily::Werner, u(rng)), b = make_state(StateFamily::Rank3Sigma);
    const auto pa = box_from_state(a, obs).p, pb = box_from_state(b, obs).p;
    const auto pm = box_from_state(l * a + (1 - l) * b, obs).p;
    for (std::size_t k = 0; k < kBoxSize; ++k) EXPECT_NEAR(pm[k], l * pa[k] + (1 - l) * pb[k], 1e-12);
  }
}

TEST(QuantumProperty, every_named_pair_is_nondisturbing) {
  const auto irrational = [](StateFamily f, ObservableSetName o) {
    // Rotated observables against states with |+> components give
    // (2 +- sqrt2)/8-type entries.
    return o == ObservableSetName::Rotated && (f == StateFamily::Rank2 || f == StateFamily::Rank3Sigma);
  };
  for (auto f : {StateFamily::MaxEntangled, StateFamily::CC, StateFamily::Rank2, StateFamily::Rank3Rho,
                 StateFamily::Rank3Sigma}) {
    for (auto o : {ObservableSetName::Peres, ObservableSetName::Product, ObservableSetName::Rotated}) {
      const RawBox raw = box_from_state(make_state(f), make_observables(o));
      // Single-observable marginals agree across the two hosting contexts.
      for (Observable ob : kAllObservables) {
        const auto [c1, c2] = hosting_contexts(ob);
        double m[2] = {0.0, 0.0};
        for (int side = 0; side < 2; ++side) {
          const ContextId c = side ? c2 : c1;
          const int pos = position_in_context(c, ob);
          for (std::size_t k = 0; k < kContextSize[static_cast<int>(c)]; ++k) {
            if (outcome_bits(c, k)[pos] == 0) m[side] += raw.p[kContextOffset[static_cast<int>(c)] + k];
          }
        }
        EXPECT_NEAR(m[0], m[1], 1e-12);
      }
      if (irrational(f, o)) {
        EXPECT_THROW(rationalize_box(raw.p, 64), NoExactRationalization) << to_string(f) << "/" << to_string(o);
      } else {
        EXPECT_NO_THROW(rationalize_box(raw.p, 64)) << to_string(f) << "/" << to_string(o);
      }
    }
  }
}
