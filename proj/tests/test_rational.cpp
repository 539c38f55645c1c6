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

#include "boxlab/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using boxlab::Rational;
using boxlab::RationalError;

TEST(Rational, parse_and_print) {
  EXPECT_EQ(Rational::parse("1/3").str(), "1/3");
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("+5").str(), "5");
  EXPECT_EQ(Rational::parse("0").str(), "0");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
}

TEST(Rational, rejects_non_rationals) {
  for (const char* bad : {"0.5", "1e3", "", "/", "1/", "/2", "1/-2", "a", "1 /2", "0x10", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), RationalError) << bad;
  }
  EXPECT_THROW(Rational::parse("1/0"), RationalError);
  EXPECT_THROW(Rational(1, 0), RationalError);
}

TEST(Rational, division_by_zero) {
  Rational a(1, 2);
  EXPECT_THROW(a / Rational(0), RationalError);
  EXPECT_EQ(a / Rational(1, 4), Rational(2));
}

TEST(Rational, canonical_form) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, Rational(-3, 4));
}

TEST(Rational, field_axioms_random) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const Rational a(d(rng), den(rng)), b(d(rng), den(rng)), c(d(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(a < b, (a - b).sign() < 0);
  }
}

TEST(Rational, ordering_and_abs) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(abs(Rational(-2, 5)), Rational(2, 5));
  EXPECT_EQ(Rational(-2, 5).sign(), -1);
}
