// Copyright 2026 The gaussep Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussep/criteria.hpp"
#include "gaussep/states.hpp"

namespace gaussep {
namespace {

TEST(States, Tmsv) {
  const StandardForm s = tmsv(0.5);
  EXPECT_DOUBLE_EQ(s.a, std::cosh(1.0) / 2);
  EXPECT_DOUBLE_EQ(s.c1, std::sinh(1.0) / 2);
  EXPECT_DOUBLE_EQ(s.c2, -s.c1);
  EXPECT_EQ(tmsv(0.0), (StandardForm{0.5, 0.5, 0.0, 0.0}));
}

TEST(States, ParseKind) {
  EXPECT_EQ(parse_state_kind("separable"), StateKind::separable);
  EXPECT_EQ(parse_state_kind("entangled"), StateKind::entangled);
  EXPECT_EQ(parse_state_kind("boundary"), StateKind::boundary);
  EXPECT_EQ(parse_state_kind("physical"), StateKind::physical);
  EXPECT_FALSE(parse_state_kind("mixed").has_value());
}

TEST(States, RandomFormsHonourTheirKind) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto sep = random_standard_form(rng, StateKind::separable);
    EXPECT_GT(simon_separable(sep).min_margin(), 1e-6);
    const auto ent = random_standard_form(rng, StateKind::entangled);
    EXPECT_LT(simon_separable(ent).min_margin(), -1e-6);
    EXPECT_LT(ent.c1 * ent.c2, 0.0);
    const auto phys = random_standard_form(rng, StateKind::physical);
    EXPECT_GT(min_margin(physicality(phys).margins), 1e-6);
    for (const auto& s : {sep, ent, phys}) {
      EXPECT_GE(s.c1, std::abs(s.c2));
      EXPECT_GE(s.a, 0.5);
      EXPECT_GE(s.b, 0.5);
    }
    const auto edge = random_standard_form(rng, StateKind::boundary);
    EXPECT_TRUE(physicality(edge, 1e-9).physical);
    EXPECT_LE(edge.c2, 0.0);
  }
}

TEST(States, Deterministic) {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 10; ++i)
    EXPECT_EQ(random_standard_form(a, StateKind::entangled), random_standard_form(b, StateKind::entangled));
}

}  // namespace
}  // namespace gaussep
