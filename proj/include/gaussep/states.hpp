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

#ifndef GAUSSEP_STATES_HPP_
#define GAUSSEP_STATES_HPP_

#include <cmath>
#include <optional>
#include <random>
#include <string_view>

#include "gaussep/criteria.hpp"
#include "gaussep/standard_form.hpp"

namespace gaussep {

/// Two-mode squeezed vacuum: a = b = cosh(2r)/2, c1 = -c2 = sinh(2r)/2.
inline StandardForm tmsv(double r) {
  const double ch = 0.5 * std::cosh(2.0 * r), sh = 0.5 * std::sinh(2.0 * r);
  return {ch, ch, sh, -sh};
}

/// Product of thermal states, V = diag(a, a, b, b).
inline StandardForm thermal(double a, double b) { return {a, b, 0.0, 0.0}; }

enum class StateKind { physical, separable, entangled, boundary };

inline std::optional<StateKind> parse_state_kind(std::string_view s) {
  if (s == "physical") return StateKind::physical;
  if (s == "separable") return StateKind::separable;
  if (s == "entangled") return StateKind::entangled;
  if (s == "boundary") return StateKind::boundary;
  return std::nullopt;
}

struct RandomFormOptions {
  double a_max = 3.0;
  double band = 1e-6;  // minimum distance of every deciding margin from zero
};

/// Random standard form with c1 >= |c2|, drawn by rejection for the separable and
/// entangled kinds. Uniform draws are mostly separable, so the physical kind picks one of
/// those two classes with equal odds first. Boundary forms sit exactly on c1^2 = c1sq_bound(a, b, t) with
/// det C <= 0, on the edge of the separable set.
inline StandardForm random_standard_form(std::mt19937_64& rng, StateKind kind, const RandomFormOptions& opt = {}) {
  std::uniform_real_distribution<double> ab(0.5, opt.a_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (kind == StateKind::boundary) {
    const double a = ab(rng), b = ab(rng), t = unit(rng);
    const double c1 = std::sqrt(c1sq_bound(a, b, t));
    return {a, b, c1, -t * c1};
  }
  if (kind == StateKind::physical)
    kind = std::bernoulli_distribution(0.5)(rng) ? StateKind::separable : StateKind::entangled;
  for (;;) {
    StandardForm s;
    s.a = ab(rng);
    s.b = ab(rng);
    s.c1 = std::sqrt(s.a * s.b) * unit(rng);
    s.c2 = s.c1 * (2.0 * unit(rng) - 1.0);
    if (min_margin(physicality(s).margins) <= opt.band) continue;
    const double m = simon_separable(s).min_margin();
    if (std::abs(m) <= opt.band) continue;
    if ((kind == StateKind::separable) == (m > 0.0)) return s;
  }
}

}  // namespace gaussep

#endif  // GAUSSEP_STATES_HPP_
