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

#ifndef GAUSSEP_GAUSSEP_HPP_
#define GAUSSEP_GAUSSEP_HPP_

#include "gaussep/errors.hpp"
#include "gaussep/linalg.hpp"
#include "gaussep/symplectic.hpp"
#include "gaussep/standard_form.hpp"
#include "gaussep/criteria.hpp"
#include "gaussep/prep.hpp"
#include "gaussep/dgcz_simon.hpp"
#include "gaussep/states.hpp"

#endif  // GAUSSEP_GAUSSEP_HPP_
