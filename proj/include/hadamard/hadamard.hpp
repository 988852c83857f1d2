// Copyright 2026 The hadamard-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HADAMARD_HADAMARD_HPP
#define HADAMARD_HADAMARD_HPP

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/geometry/certificate.hpp"
#include "hadamard/geometry/hadamard.hpp"
#include "hadamard/geometry/presentation.hpp"
#include "hadamard/geometry/sampling.hpp"
#include "hadamard/geometry/secant.hpp"
#include "hadamard/geometry/segre.hpp"
#include "hadamard/geometry/singular.hpp"
#include "hadamard/groebner.hpp"
#include "hadamard/ideal.hpp"
#include "hadamard/invariants.hpp"
#include "hadamard/linalg.hpp"
#include "hadamard/monomial.hpp"
#include "hadamard/parse.hpp"
#include "hadamard/polynomial.hpp"
#include "hadamard/ring.hpp"

#endif  // HADAMARD_HADAMARD_HPP
