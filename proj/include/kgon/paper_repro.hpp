// Copyright 2026 The kgon Authors
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

// The 16-vertex counterexample on which the quadrilateral heuristic misses
// the optimum from every root, and a checker for that claim.

#ifndef KGON_PAPER_REPRO_HPP_
#define KGON_PAPER_REPRO_HPP_

#include <cstddef>
#include <vector>

#include "kgon/geometry.hpp"
#include "kgon/heuristic.hpp"

namespace kgon {

// Vertices a_1 .. a_16, stored 0-based: position i is a_{i+1}.
ConvexPolygon PaperPolygon();

struct VariantVerdict {
  DsVariant variant;
  std::vector<DsRun> runs;  // one per root
  Solution best;
  // Every root's best area is strictly below the optimum.
  bool confirmed = false;
};

struct ReproReport {
  ConvexPolygon polygon;
  Solution optimal;
  TwiceArea reported_area;  // twice-area of a_1 a_4 a_8 a_12, i.e. (0,3,7,11)
  std::vector<VariantVerdict> verdicts;

  bool confirmed_any() const;
};

// Solves the polygon with all three exact solvers and runs every root of each
// requested variant. Errors: kSolverDisagreement if the exact solvers differ
// or do not return (3,7,11,15).
ReproReport VerifyCounterexample(
    const std::vector<DsVariant>& variants = {DsVariant::kLiteral, DsVariant::kProse});

}  // namespace kgon

#endif  // KGON_PAPER_REPRO_HPP_
