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

// The Dobkin-Snyder rotating-pointer heuristic for the largest inscribed
// quadrilateral. It is not exact; see paper_repro.hpp for an input on which it
// misses the optimum from every root.

#ifndef KGON_HEURISTIC_HPP_
#define KGON_HEURISTIC_HPP_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

// The published pseudocode and its accompanying prose disagree on control
// flow, so both readings are implemented.
enum class DsVariant {
  // Loops as printed: non-strict comparisons, the c and b loops nested inside
  // the body of the d loop.
  kLiteral,
  // Loops as described in words: advance d while the area strictly grows; then
  // advance c once if that strictly grows the area and retry d; then advance b
  // once if that strictly grows the area and retry d and c.
  kProse,
};

std::string_view DsVariantName(DsVariant variant);
// Accepts "literal" or "prose"; throws kInvalidInput otherwise.
DsVariant ParseDsVariant(std::string_view name);

enum class TraceAction { kAdvanceA, kAdvanceB, kAdvanceC, kAdvanceD, kRecord };

std::string_view TraceActionName(TraceAction action);

// Pointers are unrolled positions: they only increase over a run, and the
// vertex is position mod n. Within a run a < b < c < d < a + n always holds.
struct Pointers {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;

  friend bool operator==(const Pointers&, const Pointers&) = default;
};

struct TraceStep {
  TraceAction action;
  Pointers at;      // pointer positions after the action
  TwiceArea area;   // area of abcd after the action
};

struct AdvanceCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;

  std::size_t total() const { return a + b + c + d; }
};

struct DsRun {
  std::size_t root = 0;
  DsVariant variant = DsVariant::kLiteral;
  Pointers start;
  TwiceArea start_area;
  IndexTuple best;
  TwiceArea best_area;
  std::vector<TraceStep> trace;
  // Moves made by the b, c and d loops, plus one per position of a.
  AdvanceCounts advances;
  // b, c, d pushed forward because a (or the pointer before them) landed on
  // them; these ride along with an advance_a trace step.
  AdvanceCounts cascades;
};

// Runs the heuristic from one root. Errors: kTooFewVertices (n < 4),
// kOutOfRange (root >= n).
DsRun RunHeuristic(const ConvexPolygon& polygon, std::size_t root, DsVariant variant);

struct DsAllRoots {
  std::vector<DsRun> runs;  // runs[r] started at root r
  Solution best;            // best over roots, ties to the smaller tuple
};

// Runs every root, in parallel where allowed; the result does not depend on
// the worker count.
DsAllRoots RunHeuristicAllRoots(const ConvexPolygon& polygon, DsVariant variant);

}  // namespace kgon

#endif  // KGON_HEURISTIC_HPP_
