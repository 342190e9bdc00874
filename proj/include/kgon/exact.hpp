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

// Exact maximum-area inscribed k-gons with vertices on polygon vertices.
//
// Three independent solvers share one tie-break rule: among optimal tuples
// the lexicographically smallest canonical IndexTuple wins. Their Solutions
// can therefore be compared with plain equality.

#ifndef KGON_EXACT_HPP_
#define KGON_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "kgon/geometry.hpp"

namespace kgon {

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

// C(n, k), saturating at UINT64_MAX.
std::uint64_t BinomialSaturating(std::uint64_t n, std::uint64_t k);

// Enumerates every k-subset. Errors: kInvalidK unless 3 <= k <= n; kTooLarge
// when C(n, k) exceeds kBruteForceLimit.
Solution BruteForce(const ConvexPolygon& polygon, std::size_t k);

// k = 4 in O(n^2): every quadrilateral splits along a diagonal into the
// largest triangle on each side, and for a fixed first endpoint the apex on
// either side only moves forward as the second endpoint advances.
// Errors: kTooFewVertices when n < 4.
Solution SweepQuad(const ConvexPolygon& polygon);

// Any k in O(k n^3) by dynamic programming over triangle fans from each root.
// Errors: kInvalidK unless 3 <= k <= n.
Solution DpKgon(const ConvexPolygon& polygon, std::size_t k);

enum class ExactAlgo { kBrute, kSweep, kDp };

std::string_view ExactAlgoName(ExactAlgo algo);
ExactAlgo ParseExactAlgo(std::string_view name);

// Dispatches to one of the solvers; kSweep requires k == 4 (kInvalidK).
Solution Solve(const ConvexPolygon& polygon, std::size_t k, ExactAlgo algo);

}  // namespace kgon

#endif  // KGON_EXACT_HPP_
