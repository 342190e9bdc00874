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

#ifndef KGON_STABILITY_HPP_
#define KGON_STABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

// How ties count when deciding whether a vertex is stable.
enum class Strictness {
  kWeak,    // no admissible move strictly increases the area
  kStrict,  // every admissible move strictly decreases the area
};

std::string_view StrictnessName(Strictness s);

inline constexpr std::uint64_t kEnumerateLimit = 1'000'000;

// A move replaces the vertex at `position` by any other polygon vertex
// strictly between its two neighbours in the tuple. Vacuously stable when no
// such vertex exists. Errors: kOutOfRange for a bad position, kInvalidInput
// when the tuple references vertices outside the polygon.
bool IsStable(const ConvexPolygon& polygon, const IndexTuple& q, std::size_t position,
              Strictness s = Strictness::kWeak);

std::size_t StableCount(const ConvexPolygon& polygon, const IndexTuple& q,
                        Strictness s = Strictness::kWeak);

// All k-stable k-gons in lexicographic order. Errors: kInvalidK; kTooLarge
// when C(n, k) exceeds kEnumerateLimit.
std::vector<IndexTuple> EnumerateStable(const ConvexPolygon& polygon, std::size_t k,
                                        Strictness s = Strictness::kWeak);

}  // namespace kgon

#endif  // KGON_STABILITY_HPP_
