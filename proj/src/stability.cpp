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

#include "kgon/stability.hpp"

#include <string>

#include "kgon/exact.hpp"
#include "kgon/parallel.hpp"

namespace kgon {

std::string_view StrictnessName(Strictness s) {
  return s == Strictness::kWeak ? "weak" : "strict";
}

namespace {

void RequireOnPolygon(const ConvexPolygon& polygon, const IndexTuple& q) {
  for (std::size_t v : q) {
    if (v >= polygon.size()) {
      throw Error(ErrorCode::kInvalidInput, "tuple index " + std::to_string(v) +
                                                " out of range for n=" +
                                                std::to_string(polygon.size()));
    }
  }
}

bool StableUnchecked(const ConvexPolygon& polygon, const IndexTuple& q, std::size_t position,
                     Strictness s) {
  const std::size_t n = polygon.size();
  const std::size_t k = q.size();
  const std::size_t v = q[position];
  const std::size_t u = q[(position + k - 1) % k];
  const std::size_t w = q[(position + 1) % k];

  // Only triangle u v w changes under a move, so compare it against u x w.
  const Wide current = Orientation(polygon[u], polygon[v], polygon[w]);
  for (std::size_t x = (u + 1) % n; x != w; x = (x + 1) % n) {
    if (x == v) continue;
    const Wide moved = Orientation(polygon[u], polygon[x], polygon[w]);
    if (moved > current) return false;
    if (s == Strictness::kStrict && moved == current) return false;
  }
  return true;
}

}  // namespace

bool IsStable(const ConvexPolygon& polygon, const IndexTuple& q, std::size_t position,
              Strictness s) {
  RequireOnPolygon(polygon, q);
  if (position >= q.size()) {
    throw Error(ErrorCode::kOutOfRange, "position " + std::to_string(position) +
                                            " out of range for a " + std::to_string(q.size()) +
                                            "-gon");
  }
  return StableUnchecked(polygon, q, position, s);
}

std::size_t StableCount(const ConvexPolygon& polygon, const IndexTuple& q, Strictness s) {
  RequireOnPolygon(polygon, q);
  std::size_t count = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (StableUnchecked(polygon, q, i, s)) ++count;
  }
  return count;
}

std::vector<IndexTuple> EnumerateStable(const ConvexPolygon& polygon, std::size_t k,
                                        Strictness s) {
  const std::size_t n = polygon.size();
  if (k < 3 || k > n) {
    throw Error(ErrorCode::kInvalidK,
                "k must be in [3, " + std::to_string(n) + "], got " + std::to_string(k));
  }
  if (BinomialSaturating(n, k) > kEnumerateLimit) {
    throw Error(ErrorCode::kTooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) +
                                          ") exceeds the enumeration limit");
  }

  // Shard by smallest index; each shard is already in lexicographic order.
  std::vector<std::vector<IndexTuple>> shards(n - k + 1);
  ParallelFor(shards.size(), [&](std::size_t first) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = first + i;
    while (true) {
      const IndexTuple q = Canonicalize(idx, n);
      if (StableCount(polygon, q, s) == k) shards[first].push_back(q);
      std::size_t i = k;
      while (i > 1 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 1) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  });

  std::vector<IndexTuple> result;
  for (auto& shard : shards) {
    for (auto& q : shard) result.push_back(std::move(q));
  }
  return result;
}

}  // namespace kgon
