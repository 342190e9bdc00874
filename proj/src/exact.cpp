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

#include "kgon/exact.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kgon/parallel.hpp"

namespace kgon {

namespace {

void RequireK(const ConvexPolygon& polygon, std::size_t k) {
  if (k < 3 || k > polygon.size()) {
    throw Error(ErrorCode::kInvalidK, "k must be in [3, " + std::to_string(polygon.size()) +
                                          "], got " + std::to_string(k));
  }
}

// Keeps the best of a stream of candidates under the shared tie-break rule.
class Champion {
 public:
  void Offer(const Solution& candidate) {
    if (!best_ || Better(candidate, *best_)) best_ = candidate;
  }
  bool has_value() const { return best_.has_value(); }
  const Solution& get() const { return *best_; }

 private:
  std::optional<Solution> best_;
};

}  // namespace

std::uint64_t BinomialSaturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

Solution BruteForce(const ConvexPolygon& polygon, std::size_t k) {
  RequireK(polygon, k);
  const std::size_t n = polygon.size();
  if (BinomialSaturating(n, k) > kBruteForceLimit) {
    throw Error(ErrorCode::kTooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) +
                                          ") exceeds the brute-force limit");
  }

  // Lexicographic enumeration: keeping strictly larger areas only leaves the
  // smallest tuple among the maxima.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> best = idx;
  TwiceArea best_area = polygon.twice_area_of(idx);
  while (true) {
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    const TwiceArea area = polygon.twice_area_of(idx);
    if (area > best_area) {
      best_area = area;
      best = idx;
    }
  }
  return {Canonicalize(best, n), best_area};
}

Solution SweepQuad(const ConvexPolygon& polygon) {
  const std::size_t n = polygon.size();
  if (n < 4) {
    throw Error(ErrorCode::kTooFewVertices,
                "sweep_quad needs n >= 4, got " + std::to_string(n));
  }
  auto tri = [&](std::size_t a, std::size_t b, std::size_t c) {
    return Orientation(polygon.at_unrolled(a), polygon.at_unrolled(b), polygon.at_unrolled(c));
  };

  // Diagonal (i, j) with i < j < n; the near apex lies in (i, j), the far
  // apex in (j, i + n). Each quadrilateral is reached through its diagonal
  // that starts at its smallest index.
  std::vector<Solution> per_start(n);
  std::vector<bool> has(n, false);
  ParallelFor(n, [&](std::size_t i) {
    Champion champion;
    std::size_t near = i + 1;
    std::size_t far = i + 3;
    for (std::size_t j = i + 2; j < n && j + 2 <= i + n; ++j) {
      while (near + 1 < j && tri(i, near + 1, j) >= tri(i, near, j)) ++near;
      far = std::max(far, j + 1);
      while (far + 1 < i + n && tri(j, far + 1, i) >= tri(j, far, i)) ++far;

      // Each pointer sits on the last maximizer of its side; a plateau adds
      // the position just before it.
      std::size_t near_options[2] = {near, near};
      std::size_t far_options[2] = {far, far};
      if (near - 1 > i && tri(i, near - 1, j) == tri(i, near, j)) near_options[1] = near - 1;
      if (far - 1 > j && tri(j, far - 1, i) == tri(j, far, i)) far_options[1] = far - 1;

      const TwiceArea area(tri(i, near, j) + tri(j, far, i));
      for (std::size_t p : near_options) {
        for (std::size_t q : far_options) {
          const std::size_t quad[] = {i, p, j, q % n};
          champion.Offer({Canonicalize(quad, n), area});
        }
      }
    }
    if (champion.has_value()) {
      per_start[i] = champion.get();
      has[i] = true;
    }
  });

  Champion champion;
  for (std::size_t i = 0; i < n; ++i) {
    if (has[i]) champion.Offer(per_start[i]);
  }
  return champion.get();
}

Solution DpKgon(const ConvexPolygon& polygon, std::size_t k) {
  RequireK(polygon, k);
  const std::size_t n = polygon.size();

  // The root is the smallest index of the tuple, so every k-gon is counted
  // once and its canonical form is the root followed by the path. For a root
  // r with m = n - r usable vertices (relative positions 0..m-1):
  //   tail[t][i] = max twice-area of the fan r, i, ..., (t vertices from i on)
  //   tail[1][i] = 0
  //   tail[t][i] = max_{j > i} tri(0, i, j) + tail[t-1][j]
  // Choosing the smallest optimal successor at every step reconstructs the
  // lexicographically smallest optimal tuple.
  std::vector<std::optional<Solution>> per_root(n);
  ParallelFor(n - k + 1, [&](std::size_t r) {
    const std::size_t m = n - r;
    auto tri = [&](std::size_t i, std::size_t j) {
      return Orientation(polygon[r], polygon[r + i], polygon[r + j]);
    };
    constexpr Wide kUnset = std::numeric_limits<Wide>::min();
    std::vector<std::vector<Wide>> tail(k, std::vector<Wide>(m, kUnset));
    for (std::size_t i = 1; i < m; ++i) tail[1][i] = 0;
    for (std::size_t t = 2; t < k; ++t) {
      for (std::size_t i = 1; i + t <= m; ++i) {
        Wide best = kUnset;
        for (std::size_t j = i + 1; j < m; ++j) {
          if (tail[t - 1][j] == kUnset) continue;
          best = std::max(best, tri(i, j) + tail[t - 1][j]);
        }
        tail[t][i] = best;
      }
    }

    Wide total = kUnset;
    for (std::size_t i = 1; i < m; ++i) total = std::max(total, tail[k - 1][i]);
    if (total == kUnset) return;

    std::vector<std::size_t> tuple = {r};
    std::size_t t = k - 1;
    std::size_t at = 1;
    while (tail[t][at] != total) ++at;
    tuple.push_back(r + at);
    Wide remaining = total;
    while (t > 1) {
      std::size_t next = at + 1;
      while (tail[t - 1][next] == kUnset || tri(at, next) + tail[t - 1][next] != remaining) ++next;
      remaining -= tri(at, next);
      at = next;
      --t;
      tuple.push_back(r + at);
    }
    per_root[r] = Solution{Canonicalize(tuple, n), TwiceArea(total)};
  });

  Champion champion;
  for (const auto& s : per_root) {
    if (s) champion.Offer(*s);
  }
  return champion.get();
}

std::string_view ExactAlgoName(ExactAlgo algo) {
  switch (algo) {
    case ExactAlgo::kBrute: return "brute";
    case ExactAlgo::kSweep: return "sweep";
    case ExactAlgo::kDp: return "dp";
  }
  return "unknown";
}

ExactAlgo ParseExactAlgo(std::string_view name) {
  if (name == "brute") return ExactAlgo::kBrute;
  if (name == "sweep") return ExactAlgo::kSweep;
  if (name == "dp") return ExactAlgo::kDp;
  throw Error(ErrorCode::kInvalidInput, "unknown algorithm '" + std::string(name) + "'");
}

Solution Solve(const ConvexPolygon& polygon, std::size_t k, ExactAlgo algo) {
  switch (algo) {
    case ExactAlgo::kBrute: return BruteForce(polygon, k);
    case ExactAlgo::kSweep:
      if (k != 4) throw Error(ErrorCode::kInvalidK, "the sweep solver only handles k = 4");
      return SweepQuad(polygon);
    case ExactAlgo::kDp: return DpKgon(polygon, k);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown algorithm");
}

}  // namespace kgon
