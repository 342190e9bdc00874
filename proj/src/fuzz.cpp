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

#include "kgon/fuzz.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "kgon/exact.hpp"
#include "kgon/parallel.hpp"

namespace kgon {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix64(seed ^ Mix64(index + 0x632be59bd9b4e019ULL));
}

namespace {

// std::mt19937_64 is specified bit for bit; the standard distributions are
// not, so draws and shuffles are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      const std::uint64_t x = engine_();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
      if (static_cast<std::uint64_t>(m) >= limit) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  Coord Between(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool Coin() { return (engine_() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Signed steps of a closed walk along one axis: sorted samples, the extremes
// joined by two monotone chains.
std::vector<Coord> AxisSteps(Rng& rng, std::size_t n, Coord bound) {
  std::vector<Coord> values(n);
  for (Coord& v : values) v = rng.Between(0, bound);
  std::sort(values.begin(), values.end());
  std::vector<Coord> steps;
  steps.reserve(n);
  Coord last_up = values.front();
  Coord last_down = values.front();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (rng.Coin()) {
      steps.push_back(values[i] - last_up);
      last_up = values[i];
    } else {
      steps.push_back(last_down - values[i]);
      last_down = values[i];
    }
  }
  steps.push_back(values.back() - last_up);
  steps.push_back(last_down - values.back());
  return steps;
}

bool UpperHalf(const Point2& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool AngleLess(const Point2& u, const Point2& v) {
  const bool hu = UpperHalf(u);
  const bool hv = UpperHalf(v);
  if (hu != hv) return hu;
  return Orientation({0, 0}, u, v) > 0;
}

bool SameDirection(const Point2& u, const Point2& v) {
  return Orientation({0, 0}, u, v) == 0 &&
         static_cast<Wide>(u.x) * v.x + static_cast<Wide>(u.y) * v.y > 0;
}

std::optional<std::vector<Point2>> TryRandomConvex(std::size_t n, Coord bound,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Coord> xs = AxisSteps(rng, n, bound);
  std::vector<Coord> ys = AxisSteps(rng, n, bound);
  rng.Shuffle(ys);

  std::vector<Point2> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] != 0 || ys[i] != 0) edges.push_back({xs[i], ys[i]});
  }
  std::sort(edges.begin(), edges.end(), AngleLess);

  std::vector<Point2> merged;
  for (const Point2& e : edges) {
    if (!merged.empty() && SameDirection(merged.back(), e)) {
      merged.back().x += e.x;
      merged.back().y += e.y;
    } else {
      merged.push_back(e);
    }
  }
  if (merged.size() != n) return std::nullopt;

  std::vector<Point2> vertices;
  vertices.reserve(n);
  Point2 at{0, 0};
  for (const Point2& e : merged) {
    vertices.push_back(at);
    at.x += e.x;
    at.y += e.y;
  }
  Coord min_x = vertices.front().x;
  Coord min_y = vertices.front().y;
  for (const Point2& v : vertices) {
    min_x = std::min(min_x, v.x);
    min_y = std::min(min_y, v.y);
  }
  for (Point2& v : vertices) {
    v.x -= min_x;
    v.y -= min_y;
  }
  return vertices;
}

}  // namespace

ConvexPolygon RandomConvex(std::size_t n, Coord bound, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kInvalidInput, "random_convex needs n >= 3");
  if (bound < static_cast<Coord>(n) || bound > kMaxCoord / 2) {
    throw Error(ErrorCode::kInvalidInput, "bound must be in [n, 2^30), got " +
                                              std::to_string(bound));
  }
  std::uint64_t attempt_seed = seed;
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    if (auto vertices = TryRandomConvex(n, bound, attempt_seed)) {
      return MakePolygon(*vertices);
    }
    attempt_seed = Mix64(attempt_seed);
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no strictly convex " + std::to_string(n) + "-gon found within bound " +
                  std::to_string(bound));
}

void ValidateConfig(const FuzzConfig& config) {
  if (config.n_min < 4 || config.n_min > config.n_max) {
    throw Error(ErrorCode::kInvalidInput, "need 4 <= n_min <= n_max");
  }
  if (config.k != 4) {
    throw Error(ErrorCode::kInvalidK, "the heuristic comparison is defined for k = 4 only");
  }
  if (config.bound < static_cast<Coord>(config.n_max) || config.bound > kMaxCoord / 2) {
    throw Error(ErrorCode::kInvalidInput, "bound must be in [n_max, 2^30)");
  }
  if (config.variants.empty()) {
    throw Error(ErrorCode::kInvalidInput, "at least one variant is required");
  }
}

bool TrialRecord::mismatch() const {
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [](const VariantOutcome& o) { return o.gap > TwiceArea(0); });
}

FuzzReport RunCampaign(const FuzzConfig& config) {
  ValidateConfig(config);
  FuzzReport report;
  report.config = config;
  report.trials.resize(config.trials);

  ParallelFor(config.trials, [&](std::size_t t) {
    TrialRecord& record = report.trials[t];
    record.trial = t;
    record.seed = DeriveSeed(config.seed, t);
    std::optional<ConvexPolygon> polygon;
    if (t < config.injected.size()) {
      record.injected = true;
      polygon = config.injected[t];
    } else {
      const std::size_t span = config.n_max - config.n_min + 1;
      record.n = config.n_min + static_cast<std::size_t>(Mix64(record.seed) % span);
      try {
        polygon = RandomConvex(record.n, config.bound, record.seed);
      } catch (const Error& e) {
        record.skipped = e.what();
        return;
      }
    }
    record.n = polygon->size();
    record.polygon = polygon->vertices();
    record.exact = SweepQuad(*polygon);
    for (DsVariant variant : config.variants) {
      const Solution heuristic = RunHeuristicAllRoots(*polygon, variant).best;
      record.outcomes.push_back({variant, heuristic, record.exact->area - heuristic.area});
    }
  });

  report.mismatch_count.assign(config.variants.size(), 0);
  for (const TrialRecord& record : report.trials) {
    if (record.skipped) {
      ++report.skipped;
      continue;
    }
    if (record.mismatch()) report.mismatches.push_back(record.trial);
    for (std::size_t v = 0; v < record.outcomes.size(); ++v) {
      if (record.outcomes[v].gap > TwiceArea(0)) ++report.mismatch_count[v];
    }
  }
  return report;
}

bool HeuristicFails(const ConvexPolygon& polygon, DsVariant variant) {
  return RunHeuristicAllRoots(polygon, variant).best.area < SweepQuad(polygon).area;
}

ConvexPolygon Shrink(const ConvexPolygon& polygon, DsVariant variant) {
  if (polygon.size() < 4 || !HeuristicFails(polygon, variant)) {
    throw Error(ErrorCode::kNotACounterexample,
                "the heuristic finds the optimum on this polygon");
  }
  ConvexPolygon current = polygon;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size() && current.size() > 5;) {
      std::vector<Point2> rest = current.vertices();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      std::optional<ConvexPolygon> candidate;
      try {
        candidate = MakePolygon(rest);
      } catch (const Error&) {
        ++i;
        continue;
      }
      if (HeuristicFails(*candidate, variant)) {
        current = std::move(*candidate);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return current;
}

}  // namespace kgon
