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

// Random strictly convex lattice polygons and a campaign that compares the
// heuristic against the exact optimum on them.

#ifndef KGON_FUZZ_HPP_
#define KGON_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgon/geometry.hpp"
#include "kgon/heuristic.hpp"

namespace kgon {

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed for trial `index` of a campaign seeded with `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

inline constexpr int kGenerationAttempts = 64;

// Builds n integer edge vectors summing to zero (two monotone chains per
// axis), merges parallel ones, sorts them by angle and prefix-sums them. The
// result is strictly convex, counter-clockwise, and lies in [0, 2*bound]^2.
// Attempts that lose directions to merging retry with the next derived seed.
// Pure in (n, bound, seed). Errors: kInvalidInput (n < 3, bound < n or beyond
// the coordinate range), kGenerationFailed after kGenerationAttempts.
ConvexPolygon RandomConvex(std::size_t n, Coord bound, std::uint64_t seed);

struct FuzzConfig {
  std::size_t n_min = 5;
  std::size_t n_max = 12;
  std::size_t k = 4;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Coord bound = 1000;
  std::vector<DsVariant> variants = {DsVariant::kLiteral, DsVariant::kProse};
  // Test hook: injected[i] replaces the generated polygon of trial i.
  std::vector<ConvexPolygon> injected;
};

// Errors: kInvalidInput for an inconsistent config, kInvalidK unless k == 4.
void ValidateConfig(const FuzzConfig& config);

struct VariantOutcome {
  DsVariant variant;
  Solution heuristic;
  TwiceArea gap;  // exact - heuristic, never negative
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  bool injected = false;
  // Set when generation failed; the remaining fields are then empty.
  std::optional<std::string> skipped;
  std::vector<Point2> polygon;
  std::optional<Solution> exact;
  std::vector<VariantOutcome> outcomes;

  bool mismatch() const;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<TrialRecord> trials;
  std::vector<std::size_t> mismatches;  // trial indices with a positive gap
  std::size_t skipped = 0;
  // mismatch_count[v] counts the mismatching trials of config.variants[v].
  std::vector<std::size_t> mismatch_count;
};

// Trials may run concurrently; the report is in trial order and depends only
// on the config.
FuzzReport RunCampaign(const FuzzConfig& config);

// True when the heuristic's best over all roots is below the exact optimum.
bool HeuristicFails(const ConvexPolygon& polygon, DsVariant variant);

// Greedy vertex deletion in index order, keeping a deletion only when the
// remainder (n >= 5) still makes the heuristic fail; repeats until no single
// deletion does. Errors: kNotACounterexample when the input does not fail.
ConvexPolygon Shrink(const ConvexPolygon& polygon, DsVariant variant);

}  // namespace kgon

#endif  // KGON_FUZZ_HPP_
