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

#include "kgon/paper_repro.hpp"

#include <algorithm>

#include "kgon/exact.hpp"

namespace kgon {

ConvexPolygon PaperPolygon() {
  // a_1 is printed as (26096, 06750); the leading zero is typographic.
  static const std::vector<Point2> kVertices = {
      {26096, 6750},  {26130, 9933},  {25940, 10728}, {23090, 22189},
      {18106, 23681}, {13484, 24407}, {13174, 24343}, {3090, 22189},
      {0, 17308},     {80, 14350},    {323, 13331},   {3090, 2189},
      {8459, 385},    {12837, 0},     {13392, 114},   {23090, 2189},
  };
  return MakePolygon(kVertices);
}

bool ReproReport::confirmed_any() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const VariantVerdict& v) { return v.confirmed; });
}

ReproReport VerifyCounterexample(const std::vector<DsVariant>& variants) {
  ConvexPolygon polygon = PaperPolygon();
  const Solution brute = BruteForce(polygon, 4);
  const Solution sweep = SweepQuad(polygon);
  const Solution dp = DpKgon(polygon, 4);
  if (!(brute == sweep && brute == dp)) {
    throw Error(ErrorCode::kSolverDisagreement,
                "exact solvers disagree: brute " + brute.indices.to_string() + ", sweep " +
                    sweep.indices.to_string() + ", dp " + dp.indices.to_string());
  }
  if (brute.indices != Canonicalize({3, 7, 11, 15}, polygon.size())) {
    throw Error(ErrorCode::kSolverDisagreement,
                "optimum is " + brute.indices.to_string() + ", expected (3,7,11,15)");
  }

  ReproReport report{polygon, brute, polygon.twice_area_of({0, 3, 7, 11}), {}};
  for (DsVariant variant : variants) {
    DsAllRoots all = RunHeuristicAllRoots(polygon, variant);
    const bool confirmed =
        std::all_of(all.runs.begin(), all.runs.end(),
                    [&](const DsRun& run) { return run.best_area < brute.area; });
    report.verdicts.push_back({variant, std::move(all.runs), all.best, confirmed});
  }
  return report;
}

}  // namespace kgon
