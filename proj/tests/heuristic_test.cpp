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

#include "kgon/heuristic.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "kgon/exact.hpp"
#include "kgon/fuzz.hpp"
#include "kgon/paper_repro.hpp"
#include "test_support.hpp"

namespace kgon {
namespace {

using testing::Hexagon;
using testing::Octagon;
using testing::Square;

// Checks the structural run invariants: a moves exactly n times, b, c, d
// fewer than 2n times each, accepted advances never shrink the area, the
// order guard holds and the best area matches its tuple.
void ExpectRunInvariants(const ConvexPolygon& p, const DsRun& run) {
  const std::size_t n = p.size();
  EXPECT_EQ(run.advances.a, n);
  EXPECT_LT(run.advances.b, 2 * n);
  EXPECT_LT(run.advances.c, 2 * n);
  EXPECT_LT(run.advances.d, 2 * n);
  EXPECT_LT(run.advances.b + run.cascades.b, 2 * n);
  EXPECT_LT(run.advances.c + run.cascades.c, 2 * n);
  EXPECT_LT(run.advances.d + run.cascades.d, 2 * n);
  EXPECT_LE(run.advances.total() + run.cascades.total(), 7 * n);
  // One step per loop move, per a move and per record.
  EXPECT_EQ(run.trace.size(), run.advances.total() + n);
  const Pointers& end = run.trace.back().at;
  EXPECT_EQ(end.b - run.start.b, run.advances.b + run.cascades.b);
  EXPECT_EQ(end.c - run.start.c, run.advances.c + run.cascades.c);
  EXPECT_EQ(end.d - run.start.d, run.advances.d + run.cascades.d);
  EXPECT_LE(run.trace.size(), 8 * n);

  TwiceArea previous = run.start_area;
  Pointers last = run.start;
  for (const TraceStep& step : run.trace) {
    if (step.action == TraceAction::kAdvanceB || step.action == TraceAction::kAdvanceC ||
        step.action == TraceAction::kAdvanceD) {
      EXPECT_GE(step.area, previous);
    }
    EXPECT_GE(step.at.a, last.a);
    EXPECT_GE(step.at.b, last.b);
    EXPECT_GE(step.at.c, last.c);
    EXPECT_GE(step.at.d, last.d);
    if (step.action != TraceAction::kAdvanceA || step.at.a != run.root + n) {
      EXPECT_LT(step.at.a, step.at.b);
      EXPECT_LT(step.at.b, step.at.c);
      EXPECT_LT(step.at.c, step.at.d);
      EXPECT_LT(step.at.d, step.at.a + n);
    }
    previous = step.area;
    last = step.at;
  }
  EXPECT_EQ(run.best_area, p.twice_area_of(run.best.indices()));
  EXPECT_EQ(run.best.size(), 4u);
}

TEST(RunHeuristic, SquareKeepsThePolygon) {
  const DsRun run = RunHeuristic(Square(), 0, DsVariant::kLiteral);
  EXPECT_EQ(run.best, Canonicalize({0, 1, 2, 3}, 4));
  EXPECT_EQ(run.best_area, TwiceArea(8));
  EXPECT_EQ(run.advances.b, 0u);
  EXPECT_EQ(run.advances.c, 0u);
  EXPECT_EQ(run.advances.d, 0u);
  EXPECT_EQ(run.advances.a, 4u);
  EXPECT_EQ(run.cascades.b, 3u);
}

TEST(RunHeuristic, HexagonRootZeroLiteral) {
  const ConvexPolygon hex = Hexagon();
  const DsRun run = RunHeuristic(hex, 0, DsVariant::kLiteral);
  EXPECT_EQ(run.best_area, TwiceArea(16));
  EXPECT_EQ(run.best, Canonicalize({0, 2, 4, 5}, 6));
  EXPECT_EQ(run.best_area, BruteForce(hex, 4).area);
  ExpectRunInvariants(hex, run);
}

TEST(RunHeuristic, CounterexampleRootZeroReportsA1A4A8A12) {
  const ConvexPolygon p = PaperPolygon();
  for (DsVariant v : {DsVariant::kLiteral, DsVariant::kProse}) {
    const DsRun run = RunHeuristic(p, 0, v);
    EXPECT_EQ(run.best, Canonicalize({0, 3, 7, 11}, 16)) << DsVariantName(v);
    EXPECT_EQ(run.best_area, TwiceArea(768900000));
    ExpectRunInvariants(p, run);
  }
}

TEST(RunHeuristic, CounterexampleRootZeroAdvanceCounts) {
  // Frozen from an independent re-implementation of both control flows.
  const ConvexPolygon p = PaperPolygon();
  const DsRun literal = RunHeuristic(p, 0, DsVariant::kLiteral);
  EXPECT_EQ(literal.advances.a, 16u);
  EXPECT_EQ(literal.advances.b, 13u);
  EXPECT_EQ(literal.advances.c, 17u);
  EXPECT_EQ(literal.advances.d, 21u);
  const DsRun prose = RunHeuristic(p, 0, DsVariant::kProse);
  EXPECT_EQ(prose.advances.b, 14u);
  EXPECT_EQ(prose.advances.c, 18u);
  EXPECT_EQ(prose.advances.d, 22u);
}

TEST(RunHeuristic, TraceStartsFromRootAndEndsBackAtIt) {
  const ConvexPolygon p = PaperPolygon();
  const DsRun run = RunHeuristic(p, 5, DsVariant::kLiteral);
  EXPECT_EQ(run.start, (Pointers{5, 6, 7, 8}));
  ASSERT_FALSE(run.trace.empty());
  EXPECT_EQ(run.trace.back().action, TraceAction::kAdvanceA);
  EXPECT_EQ(run.trace.back().at.a, 5u + 16u);
  std::size_t records = 0;
  for (const TraceStep& s : run.trace) records += s.action == TraceAction::kRecord ? 1 : 0;
  EXPECT_EQ(records, 16u);
}

TEST(RunHeuristic, Errors) {
  const ConvexPolygon triangle = MakePolygon({{0, 0}, {1, 0}, {0, 1}});
  try {
    RunHeuristic(triangle, 0, DsVariant::kLiteral);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewVertices);
  }
  try {
    RunHeuristic(Square(), 4, DsVariant::kLiteral);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(RunHeuristicAllRoots(triangle, DsVariant::kProse), Error);
  EXPECT_THROW(ParseDsVariant("greedy"), Error);
}

TEST(RunHeuristicAllRoots, Examples) {
  EXPECT_EQ(RunHeuristicAllRoots(Square(), DsVariant::kLiteral).best.area, TwiceArea(8));
  const ConvexPolygon hex = Hexagon();
  for (DsVariant v : {DsVariant::kLiteral, DsVariant::kProse}) {
    const DsAllRoots all = RunHeuristicAllRoots(hex, v);
    EXPECT_EQ(all.best.area, TwiceArea(16));
    EXPECT_EQ(all.best, BruteForce(hex, 4));
  }
}

TEST(RunHeuristicAllRoots, PaperPolygonMissesOptimumFromEveryRoot) {
  const ConvexPolygon p = PaperPolygon();
  const TwiceArea optimum = BruteForce(p, 4).area;
  for (DsVariant v : {DsVariant::kLiteral, DsVariant::kProse}) {
    const DsAllRoots all = RunHeuristicAllRoots(p, v);
    ASSERT_EQ(all.runs.size(), 16u);
    for (const DsRun& run : all.runs) {
      EXPECT_LT(run.best_area, optimum) << "root " << run.root;
      EXPECT_EQ(run.root, &run - all.runs.data());
    }
    EXPECT_LT(all.best.area, optimum);
  }
}

TEST(RunHeuristic, PropertiesOnRandomPolygons) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ConvexPolygon p = seed % 3 == 0 ? testing::RandomSymmetric(2 + seed % 7, seed)
                                          : RandomConvex(4 + seed % 30, 2000, seed);
    const TwiceArea optimum = SweepQuad(p).area;
    for (DsVariant v : {DsVariant::kLiteral, DsVariant::kProse}) {
      for (std::size_t root = 0; root < p.size(); ++root) {
        const DsRun run = RunHeuristic(p, root, v);
        ExpectRunInvariants(p, run);
        EXPECT_LE(run.best_area, optimum);
      }
    }
  }
}

TEST(RunHeuristic, TiesOnTheOctagonTerminate) {
  const ConvexPolygon oct = Octagon();
  for (DsVariant v : {DsVariant::kLiteral, DsVariant::kProse}) {
    for (std::size_t root = 0; root < oct.size(); ++root) {
      ExpectRunInvariants(oct, RunHeuristic(oct, root, v));
    }
  }
}

TEST(RunHeuristicAllRoots, IndependentOfWorkerCount) {
  const ConvexPolygon p = RandomConvex(40, 100000, 99);
  setenv("KGON_THREADS", "1", 1);
  const DsAllRoots one = RunHeuristicAllRoots(p, DsVariant::kLiteral);
  setenv("KGON_THREADS", "7", 1);
  const DsAllRoots seven = RunHeuristicAllRoots(p, DsVariant::kLiteral);
  unsetenv("KGON_THREADS");
  EXPECT_EQ(one.best, seven.best);
  ASSERT_EQ(one.runs.size(), seven.runs.size());
  for (std::size_t i = 0; i < one.runs.size(); ++i) {
    EXPECT_EQ(one.runs[i].best, seven.runs[i].best);
    EXPECT_EQ(one.runs[i].trace.size(), seven.runs[i].trace.size());
  }
}

}  // namespace
}  // namespace kgon
