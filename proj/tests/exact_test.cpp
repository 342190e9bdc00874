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

#include <gtest/gtest.h>

#include "kgon/fuzz.hpp"
#include "kgon/paper_repro.hpp"
#include "test_support.hpp"

namespace kgon {
namespace {

using testing::Hexagon;
using testing::Octagon;
using testing::OracleMaxKgon;
using testing::Square;

void ExpectMatchesOracle(const ConvexPolygon& p, std::size_t k, const Solution& s) {
  const testing::OracleBest oracle = OracleMaxKgon(p, k);
  EXPECT_EQ(s.indices.indices(), oracle.indices) << "k=" << k;
  EXPECT_EQ(s.area.value(), oracle.area) << "k=" << k;
}

TEST(BruteForce, Examples) {
  const Solution sq = BruteForce(Square(), 3);
  EXPECT_EQ(sq.area, TwiceArea(4));
  EXPECT_EQ(sq.indices, Canonicalize({0, 1, 2}, 4));

  const Solution hex = BruteForce(Hexagon(), 3);
  EXPECT_EQ(hex.indices, Canonicalize({0, 2, 4}, 6));
  EXPECT_EQ(hex.area, TwiceArea(12));

  const Solution sixteen = BruteForce(PaperPolygon(), 4);
  EXPECT_EQ(sixteen.indices, Canonicalize({3, 7, 11, 15}, 16));
  EXPECT_EQ(sixteen.area, TwiceArea(800000000));
}

TEST(BruteForce, Errors) {
  try {
    BruteForce(Square(), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidK);
  }
  EXPECT_THROW(BruteForce(Square(), 2), Error);
  try {
    BruteForce(RandomConvex(60, 100000, 1), 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(SweepQuad, Examples) {
  EXPECT_EQ(SweepQuad(Square()), (Solution{Canonicalize({0, 1, 2, 3}, 4), TwiceArea(8)}));
  EXPECT_EQ(SweepQuad(Hexagon()).area, TwiceArea(16));
  EXPECT_EQ(SweepQuad(Hexagon()), BruteForce(Hexagon(), 4));
  EXPECT_EQ(SweepQuad(PaperPolygon()).indices, Canonicalize({3, 7, 11, 15}, 16));
}

TEST(SweepQuad, TooFewVertices) {
  try {
    SweepQuad(MakePolygon({{0, 0}, {1, 0}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewVertices);
  }
}

TEST(DpKgon, Examples) {
  const Solution five = DpKgon(Hexagon(), 5);
  EXPECT_EQ(five.area, TwiceArea(20));
  EXPECT_EQ(five.indices, Canonicalize({0, 1, 2, 3, 4}, 6));
  const Solution six = DpKgon(Hexagon(), 6);
  EXPECT_EQ(six, (Solution{Canonicalize({0, 1, 2, 3, 4, 5}, 6), TwiceArea(24)}));
  EXPECT_EQ(DpKgon(PaperPolygon(), 4), BruteForce(PaperPolygon(), 4));
  EXPECT_EQ(DpKgon(PaperPolygon(), 4), SweepQuad(PaperPolygon()));
  EXPECT_THROW(DpKgon(Hexagon(), 7), Error);
}

TEST(ExactSolvers, AgreeWithOracleOnFixtures) {
  for (const ConvexPolygon& p : {Square(), Hexagon(), Octagon(), PaperPolygon()}) {
    for (std::size_t k = 3; k <= std::min<std::size_t>(p.size(), 6); ++k) {
      ExpectMatchesOracle(p, k, BruteForce(p, k));
      ExpectMatchesOracle(p, k, DpKgon(p, k));
      if (k == 4) ExpectMatchesOracle(p, k, SweepQuad(p));
    }
  }
}

TEST(ExactSolvers, AgreeOnRandomPolygons) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const ConvexPolygon p = RandomConvex(4 + seed % 9, 200, seed);
    for (std::size_t k = 3; k <= p.size(); ++k) {
      const Solution brute = BruteForce(p, k);
      ExpectMatchesOracle(p, k, brute);
      EXPECT_EQ(DpKgon(p, k), brute) << "seed " << seed << " k " << k;
      if (k == 4) EXPECT_EQ(SweepQuad(p), brute) << "seed " << seed;
    }
  }
}

TEST(ExactSolvers, AgreeOnTieHeavySymmetricPolygons) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ConvexPolygon p = testing::RandomSymmetric(2 + seed % 5, seed, 3);
    for (std::size_t k = 3; k <= std::min<std::size_t>(p.size(), 7); ++k) {
      const Solution brute = BruteForce(p, k);
      EXPECT_EQ(DpKgon(p, k), brute) << "seed " << seed << " k " << k;
      if (k == 4) EXPECT_EQ(SweepQuad(p), brute) << "seed " << seed;
    }
  }
}

TEST(SweepQuad, MatchesDpOnLargerPolygons) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConvexPolygon p = RandomConvex(30 + seed * 3, 1000000, seed);
    EXPECT_EQ(SweepQuad(p), DpKgon(p, 4)) << "seed " << seed;
  }
}

TEST(ExactSolvers, AreaStrictlyIncreasesWithK) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ConvexPolygon p = RandomConvex(5 + seed % 10, 1000, seed);
    for (std::size_t k = 3; k < p.size(); ++k) {
      EXPECT_LT(DpKgon(p, k).area, DpKgon(p, k + 1).area);
    }
    EXPECT_EQ(DpKgon(p, p.size()).area, p.twice_area());
  }
}

TEST(Solve, Dispatch) {
  EXPECT_EQ(Solve(Hexagon(), 4, ExactAlgo::kSweep), Solve(Hexagon(), 4, ExactAlgo::kBrute));
  EXPECT_THROW(Solve(Hexagon(), 3, ExactAlgo::kSweep), Error);
  EXPECT_EQ(ParseExactAlgo("dp"), ExactAlgo::kDp);
  EXPECT_THROW(ParseExactAlgo("magic"), Error);
}

TEST(BinomialSaturating, Values) {
  EXPECT_EQ(BinomialSaturating(16, 4), 1820u);
  EXPECT_EQ(BinomialSaturating(5, 7), 0u);
  EXPECT_EQ(BinomialSaturating(1000, 500), UINT64_MAX);
}

}  // namespace
}  // namespace kgon
