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

// Exact integer geometry: points, twice-areas, validated convex polygons and
// canonical index tuples. Nothing in here touches floating point.

#ifndef KGON_GEOMETRY_HPP_
#define KGON_GEOMETRY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kgon/error.hpp"

namespace kgon {

using Coord = std::int64_t;
using Wide = __int128;

inline constexpr Coord kMaxCoord = 2147483647;  // 2^31 - 1

struct Point2 {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point2&, const Point2&) = default;
};

// Twice the signed Euclidean area of a cycle, exact.
class TwiceArea {
 public:
  constexpr TwiceArea() = default;
  constexpr explicit TwiceArea(Wide value) : value_(value) {}

  constexpr Wide value() const { return value_; }

  // True when the value survives a round trip through a double.
  bool fits_in_double() const;
  std::string to_string() const;

  friend constexpr auto operator<=>(const TwiceArea&, const TwiceArea&) = default;
  friend constexpr TwiceArea operator+(TwiceArea a, TwiceArea b) {
    return TwiceArea(a.value_ + b.value_);
  }
  friend constexpr TwiceArea operator-(TwiceArea a, TwiceArea b) {
    return TwiceArea(a.value_ - b.value_);
  }

 private:
  Wide value_ = 0;
};

std::string WideToString(Wide v);

// Twice the signed area of triangle pqr; positive iff p, q, r turn left.
constexpr Wide Orientation(const Point2& p, const Point2& q, const Point2& r) {
  return static_cast<Wide>(q.x - p.x) * static_cast<Wide>(r.y - p.y) -
         static_cast<Wide>(q.y - p.y) * static_cast<Wide>(r.x - p.x);
}

// Shoelace sum over the cyclic sequence. Degenerate cycles (repeated or
// collinear points) are accepted. Throws kInvalidInput for fewer than 3 points.
TwiceArea TwiceAreaOf(std::span<const Point2> points);

struct Validated;

// A strictly convex polygon with pairwise distinct vertices in
// counter-clockwise order. Only constructible through Validate().
class ConvexPolygon {
 public:
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  // Vertex at an unrolled position; positions wrap modulo n.
  const Point2& at_unrolled(std::size_t pos) const {
    return vertices_[pos % vertices_.size()];
  }

  TwiceArea twice_area() const;

  // Twice-area of the cycle through the given vertex positions (unrolled
  // positions are reduced modulo n).
  TwiceArea twice_area_of(std::span<const std::size_t> positions) const;
  TwiceArea twice_area_of(std::initializer_list<std::size_t> positions) const {
    return twice_area_of(std::span<const std::size_t>(positions.begin(), positions.size()));
  }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  friend Validated Validate(std::span<const Point2> points);
  explicit ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

struct Validated {
  ConvexPolygon polygon;
  // Set when the input was clockwise; the polygon holds the reversed order,
  // so input position i is polygon position n - 1 - i.
  bool reversed = false;
};

// Checks every ConvexPolygon invariant. Errors: kTooFewVertices,
// kCoordinateOutOfRange, kDuplicateVertex, kNotStrictlyConvex (with the
// offending triple in Error::where() when there is one).
Validated Validate(std::span<const Point2> points);

// Shorthand for Validate(points).polygon.
ConvexPolygon MakePolygon(std::span<const Point2> points);
ConvexPolygon MakePolygon(std::initializer_list<Point2> points);

// Distinct vertex indices of an inscribed polygon, rotated so the smallest
// index comes first; the remaining entries strictly increase.
class IndexTuple {
 public:
  IndexTuple() = default;

  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::string to_string() const;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  friend IndexTuple Canonicalize(std::span<const std::size_t>, std::size_t);
  explicit IndexTuple(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}

  std::vector<std::size_t> indices_;
};

// Errors: kInvalidInput (fewer than 3 entries, duplicate or out-of-range
// index), kNotCyclicallyOrdered.
IndexTuple Canonicalize(std::span<const std::size_t> indices, std::size_t n);
IndexTuple Canonicalize(std::initializer_list<std::size_t> indices, std::size_t n);

// The best inscribed polygon found by some solver.
struct Solution {
  IndexTuple indices;
  TwiceArea area;

  std::size_t k() const { return indices.size(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Larger area wins; equal areas go to the lexicographically smaller tuple.
bool Better(const Solution& candidate, const Solution& incumbent);

}  // namespace kgon

#endif  // KGON_GEOMETRY_HPP_
