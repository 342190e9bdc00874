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

#include "kgon/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace kgon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kNotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::kCoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::kNotCyclicallyOrdered: return "NotCyclicallyOrdered";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kNotACounterexample: return "NotACounterexample";
    case ErrorCode::kSolverDisagreement: return "SolverDisagreement";
    case ErrorCode::kSyntax: return "SyntaxError";
  }
  return "Unknown";
}

std::string WideToString(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in the negative range so the minimum value needs no special case.
  Wide r = negative ? v : -v;
  std::string digits;
  while (r != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(r % 10)));
    r /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool TwiceArea::fits_in_double() const {
  constexpr Wide kSafe = (Wide{1} << 53) - 1;
  return value_ <= kSafe && value_ >= -kSafe;
}

std::string TwiceArea::to_string() const { return WideToString(value_); }

TwiceArea TwiceAreaOf(std::span<const Point2> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::kInvalidInput, "twice_area needs at least 3 points");
  }
  Wide sum = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point2& p = points[i];
    const Point2& q = points[(i + 1) % points.size()];
    sum += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
  }
  return TwiceArea(sum);
}

TwiceArea ConvexPolygon::twice_area() const { return TwiceAreaOf(vertices_); }

TwiceArea ConvexPolygon::twice_area_of(std::span<const std::size_t> positions) const {
  if (positions.size() < 3) {
    throw Error(ErrorCode::kInvalidInput, "twice_area needs at least 3 points");
  }
  Wide sum = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Point2& p = at_unrolled(positions[i]);
    const Point2& q = at_unrolled(positions[(i + 1) % positions.size()]);
    sum += static_cast<Wide>(p.x) * q.y - static_cast<Wide>(q.x) * p.y;
  }
  return TwiceArea(sum);
}

namespace {

// Angular order of direction vectors starting from the positive x axis.
bool UpperHalf(const Point2& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool AngleLess(const Point2& u, const Point2& v) {
  const bool hu = UpperHalf(u);
  const bool hv = UpperHalf(v);
  if (hu != hv) return hu;
  return Orientation({0, 0}, u, v) > 0;
}

}  // namespace

Validated Validate(std::span<const Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = points[i];
    if (p.x > kMaxCoord || p.x < -kMaxCoord || p.y > kMaxCoord || p.y < -kMaxCoord) {
      throw Error(ErrorCode::kCoordinateOutOfRange,
                  "vertex " + std::to_string(i) + " has a coordinate beyond 2^31-1", {i});
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b] || (points[a] == points[b] && a < b);
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[order[i - 1]] == points[order[i]]) {
      const std::size_t a = order[i - 1];
      const std::size_t b = order[i];
      throw Error(ErrorCode::kDuplicateVertex,
                  "vertices " + std::to_string(a) + " and " + std::to_string(b) + " coincide",
                  {a, b});
    }
  }

  std::vector<Point2> vertices(points.begin(), points.end());
  const Wide signed_area = TwiceAreaOf(vertices).value();
  const bool reversed = signed_area < 0;
  if (reversed) std::reverse(vertices.begin(), vertices.end());

  auto input_index = [&](std::size_t i) { return reversed ? n - 1 - i : i; };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const std::size_t k = (i + 2) % n;
    if (Orientation(vertices[i], vertices[j], vertices[k]) <= 0) {
      std::vector<std::size_t> triple = {input_index(i), input_index(j), input_index(k)};
      const std::string message = "vertices (" + std::to_string(triple[0]) + ", " +
                                  std::to_string(triple[1]) + ", " + std::to_string(triple[2]) +
                                  ") do not make a strict left turn";
      throw Error(ErrorCode::kNotStrictlyConvex, message, std::move(triple));
    }
  }

  // All left turns still admits star polygons that wind more than once; a
  // simple convex polygon's edge directions wrap around exactly once.
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    const Point2& c = vertices[(i + 2) % n];
    const Point2 e1{b.x - a.x, b.y - a.y};
    const Point2 e2{c.x - b.x, c.y - b.y};
    if (AngleLess(e2, e1)) ++wraps;
  }
  if (wraps != 1) {
    throw Error(ErrorCode::kNotStrictlyConvex, "polygon boundary winds around more than once");
  }

  return Validated{ConvexPolygon(std::move(vertices)), reversed};
}

ConvexPolygon MakePolygon(std::span<const Point2> points) {
  return Validate(points).polygon;
}

ConvexPolygon MakePolygon(std::initializer_list<Point2> points) {
  return Validate(std::span<const Point2>(points.begin(), points.size())).polygon;
}

IndexTuple Canonicalize(std::span<const std::size_t> indices, std::size_t n) {
  const std::size_t k = indices.size();
  if (k < 3) {
    throw Error(ErrorCode::kInvalidInput, "an inscribed polygon needs at least 3 indices");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (indices[i] >= n) {
      throw Error(ErrorCode::kInvalidInput,
                  "index " + std::to_string(indices[i]) + " out of range for n=" + std::to_string(n),
                  {i});
    }
  }
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidInput, "indices are not distinct");
  }
  const auto start = static_cast<std::size_t>(
      std::min_element(indices.begin(), indices.end()) - indices.begin());
  std::vector<std::size_t> rotated;
  rotated.reserve(k);
  for (std::size_t i = 0; i < k; ++i) rotated.push_back(indices[(start + i) % k]);
  if (rotated != sorted) {
    throw Error(ErrorCode::kNotCyclicallyOrdered, "indices are not in cyclic order");
  }
  return IndexTuple(std::move(rotated));
}

IndexTuple Canonicalize(std::initializer_list<std::size_t> indices, std::size_t n) {
  return Canonicalize(std::span<const std::size_t>(indices.begin(), indices.size()), n);
}

std::string IndexTuple::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out << ',';
    out << indices_[i];
  }
  out << ')';
  return out.str();
}

bool Better(const Solution& candidate, const Solution& incumbent) {
  if (candidate.area != incumbent.area) return candidate.area > incumbent.area;
  return candidate.indices < incumbent.indices;
}

}  // namespace kgon
