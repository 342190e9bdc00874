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

// Polygon files.
//
// Text form: one vertex per line as two whitespace-separated integers; '#'
// starts a comment; blank lines are ignored. JSON form: an array of [x, y]
// integer pairs, detected by a leading '['.

#ifndef KGON_POLYGON_IO_HPP_
#define KGON_POLYGON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

// Reads points without validating them. Errors: kSyntax (Error::where() holds
// the 1-based line number), kCoordinateOutOfRange for integers beyond 64 bits.
std::vector<Point2> ReadPoints(std::string_view text);

// ReadPoints followed by Validate; validation errors keep their code and get
// a "polygon: " prefix.
Validated ParsePolygon(std::string_view text);

Validated ReadPolygonFile(const std::string& path);

// Text form, one "x y" line per vertex.
std::string FormatPolygon(const ConvexPolygon& polygon);

}  // namespace kgon

#endif  // KGON_POLYGON_IO_HPP_
