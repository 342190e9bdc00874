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

// JSON documents emitted by the command-line tool.
//
// Keys appear in a fixed insertion order. Twice-areas are JSON integers when
// they fit in 53 bits and decimal strings otherwise. Vertex indices are
// 0-based throughout.

#ifndef KGON_REPORT_HPP_
#define KGON_REPORT_HPP_

#include "json.hpp"

#include "kgon/fuzz.hpp"
#include "kgon/geometry.hpp"
#include "kgon/heuristic.hpp"
#include "kgon/paper_repro.hpp"

namespace kgon {

using Json = nlohmann::ordered_json;

Json AreaJson(TwiceArea area);
Json PointsJson(std::span<const Point2> points);
Json PolygonJson(const ConvexPolygon& polygon);
Json TupleJson(const IndexTuple& tuple);
Json SolutionJson(const Solution& solution);
Json DsRunJson(const DsRun& run, bool with_trace);
Json FuzzConfigJson(const FuzzConfig& config);
Json FuzzReportJson(const FuzzReport& report);
Json ReproReportJson(const ReproReport& report, bool with_trace);

// Two-space indented with a trailing newline.
std::string Dump(const Json& doc);

}  // namespace kgon

#endif  // KGON_REPORT_HPP_
