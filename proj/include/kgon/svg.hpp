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

#ifndef KGON_SVG_HPP_
#define KGON_SVG_HPP_

#include <string>
#include <vector>

#include "kgon/geometry.hpp"

namespace kgon {

struct Overlay {
  IndexTuple indices;
  std::string label;
};

// Standalone SVG: the polygon outline as a single closed path, each overlay
// as a translucent filled polygon, vertex labels a_1..a_n and a legend. The
// view box is the bounding box plus a 5% margin per axis. Output depends only
// on the arguments. Errors: kOutOfRange for overlay indices >= n.
std::string RenderSvg(const ConvexPolygon& polygon, const std::vector<Overlay>& overlays);

}  // namespace kgon

#endif  // KGON_SVG_HPP_
