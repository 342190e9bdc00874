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

#include <string>

#include "kgon/parallel.hpp"

namespace kgon {

std::string_view DsVariantName(DsVariant variant) {
  return variant == DsVariant::kLiteral ? "literal" : "prose";
}

DsVariant ParseDsVariant(std::string_view name) {
  if (name == "literal") return DsVariant::kLiteral;
  if (name == "prose") return DsVariant::kProse;
  throw Error(ErrorCode::kInvalidInput, "unknown variant '" + std::string(name) + "'");
}

std::string_view TraceActionName(TraceAction action) {
  switch (action) {
    case TraceAction::kAdvanceA: return "advance_a";
    case TraceAction::kAdvanceB: return "advance_b";
    case TraceAction::kAdvanceC: return "advance_c";
    case TraceAction::kAdvanceD: return "advance_d";
    case TraceAction::kRecord: return "record";
  }
  return "unknown";
}

namespace {

class Runner {
 public:
  Runner(const ConvexPolygon& polygon, std::size_t root, DsVariant variant)
      : polygon_(polygon), n_(polygon.size()) {
    run_.root = root;
    run_.variant = variant;
    p_ = {root, root + 1, root + 2, root + 3};
    area_ = Area(p_);
    run_.start = p_;
    run_.start_area = area_;
    best_at_ = p_;
    run_.best_area = area_;
  }

  DsRun Finish() && {
    const std::size_t best[] = {best_at_.a % n_, best_at_.b % n_, best_at_.c % n_,
                                best_at_.d % n_};
    run_.best = Canonicalize(best, n_);
    return std::move(run_);
  }

  void Literal() {
    const std::size_t stop = p_.a + n_;
    while (true) {
      while (CanAdvanceD() && area_ <= Area(WithD())) {
        Step(TraceAction::kAdvanceD, WithD());
        while (CanAdvanceC() && area_ <= Area(WithC())) Step(TraceAction::kAdvanceC, WithC());
        while (CanAdvanceB() && area_ <= Area(WithB())) Step(TraceAction::kAdvanceB, WithB());
      }
      Record();
      if (AdvanceA(stop)) return;
    }
  }

  void Prose() {
    const std::size_t stop = p_.a + n_;
    while (true) {
      while (true) {
        while (CanAdvanceD() && Area(WithD()) > area_) Step(TraceAction::kAdvanceD, WithD());
        if (CanAdvanceC() && Area(WithC()) > area_) {
          Step(TraceAction::kAdvanceC, WithC());
          continue;
        }
        if (CanAdvanceB() && Area(WithB()) > area_) {
          Step(TraceAction::kAdvanceB, WithB());
          continue;
        }
        break;
      }
      Record();
      if (AdvanceA(stop)) return;
    }
  }

 private:
  TwiceArea Area(const Pointers& p) const { return polygon_.twice_area_of({p.a, p.b, p.c, p.d}); }

  // Advances that would break a < b < c < d < a + n are refused.
  bool CanAdvanceD() const { return p_.d + 1 < p_.a + n_; }
  bool CanAdvanceC() const { return p_.c + 1 < p_.d; }
  bool CanAdvanceB() const { return p_.b + 1 < p_.c; }

  Pointers WithD() const { return {p_.a, p_.b, p_.c, p_.d + 1}; }
  Pointers WithC() const { return {p_.a, p_.b, p_.c + 1, p_.d}; }
  Pointers WithB() const { return {p_.a, p_.b + 1, p_.c, p_.d}; }

  void Step(TraceAction action, const Pointers& next) {
    switch (action) {
      case TraceAction::kAdvanceB: ++run_.advances.b; break;
      case TraceAction::kAdvanceC: ++run_.advances.c; break;
      case TraceAction::kAdvanceD: ++run_.advances.d; break;
      default: break;
    }
    p_ = next;
    area_ = Area(p_);
    run_.trace.push_back({action, p_, area_});
  }

  // m = max(area(abcd), m), keeping the first configuration on ties.
  void Record() {
    if (area_ > run_.best_area) {
      run_.best_area = area_;
      best_at_ = p_;
    }
    run_.trace.push_back({TraceAction::kRecord, p_, area_});
  }

  // Returns true once a is back at the root. Otherwise pushes b, c, d off
  // any pointer a has landed on.
  bool AdvanceA(std::size_t stop) {
    ++p_.a;
    ++run_.advances.a;
    if (p_.a == stop) {
      run_.trace.push_back({TraceAction::kAdvanceA, p_, Area(p_)});
      return true;
    }
    if (p_.b == p_.a) {
      ++p_.b;
      ++run_.cascades.b;
      if (p_.c == p_.b) {
        ++p_.c;
        ++run_.cascades.c;
        if (p_.d == p_.c) {
          ++p_.d;
          ++run_.cascades.d;
        }
      }
    }
    area_ = Area(p_);
    run_.trace.push_back({TraceAction::kAdvanceA, p_, area_});
    return false;
  }

  const ConvexPolygon& polygon_;
  std::size_t n_;
  DsRun run_;
  Pointers p_;
  TwiceArea area_;
  Pointers best_at_;
};

void RequireQuadrilateral(const ConvexPolygon& polygon) {
  if (polygon.size() < 4) {
    throw Error(ErrorCode::kTooFewVertices, "the quadrilateral heuristic needs n >= 4, got " +
                                                std::to_string(polygon.size()));
  }
}

}  // namespace

DsRun RunHeuristic(const ConvexPolygon& polygon, std::size_t root, DsVariant variant) {
  RequireQuadrilateral(polygon);
  if (root >= polygon.size()) {
    throw Error(ErrorCode::kOutOfRange, "root " + std::to_string(root) +
                                            " out of range for n=" + std::to_string(polygon.size()));
  }
  Runner runner(polygon, root, variant);
  if (variant == DsVariant::kLiteral) {
    runner.Literal();
  } else {
    runner.Prose();
  }
  return std::move(runner).Finish();
}

DsAllRoots RunHeuristicAllRoots(const ConvexPolygon& polygon, DsVariant variant) {
  RequireQuadrilateral(polygon);
  DsAllRoots result;
  result.runs.resize(polygon.size());
  ParallelFor(polygon.size(), [&](std::size_t root) {
    result.runs[root] = RunHeuristic(polygon, root, variant);
  });
  result.best = {result.runs[0].best, result.runs[0].best_area};
  for (const DsRun& run : result.runs) {
    const Solution candidate{run.best, run.best_area};
    if (Better(candidate, result.best)) result.best = candidate;
  }
  return result;
}

}  // namespace kgon
