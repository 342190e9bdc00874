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

#include "kgon/report.hpp"

#include <string>

namespace kgon {

Json AreaJson(TwiceArea area) {
  if (area.fits_in_double()) return static_cast<std::int64_t>(area.value());
  return area.to_string();
}

Json PointsJson(std::span<const Point2> points) {
  Json out = Json::array();
  for (const Point2& p : points) out.push_back(Json::array({p.x, p.y}));
  return out;
}

Json PolygonJson(const ConvexPolygon& polygon) { return PointsJson(polygon.vertices()); }

Json TupleJson(const IndexTuple& tuple) {
  Json out = Json::array();
  for (std::size_t i : tuple) out.push_back(i);
  return out;
}

Json SolutionJson(const Solution& solution) {
  Json out;
  out["k"] = solution.k();
  out["indices"] = TupleJson(solution.indices);
  out["twice_area"] = AreaJson(solution.area);
  return out;
}

namespace {

Json PointersJson(const Pointers& p) {
  Json out;
  out["a"] = p.a;
  out["b"] = p.b;
  out["c"] = p.c;
  out["d"] = p.d;
  return out;
}

}  // namespace

Json DsRunJson(const DsRun& run, bool with_trace) {
  Json out;
  out["root"] = run.root;
  out["variant"] = DsVariantName(run.variant);
  out["best"] = SolutionJson({run.best, run.best_area});
  Json advances;
  advances["a"] = run.advances.a;
  advances["b"] = run.advances.b;
  advances["c"] = run.advances.c;
  advances["d"] = run.advances.d;
  out["advances"] = advances;
  Json cascades;
  cascades["b"] = run.cascades.b;
  cascades["c"] = run.cascades.c;
  cascades["d"] = run.cascades.d;
  out["cascades"] = cascades;
  if (with_trace) {
    Json start = PointersJson(run.start);
    start["twice_area"] = AreaJson(run.start_area);
    out["start"] = start;
    Json trace = Json::array();
    for (const TraceStep& step : run.trace) {
      Json entry;
      entry["action"] = TraceActionName(step.action);
      entry["at"] = PointersJson(step.at);
      entry["twice_area"] = AreaJson(step.area);
      trace.push_back(entry);
    }
    out["trace"] = trace;
  }
  return out;
}

Json FuzzConfigJson(const FuzzConfig& config) {
  Json out;
  out["n_min"] = config.n_min;
  out["n_max"] = config.n_max;
  out["k"] = config.k;
  out["trials"] = config.trials;
  out["seed"] = config.seed;
  out["bound"] = config.bound;
  Json variants = Json::array();
  for (DsVariant v : config.variants) variants.push_back(DsVariantName(v));
  out["variants"] = variants;
  out["injected"] = config.injected.size();
  return out;
}

Json FuzzReportJson(const FuzzReport& report) {
  Json out;
  out["config"] = FuzzConfigJson(report.config);
  Json trials = Json::array();
  for (const TrialRecord& record : report.trials) {
    Json entry;
    entry["trial"] = record.trial;
    entry["seed"] = record.seed;
    entry["n"] = record.n;
    if (record.injected) entry["injected"] = true;
    if (record.skipped) {
      entry["skipped"] = *record.skipped;
      trials.push_back(entry);
      continue;
    }
    entry["exact"] = SolutionJson(*record.exact);
    Json heuristic = Json::object();
    for (const VariantOutcome& o : record.outcomes) {
      Json h = SolutionJson(o.heuristic);
      h["gap"] = AreaJson(o.gap);
      heuristic[std::string(DsVariantName(o.variant))] = h;
    }
    entry["heuristic"] = heuristic;
    trials.push_back(entry);
  }
  out["trials"] = trials;

  Json mismatches = Json::array();
  for (std::size_t t : report.mismatches) {
    const TrialRecord& record = report.trials[t];
    Json entry;
    entry["trial"] = t;
    entry["polygon"] = PointsJson(record.polygon);
    mismatches.push_back(entry);
  }
  out["mismatches"] = mismatches;

  Json summary;
  summary["trials"] = report.trials.size();
  summary["skipped"] = report.skipped;
  summary["mismatching_trials"] = report.mismatches.size();
  Json per_variant = Json::object();
  for (std::size_t v = 0; v < report.config.variants.size(); ++v) {
    per_variant[std::string(DsVariantName(report.config.variants[v]))] =
        report.mismatch_count[v];
  }
  summary["mismatches_by_variant"] = per_variant;
  out["summary"] = summary;
  return out;
}

Json ReproReportJson(const ReproReport& report, bool with_trace) {
  Json out;
  out["legend"] = "index i is vertex a_(i+1)";
  out["polygon"] = PolygonJson(report.polygon);
  out["polygon_twice_area"] = AreaJson(report.polygon.twice_area());
  out["optimal"] = SolutionJson(report.optimal);
  Json reported;
  reported["indices"] = Json::array({0, 3, 7, 11});
  reported["twice_area"] = AreaJson(report.reported_area);
  out["reported_quadrilateral"] = reported;
  Json verdicts = Json::array();
  for (const VariantVerdict& v : report.verdicts) {
    Json entry;
    entry["variant"] = DsVariantName(v.variant);
    entry["verdict"] = v.confirmed ? "confirmed" : "refuted";
    entry["best"] = SolutionJson(v.best);
    Json runs = Json::array();
    for (const DsRun& run : v.runs) runs.push_back(DsRunJson(run, with_trace));
    entry["runs"] = runs;
    verdicts.push_back(entry);
  }
  out["verdicts"] = verdicts;
  out["confirmed"] = report.confirmed_any();
  return out;
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace kgon
