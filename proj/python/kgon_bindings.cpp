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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "kgon/error.hpp"
#include "kgon/exact.hpp"
#include "kgon/fuzz.hpp"
#include "kgon/geometry.hpp"
#include "kgon/heuristic.hpp"
#include "kgon/paper_repro.hpp"
#include "kgon/polygon_io.hpp"
#include "kgon/report.hpp"
#include "kgon/stability.hpp"
#include "kgon/svg.hpp"

namespace py = pybind11;

namespace {

using kgon::ConvexPolygon;
using kgon::IndexTuple;
using kgon::Point2;
using kgon::TwiceArea;

// Areas can exceed 64 bits; go through the decimal string.
py::int_ ToInt(TwiceArea area) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(area.to_string().c_str(), nullptr, 10));
}

py::tuple ToTuple(const IndexTuple& t) {
  py::tuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i];
  return out;
}

py::tuple ToPair(const Point2& p) { return py::make_tuple(p.x, p.y); }

py::dict SolutionDict(const kgon::Solution& s) {
  py::dict d;
  d["indices"] = ToTuple(s.indices);
  d["twice_area"] = ToInt(s.area);
  return d;
}

py::dict CountsDict(const kgon::AdvanceCounts& c) {
  py::dict d;
  d["a"] = c.a;
  d["b"] = c.b;
  d["c"] = c.c;
  d["d"] = c.d;
  return d;
}

py::dict RunDict(const kgon::DsRun& run, bool with_trace) {
  py::dict d;
  d["root"] = run.root;
  d["variant"] = std::string(kgon::DsVariantName(run.variant));
  d["best"] = ToTuple(run.best);
  d["twice_area"] = ToInt(run.best_area);
  d["advances"] = CountsDict(run.advances);
  d["cascades"] = CountsDict(run.cascades);
  if (with_trace) {
    py::list trace;
    for (const auto& step : run.trace) {
      py::dict s;
      s["action"] = std::string(kgon::TraceActionName(step.action));
      s["at"] = py::make_tuple(step.at.a, step.at.b, step.at.c, step.at.d);
      s["twice_area"] = ToInt(step.area);
      trace.append(std::move(s));
    }
    d["trace"] = std::move(trace);
  }
  return d;
}

// Larger nested reports reuse the JSON serializers.
py::object JsonToPy(const kgon::Json& doc) {
  return py::module_::import("json").attr("loads")(kgon::Dump(doc));
}

std::vector<kgon::DsVariant> Variants(const std::vector<std::string>& names) {
  std::vector<kgon::DsVariant> out;
  for (const auto& n : names) out.push_back(kgon::ParseDsVariant(n));
  return out;
}

IndexTuple Tuple(const ConvexPolygon& p, const std::vector<std::size_t>& idx) {
  return kgon::Canonicalize(idx, p.size());
}

kgon::Strictness ParseStrictness(bool strict) {
  return strict ? kgon::Strictness::kStrict : kgon::Strictness::kWeak;
}

}  // namespace

PYBIND11_MODULE(_kgon, m) {
  m.doc() = "Exact and heuristic maximum-area inscribed k-gons";

  // Leaked on purpose so the translator never sees a destroyed type.
  static py::handle error =
      py::exception<kgon::Error>(m, "KgonError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kgon::Error& e) {
      py::object exc = error(std::string(kgon::ErrorCodeName(e.code())), e.what(),
                             py::cast(e.where()));
      exc.attr("code") = std::string(kgon::ErrorCodeName(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<ConvexPolygon>(m, "Polygon")
      .def(py::init([](const std::vector<std::pair<kgon::Coord, kgon::Coord>>& pts) {
             std::vector<Point2> v;
             v.reserve(pts.size());
             for (auto [x, y] : pts) v.push_back({x, y});
             return kgon::MakePolygon(v);
           }),
           py::arg("points"))
      .def_static("parse",
                  [](const std::string& text) { return kgon::ParsePolygon(text).polygon; })
      .def("__len__", &ConvexPolygon::size)
      .def_property_readonly("vertices",
                             [](const ConvexPolygon& p) {
                               py::list out;
                               for (const auto& v : p.vertices()) out.append(ToPair(v));
                               return out;
                             })
      .def_property_readonly("twice_area",
                             [](const ConvexPolygon& p) { return ToInt(p.twice_area()); })
      .def("twice_area_of",
           [](const ConvexPolygon& p, const std::vector<std::size_t>& idx) {
             return ToInt(p.twice_area_of(idx));
           })
      .def("to_text", &kgon::FormatPolygon)
      .def("__repr__", [](const ConvexPolygon& p) {
        return "Polygon(n=" + std::to_string(p.size()) + ")";
      });

  m.def("was_reversed", [](const std::vector<std::pair<kgon::Coord, kgon::Coord>>& pts) {
    std::vector<Point2> v;
    for (auto [x, y] : pts) v.push_back({x, y});
    return kgon::Validate(v).reversed;
  });

  m.def(
      "ds_run",
      [](const ConvexPolygon& p, std::size_t root, const std::string& variant, bool trace) {
        return RunDict(kgon::RunHeuristic(p, root, kgon::ParseDsVariant(variant)), trace);
      },
      py::arg("polygon"), py::arg("root") = 0, py::arg("variant") = "literal",
      py::arg("trace") = false);
  m.def(
      "ds_all_roots",
      [](const ConvexPolygon& p, const std::string& variant) {
        auto all = kgon::RunHeuristicAllRoots(p, kgon::ParseDsVariant(variant));
        py::list runs;
        for (const auto& r : all.runs) runs.append(RunDict(r, false));
        py::dict d = SolutionDict(all.best);
        d["runs"] = std::move(runs);
        return d;
      },
      py::arg("polygon"), py::arg("variant") = "literal");

  m.def("brute_force", [](const ConvexPolygon& p, std::size_t k) {
    return SolutionDict(kgon::BruteForce(p, k));
  });
  m.def("sweep_quad", [](const ConvexPolygon& p) { return SolutionDict(kgon::SweepQuad(p)); });
  m.def("dp_kgon", [](const ConvexPolygon& p, std::size_t k) {
    return SolutionDict(kgon::DpKgon(p, k));
  });

  m.def(
      "is_stable",
      [](const ConvexPolygon& p, const std::vector<std::size_t>& idx, std::size_t position,
         bool strict) { return kgon::IsStable(p, Tuple(p, idx), position, ParseStrictness(strict)); },
      py::arg("polygon"), py::arg("indices"), py::arg("position"), py::arg("strict") = false);
  m.def(
      "stable_count",
      [](const ConvexPolygon& p, const std::vector<std::size_t>& idx, bool strict) {
        return kgon::StableCount(p, Tuple(p, idx), ParseStrictness(strict));
      },
      py::arg("polygon"), py::arg("indices"), py::arg("strict") = false);
  m.def(
      "enumerate_stable",
      [](const ConvexPolygon& p, std::size_t k, bool strict) {
        py::list out;
        for (const auto& t : kgon::EnumerateStable(p, k, ParseStrictness(strict)))
          out.append(ToTuple(t));
        return out;
      },
      py::arg("polygon"), py::arg("k"), py::arg("strict") = false);

  m.def("random_convex", &kgon::RandomConvex, py::arg("n"), py::arg("bound"), py::arg("seed"));
  m.def(
      "fuzz_campaign",
      [](std::size_t n_min, std::size_t n_max, std::size_t trials, std::uint64_t seed,
         kgon::Coord bound, const std::vector<std::string>& variants) {
        kgon::FuzzConfig config;
        config.n_min = n_min;
        config.n_max = n_max;
        config.trials = trials;
        config.seed = seed;
        config.bound = bound;
        config.variants = Variants(variants);
        auto report = [&] {
          py::gil_scoped_release release;
          return kgon::RunCampaign(config);
        }();
        return JsonToPy(kgon::FuzzReportJson(report));
      },
      py::arg("n_min") = 5, py::arg("n_max") = 12, py::arg("trials") = 100,
      py::arg("seed") = 1, py::arg("bound") = 1000,
      py::arg("variants") = std::vector<std::string>{"literal", "prose"});
  m.def("heuristic_fails", [](const ConvexPolygon& p, const std::string& variant) {
    return kgon::HeuristicFails(p, kgon::ParseDsVariant(variant));
  });
  m.def("shrink", [](const ConvexPolygon& p, const std::string& variant) {
    return kgon::Shrink(p, kgon::ParseDsVariant(variant));
  });

  m.def("paper_polygon", &kgon::PaperPolygon);
  m.def(
      "verify_counterexample",
      [](const std::vector<std::string>& variants) {
        return JsonToPy(kgon::ReproReportJson(kgon::VerifyCounterexample(Variants(variants)), false));
      },
      py::arg("variants") = std::vector<std::string>{"literal", "prose"});

  m.def(
      "render_svg",
      [](const ConvexPolygon& p,
         const std::vector<std::pair<std::vector<std::size_t>, std::string>>& overlays) {
        std::vector<kgon::Overlay> ov;
        for (const auto& [idx, label] : overlays) ov.push_back({Tuple(p, idx), label});
        return kgon::RenderSvg(p, ov);
      },
      py::arg("polygon"),
      py::arg("overlays") = std::vector<std::pair<std::vector<std::size_t>, std::string>>{});
}
