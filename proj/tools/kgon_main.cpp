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

// kgon: command-line front end. JSON results go to stdout and human-readable
// summaries to stderr. Exit status is 0 on success, 1 on domain errors and 2
// on usage errors; `repro` exits 1 unless some variant confirms the failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kgon/exact.hpp"
#include "kgon/fuzz.hpp"
#include "kgon/geometry.hpp"
#include "kgon/heuristic.hpp"
#include "kgon/paper_repro.hpp"
#include "kgon/polygon_io.hpp"
#include "kgon/report.hpp"
#include "kgon/stability.hpp"
#include "kgon/svg.hpp"

namespace {

using kgon::Json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json InputJson(const std::string& path, const kgon::Validated& input) {
  Json out;
  out["file"] = path;
  out["n"] = input.polygon.size();
  out["reversed"] = input.reversed;
  out["polygon"] = kgon::PolygonJson(input.polygon);
  return out;
}

void Emit(const Json& doc) { std::cout << kgon::Dump(doc); }

std::vector<std::size_t> ParseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    std::size_t value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size() || token.front() == '-') {
      throw UsageError("bad index list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string VertexLabel(const kgon::IndexTuple& tuple) {
  std::string label;
  for (std::size_t i : tuple) {
    if (!label.empty()) label += ' ';
    label += "a_" + std::to_string(i + 1);
  }
  return label;
}

struct SolveArgs {
  std::size_t k = 4;
  std::string algo = "dp";
  std::string file;
};

int RunSolve(const SolveArgs& args) {
  const kgon::Validated input = kgon::ReadPolygonFile(args.file);
  const kgon::ExactAlgo algo = kgon::ParseExactAlgo(args.algo);
  const kgon::Solution solution = kgon::Solve(input.polygon, args.k, algo);
  Json out;
  out["command"] = "solve";
  out["input"] = InputJson(args.file, input);
  out["algo"] = kgon::ExactAlgoName(algo);
  out["solution"] = kgon::SolutionJson(solution);
  Emit(out);
  std::cerr << "optimal " << args.k << "-gon " << solution.indices.to_string()
            << ", twice-area " << solution.area.to_string() << '\n';
  return 0;
}

struct DsArgs {
  std::string variant = "literal";
  std::optional<std::size_t> root;
  bool all_roots = false;
  bool trace = false;
  std::string file;
};

int RunDs(const DsArgs& args) {
  const kgon::Validated input = kgon::ReadPolygonFile(args.file);
  const kgon::DsVariant variant = kgon::ParseDsVariant(args.variant);
  Json out;
  out["command"] = "ds";
  out["input"] = InputJson(args.file, input);
  out["variant"] = kgon::DsVariantName(variant);
  if (args.all_roots) {
    const kgon::DsAllRoots all = kgon::RunHeuristicAllRoots(input.polygon, variant);
    Json runs = Json::array();
    for (const kgon::DsRun& run : all.runs) runs.push_back(kgon::DsRunJson(run, args.trace));
    out["runs"] = runs;
    out["best"] = kgon::SolutionJson(all.best);
    std::cerr << "best over " << all.runs.size() << " roots: " << all.best.indices.to_string()
              << ", twice-area " << all.best.area.to_string() << '\n';
  } else {
    const kgon::DsRun run = kgon::RunHeuristic(input.polygon, args.root.value_or(0), variant);
    out["run"] = kgon::DsRunJson(run, args.trace);
    std::cerr << "root " << run.root << ": " << run.best.to_string() << ", twice-area "
              << run.best_area.to_string() << '\n';
  }
  Emit(out);
  return 0;
}

struct StabilityArgs {
  std::optional<std::size_t> k;
  std::optional<std::string> indices;
  bool strict = false;
  std::string file;
};

int RunStability(const StabilityArgs& args) {
  if (!args.k && !args.indices) throw UsageError("stability needs --k or --indices");
  const kgon::Validated input = kgon::ReadPolygonFile(args.file);
  const kgon::Strictness s = args.strict ? kgon::Strictness::kStrict : kgon::Strictness::kWeak;
  Json out;
  out["command"] = "stability";
  out["input"] = InputJson(args.file, input);
  out["strictness"] = kgon::StrictnessName(s);
  if (args.indices) {
    const kgon::IndexTuple q =
        kgon::Canonicalize(ParseIndexList(*args.indices), input.polygon.size());
    if (args.k && *args.k != q.size()) {
      throw kgon::Error(kgon::ErrorCode::kInvalidK, "--k " + std::to_string(*args.k) +
                                                        " does not match " +
                                                        std::to_string(q.size()) + " indices");
    }
    Json positions = Json::array();
    std::size_t count = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const bool stable = kgon::IsStable(input.polygon, q, i, s);
      count += stable ? 1 : 0;
      Json entry;
      entry["vertex"] = q[i];
      entry["stable"] = stable;
      positions.push_back(entry);
    }
    out["indices"] = kgon::TupleJson(q);
    out["twice_area"] = kgon::AreaJson(input.polygon.twice_area_of(q.indices()));
    out["positions"] = positions;
    out["stable_count"] = count;
    out["k_stable"] = count == q.size();
    std::cerr << q.to_string() << ": " << count << " of " << q.size() << " vertices stable\n";
  } else {
    const std::vector<kgon::IndexTuple> found = kgon::EnumerateStable(input.polygon, *args.k, s);
    Json list = Json::array();
    for (const kgon::IndexTuple& q : found) {
      Json entry;
      entry["indices"] = kgon::TupleJson(q);
      entry["twice_area"] = kgon::AreaJson(input.polygon.twice_area_of(q.indices()));
      list.push_back(entry);
    }
    out["k"] = *args.k;
    out["stable_polygons"] = list;
    out["count"] = found.size();
    std::cerr << found.size() << " " << *args.k << "-stable " << *args.k << "-gons\n";
  }
  Emit(out);
  return 0;
}

struct FuzzArgs {
  kgon::FuzzConfig config;
  std::optional<std::string> variant;
  bool shrink = false;
};

int RunFuzz(FuzzArgs args) {
  if (args.variant) args.config.variants = {kgon::ParseDsVariant(*args.variant)};
  const kgon::FuzzReport report = kgon::RunCampaign(args.config);
  Json out;
  out["command"] = "fuzz";
  out["report"] = kgon::FuzzReportJson(report);
  if (args.shrink) {
    Json shrunk = Json::array();
    for (std::size_t t : report.mismatches) {
      const kgon::TrialRecord& record = report.trials[t];
      const kgon::ConvexPolygon polygon = kgon::MakePolygon(record.polygon);
      for (const kgon::VariantOutcome& o : record.outcomes) {
        if (o.gap <= kgon::TwiceArea(0)) continue;
        const kgon::ConvexPolygon small = kgon::Shrink(polygon, o.variant);
        Json entry;
        entry["trial"] = t;
        entry["variant"] = kgon::DsVariantName(o.variant);
        entry["n"] = small.size();
        entry["polygon"] = kgon::PolygonJson(small);
        shrunk.push_back(entry);
      }
    }
    out["shrunk"] = shrunk;
  }
  Emit(out);
  std::cerr << report.trials.size() << " trials, " << report.skipped << " skipped, "
            << report.mismatches.size() << " with a heuristic gap\n";
  return 0;
}

struct ReproArgs {
  std::optional<std::string> variant;
  bool trace = false;
};

int RunRepro(const ReproArgs& args) {
  std::vector<kgon::DsVariant> variants = {kgon::DsVariant::kLiteral, kgon::DsVariant::kProse};
  if (args.variant) variants = {kgon::ParseDsVariant(*args.variant)};
  const kgon::ReproReport report = kgon::VerifyCounterexample(variants);
  Json out;
  out["command"] = "repro";
  out["report"] = kgon::ReproReportJson(report, args.trace);
  Emit(out);
  std::cerr << "optimum " << VertexLabel(report.optimal.indices) << " (twice-area "
            << report.optimal.area.to_string() << ")\n";
  for (const kgon::VariantVerdict& v : report.verdicts) {
    std::cerr << kgon::DsVariantName(v.variant) << ": best " << VertexLabel(v.best.indices)
              << " (twice-area " << v.best.area.to_string() << "), "
              << (v.confirmed ? "misses the optimum from every root" : "finds the optimum")
              << '\n';
  }
  return report.confirmed_any() ? 0 : kExitDomain;
}

struct RenderArgs {
  std::string file;
  std::vector<std::string> overlays;
  std::string out;
};

int RunRender(const RenderArgs& args) {
  const kgon::Validated input = kgon::ReadPolygonFile(args.file);
  std::vector<kgon::Overlay> overlays;
  Json listed = Json::array();
  for (const std::string& spec : args.overlays) {
    const std::size_t colon = spec.find(':');
    const std::vector<std::size_t> indices = ParseIndexList(spec.substr(0, colon));
    for (std::size_t i : indices) {
      if (i >= input.polygon.size()) {
        throw kgon::Error(kgon::ErrorCode::kOutOfRange,
                          "overlay vertex " + std::to_string(i) + " out of range for n=" +
                              std::to_string(input.polygon.size()));
      }
    }
    kgon::IndexTuple tuple = kgon::Canonicalize(indices, input.polygon.size());
    std::string label = colon == std::string::npos ? VertexLabel(tuple) : spec.substr(colon + 1);
    Json entry;
    entry["indices"] = kgon::TupleJson(tuple);
    entry["label"] = label;
    listed.push_back(entry);
    overlays.push_back({std::move(tuple), std::move(label)});
  }
  const std::string svg = kgon::RenderSvg(input.polygon, overlays);
  std::ofstream file(args.out, std::ios::binary);
  if (!file || !(file << svg)) {
    throw kgon::Error(kgon::ErrorCode::kInvalidInput, "cannot write '" + args.out + "'");
  }
  Json out;
  out["command"] = "render";
  out["input"] = InputJson(args.file, input);
  out["overlays"] = listed;
  out["out"] = args.out;
  out["bytes"] = svg.size();
  Emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-area inscribed polygons and the Dobkin-Snyder quadrilateral heuristic"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact maximum-area inscribed k-gon");
  solve_cmd->add_option("--k", solve.k, "number of vertices")->required();
  solve_cmd->add_option("--algo", solve.algo, "brute | sweep | dp")
      ->check(CLI::IsMember({"brute", "sweep", "dp"}));
  solve_cmd->add_option("file", solve.file, "polygon file")->required();

  DsArgs ds;
  auto* ds_cmd = app.add_subcommand("ds", "run the quadrilateral heuristic");
  ds_cmd->add_option("--variant", ds.variant, "literal | prose")
      ->check(CLI::IsMember({"literal", "prose"}));
  auto* root_opt = ds_cmd->add_option("--root", ds.root, "root vertex (default 0)");
  auto* all_opt = ds_cmd->add_flag("--all-roots", ds.all_roots, "run every root");
  root_opt->excludes(all_opt);
  ds_cmd->add_flag("--trace", ds.trace, "include the step trace");
  ds_cmd->add_option("file", ds.file, "polygon file")->required();

  StabilityArgs stab;
  auto* stab_cmd = app.add_subcommand("stability", "stable vertices and k-stable polygons");
  stab_cmd->add_option("--k", stab.k, "polygon size for enumeration");
  stab_cmd->add_option("--indices", stab.indices, "comma-separated vertex indices");
  stab_cmd->add_flag("--strict", stab.strict, "ties count as unstable");
  stab_cmd->add_option("file", stab.file, "polygon file")->required();

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "search random polygons for heuristic failures");
  fuzz_cmd->add_option("--n-min", fuzz.config.n_min)->required();
  fuzz_cmd->add_option("--n-max", fuzz.config.n_max)->required();
  fuzz_cmd->add_option("--trials", fuzz.config.trials)->required();
  fuzz_cmd->add_option("--seed", fuzz.config.seed)->required();
  fuzz_cmd->add_option("--bound", fuzz.config.bound)->required();
  fuzz_cmd->add_option("--variant", fuzz.variant, "literal | prose (default both)")
      ->check(CLI::IsMember({"literal", "prose"}));
  fuzz_cmd->add_flag("--shrink", fuzz.shrink, "shrink every failing polygon");

  ReproArgs repro;
  auto* repro_cmd = app.add_subcommand("repro", "check the 16-vertex counterexample");
  repro_cmd->add_option("--variant", repro.variant, "literal | prose (default both)")
      ->check(CLI::IsMember({"literal", "prose"}));
  repro_cmd->add_flag("--trace", repro.trace, "include step traces");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "draw a polygon and overlays as SVG");
  render_cmd->add_option("file", render.file, "polygon file")->required();
  render_cmd->add_option("--overlay", render.overlays, "I,J,K[,...][:label]");
  render_cmd->add_option("--out", render.out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*ds_cmd) return RunDs(ds);
    if (*stab_cmd) return RunStability(stab);
    if (*fuzz_cmd) return RunFuzz(fuzz);
    if (*repro_cmd) return RunRepro(repro);
    if (*render_cmd) return RunRender(render);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const kgon::Error& e) {
    Json err;
    err["code"] = kgon::ErrorCodeName(e.code());
    err["message"] = e.what();
    if (!e.where().empty()) err["where"] = e.where();
    Json out;
    out["error"] = err;
    Emit(out);
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
