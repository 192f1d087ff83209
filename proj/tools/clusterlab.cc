// Copyright 2026 The clusterlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// clusterlab: command-line front end for the verification cases, snake and
// band expansions, mutation and builtin surfaces.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "clusterlab/algebra/exponent_kernels.h"
#include "clusterlab/algebra/laurent.h"
#include "clusterlab/algebra/laurent_json.h"
#include "clusterlab/mutation/seed.h"
#include "clusterlab/snake/graph.h"
#include "clusterlab/snake/graph_json.h"
#include "clusterlab/snake/matchings.h"
#include "clusterlab/surface/builtin.h"
#include "clusterlab/surface/crossing.h"
#include "clusterlab/surface/surface_json.h"
#include "clusterlab/verify/cases.h"
#include "clusterlab/verify/search.h"
#include "json.hpp"

namespace {

using namespace clusterlab;

std::shared_ptr<const surface::Triangulation> ResolveSurface(
    const std::string& name) {
  if (name.ends_with(".json") || std::filesystem::exists(name)) {
    return std::make_shared<const surface::Triangulation>(
        surface::LoadTriangulation(name));
  }
  return std::make_shared<const surface::Triangulation>(
      surface::BuiltinByName(name));
}

int RunVerify(const std::string& name, bool json, std::uint64_t seed) {
  if (name == "list") {
    for (const auto& c : verify::Registry()) {
      std::cout << c.name << "\t" << c.summary << "\n";
    }
    return 0;
  }
  const auto reports = verify::RunCases(name, {seed});
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.status == verify::Status::kPass;
  if (json) {
    std::cout << verify::ReportsToJson(reports) << "\n";
  } else {
    std::printf("kernels: %s\n", algebra::ActiveKernels().name);
    for (const auto& r : reports) {
      std::printf("%-8s %-18s %10.1f ms  %s\n", verify::StatusName(r.status),
                  r.name.c_str(), r.elapsed_ms, r.detail.c_str());
    }
  }
  return ok ? 0 : 1;
}

struct ExpandArgs {
  std::string surface = "genus1";
  std::string arcs;
  bool loop = false;
  std::string coeff = "principal";
  bool json = false;
  bool graph = false;
};

int RunExpand(const ExpandArgs& a) {
  const auto t = ResolveSurface(a.surface);
  const auto c = a.coeff == "trivial" ? snake::Coefficients::kTrivial
                                      : snake::Coefficients::kPrincipal;
  const std::vector<int> seq = surface::ParseSequence(a.arcs);
  algebra::LaurentPolynomial p;
  nlohmann::json graph;
  if (a.loop) {
    const snake::BandGraph b =
        snake::BuildBand(t, surface::LoopCrossing{seq, std::nullopt});
    p = snake::ExpandBand(b, c);
    if (a.graph) graph = snake::ToJson(b);
  } else {
    const snake::SnakeGraph s =
        snake::BuildSnake(t, surface::ArcCrossing{seq, std::nullopt});
    p = snake::Expand(s, c);
    if (a.graph) graph = snake::ToJson(s);
  }
  if (a.json) {
    nlohmann::json out = {{"text", algebra::ToString(p)},
                          {"polynomial", algebra::ToJson(p)}};
    if (a.graph) out["graph"] = graph;
    std::cout << out.dump(2) << "\n";
  } else {
    if (a.graph) std::cout << graph.dump(2) << "\n";
    std::cout << algebra::ToString(p) << "\n";
  }
  return 0;
}

int RunMutate(const std::string& surface_name, const std::string& seq_text,
              std::optional<int> show, bool json) {
  const auto t = ResolveSurface(surface_name);
  const std::vector<int> seq =
      seq_text.empty() ? std::vector<int>{} : surface::ParseSequence(seq_text);
  const mutation::Seed s = mutation::MutateSeq(
      mutation::InitialSeed(surface::ExchangeMatrix(*t)), seq);
  const int n = static_cast<int>(s.rank());
  if (show && (*show < 1 || *show > n)) {
    throw std::out_of_range("--show must be in 1.." + std::to_string(n));
  }
  const int lo = show ? *show : 1, hi = show ? *show : n;
  if (json) {
    nlohmann::json out = {{"sequence", seq}, {"B", s.B.ToRows()}};
    for (int k = lo; k <= hi; ++k) {
      out["cluster"][std::to_string(k)] = {
          {"text", algebra::ToString(s.cluster[k - 1])},
          {"coefficient", s.coeffs[k - 1].ToString()}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (int k = lo; k <= hi; ++k) {
    std::cout << "x" << k << "' = " << algebra::ToString(s.cluster[k - 1])
              << "\n";
  }
  return 0;
}

int RunFind(const std::string& surface_name, const std::string& arc_text,
            int depth) {
  const auto t = ResolveSurface(surface_name);
  const algebra::LaurentPolynomial target = snake::Expand(snake::BuildSnake(
      t, surface::ArcCrossing{surface::ParseSequence(arc_text), std::nullopt}));
  const std::vector<int> seq = mutation::FindMutationSequence(
      mutation::InitialSeed(surface::ExchangeMatrix(*t)), target, depth);
  std::cout << (seq.empty() ? "(initial cluster)"
                            : surface::SequenceToString(seq))
            << "\n";
  return 0;
}

int RunSurface(std::optional<int> genus, const std::string& name, bool print) {
  const surface::Triangulation t =
      genus ? surface::BuiltinGenus(*genus) : surface::BuiltinByName(name);
  const auto violations = surface::Validate(t);
  if (print) {
    std::cout << surface::ToJson(t).dump(2) << "\n";
  } else {
    std::cout << "genus " << t.genus() << ", " << t.n_arcs() << " arcs, "
              << t.triangles().size() << " triangles, rank "
              << mutation::MatrixRank(surface::ExchangeMatrix(t)) << "\n"
              << surface::ExchangeMatrix(t).ToString();
  }
  for (const auto& v : violations) std::cerr << "invalid: " << v << "\n";
  return violations.empty() ? 0 : 1;
}

int RunDeriveW(int max_len) {
  const auto found = verify::DeriveGenus2WArcs(max_len);
  for (const auto& w : found) {
    auto fmt = [](const surface::ArcCrossing& a) {
      return surface::SequenceToString(a.arcs) + " @(" +
             std::to_string(a.start->triangle) + "," +
             std::to_string(a.start->side) + ")";
    };
    std::cout << "W1 " << fmt(w.w1) << "  W2 " << fmt(w.w2) << "  W3 "
              << fmt(w.w3) << "\n";
  }
  std::cout << found.size() << " solution(s)\n";
  return found.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cluster algebras from surfaces: snake graphs, mutation and "
      "identity checks"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "run verification cases");
  std::string case_name = "all";
  bool verify_json = false;
  std::uint64_t seed = 1;
  verify_cmd->add_option("case", case_name, "case name, 'all' or 'list'");
  verify_cmd->add_flag("--json", verify_json, "JSON report");
  verify_cmd->add_option("--seed", seed, "fuzz RNG seed");

  auto* expand_cmd =
      app.add_subcommand("expand", "expand an arc or loop via matchings");
  ExpandArgs ea;
  expand_cmd->add_option("--surface", ea.surface,
                         "builtin name (genus<g>, annulus) or JSON file");
  expand_cmd->add_option("--arc", ea.arcs, "crossing sequence, e.g. 4,2,1,4")
      ->required();
  expand_cmd->add_flag("--loop", ea.loop,
                       "treat the sequence as a closed loop");
  expand_cmd->add_option("--coeff", ea.coeff, "principal or trivial")
      ->check(CLI::IsMember({"principal", "trivial"}));
  expand_cmd->add_flag("--json", ea.json, "JSON output");
  expand_cmd->add_flag("--graph", ea.graph, "also print the tile graph");

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate the initial seed");
  std::string mutate_surface = "genus1", seq_text;
  std::optional<int> show;
  bool mutate_json = false;
  mutate_cmd->add_option("--surface", mutate_surface, "surface");
  mutate_cmd->add_option("--seq", seq_text, "mutation sequence, e.g. 1,3");
  mutate_cmd->add_option("--show", show, "print only x_k");
  mutate_cmd->add_flag("--json", mutate_json, "JSON output");
  std::string find_arc;
  int depth = 6;
  mutate_cmd->add_option("--find", find_arc,
                         "search for a sequence producing this arc instead");
  mutate_cmd->add_option("--depth", depth, "search depth for --find (<= 10)");

  auto* surface_cmd =
      app.add_subcommand("surface", "describe a builtin triangulation");
  std::optional<int> genus;
  std::string surface_name = "genus1";
  bool print = false;
  surface_cmd->add_option("--genus", genus, "genus g >= 1")
      ->check(CLI::PositiveNumber);
  surface_cmd->add_option("--name", surface_name, "builtin name");
  surface_cmd->add_flag("--print", print, "print the surface as JSON");

  auto* derive_cmd = app.add_subcommand(
      "derive-w", "search the genus-2 fixture for the W arcs");
  int max_len = 12;
  derive_cmd->add_option("--max-len", max_len, "longest crossing sequence");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return RunVerify(case_name, verify_json, seed);
    if (*expand_cmd) return RunExpand(ea);
    if (*mutate_cmd && !find_arc.empty()) {
      return RunFind(mutate_surface, find_arc, depth);
    }
    if (*mutate_cmd)
      return RunMutate(mutate_surface, seq_text, show, mutate_json);
    if (*surface_cmd) return RunSurface(genus, surface_name, print);
    if (*derive_cmd) return RunDeriveW(max_len);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
