// Copyright 2026 The qzoo Authors
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

#include "qzoo_cli/app.hpp"

#include <charconv>
#include <fstream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"
#include "qzoo/classify.hpp"
#include "qzoo/error.hpp"
#include "qzoo/measures.hpp"
#include "qzoo/zoo.hpp"
#include "qzoo_cli/report.hpp"
#include "qzoo_cli/state_file.hpp"

namespace qzoo::cli {

using nlohmann::json;

namespace {

std::vector<std::size_t> parse_cut(const std::string& text) {
  std::vector<std::size_t> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw Error(ErrorCode::InvalidCut, "cannot parse --cut '" + text + "'");
    }
    out.push_back(k);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<Bipartition> resolve_cut(const DimensionProfile& profile, const std::string& cut) {
  if (!cut.empty()) return Bipartition(profile, parse_cut(cut));
  if (profile.size() == 2) return Bipartition::first_subsystem(profile);
  return std::nullopt;
}

json cut_json(const Bipartition& cut) {
  json side_a = json::array();
  for (std::size_t k : cut.side_a()) side_a.push_back(k);
  return side_a;
}

json header(const std::string& command, const LoadedState& loaded, std::uint64_t seed) {
  json input = {{"source", loaded.source}, {"dims", json::array()}, {"digest", loaded.digest}};
  for (std::size_t d : loaded.state.profile().dims()) input["dims"].push_back(d);
  if (loaded.entry) {
    json catalog = {{"name", loaded.entry->name}, {"params", loaded.entry->params}};
    catalog["expected_verdict"] =
        loaded.entry->expected_verdict ? json(to_string(*loaded.entry->expected_verdict)) : json();
    input["catalog"] = std::move(catalog);
  }
  return {{"tool", kToolName}, {"version", kToolVersion}, {"command", command},
          {"input", std::move(input)}, {"seed", seed}};
}

json decision_json(Decision d, bool certified) {
  return {{"decision", to_string(d)}, {"certified", certified}};
}

int cmd_classify(const std::string& path, std::uint64_t seed, double tol, const std::string& cut,
                 std::ostream& out) {
  const LoadedState loaded = load_state(path);
  const DensityMatrix& rho = loaded.state;
  ClassifyOptions options;
  options.tol_diag = tol;
  options.search.seed = seed;
  options.product.seed = seed;
  const ClassificationReport r = classify_zoo(rho, options);

  json report = header("classify", loaded, seed);
  report["verdict"] = to_string(r.verdict);
  report["definite"] = r.definite;
  report["witness"] = witness_json(r.witness);

  json diag;
  diag["notes"] = r.diagnostics;
  diag["tol_diag"] = tol;
  json classical = decision_json(r.classical.decision, r.classical.certified);
  classical["stage"] = to_string(r.classical.stage);
  classical["residual"] = r.classical.residual;
  diag["is_classical"] = std::move(classical);
  if (r.cpb) {
    json cpb = decision_json(r.cpb->decision, r.cpb->certified);
    cpb["overlap"] = r.cpb->overlap;
    diag["is_cpb_state"] = std::move(cpb);
  }
  if (r.upb) {
    json upb = decision_json(r.upb->decision, r.upb->certified);
    upb["kernel_best_overlap"] = r.upb->kernel_best_overlap;
    diag["is_upb_state"] = std::move(upb);
  }
  json ppt = json::array();
  for (const auto& p : r.ppt) {
    ppt.push_back({{"cut", cut_json(p.cut)},
                   {"min_eigenvalue", p.min_eigenvalue},
                   {"separability", to_string(p.separability)}});
  }
  diag["ppt"] = std::move(ppt);

  json measures;
  measures["entropy"] = entropy(rho);
  SearchConfig search;
  search.seed = seed;
  const QuantumnessResult q = q_rel(rho, search);
  measures["q_rel"] = q.value;
  diag["q_rel"] = {{"restarts", q.restarts}, {"best_restart", q.best_restart},
                   {"converged", q.converged}};
  if (const auto c = resolve_cut(rho.profile(), cut)) {
    measures["q_schmidt"] = q_schmidt(rho, *c);
    diag["schmidt_cut"] = cut_json(*c);
    diag["schmidt_tie_break"] = schmidt_basis(rho, *c).tie_break_applied;
  }
  report["diagnostics"] = std::move(diag);
  report["measures"] = std::move(measures);
  out << report.dump(2) << "\n";
  return r.definite ? kDefinite : kInconclusive;
}

int cmd_measure(const std::string& path, const std::string& measure, std::uint64_t seed,
                const std::string& cut, std::ostream& out) {
  const LoadedState loaded = load_state(path);
  const DensityMatrix& rho = loaded.state;
  json report = header("measure", loaded, seed);
  report["measure"] = measure;
  json diag = json::object();
  json witness;
  double value = 0.0;
  if (measure == "entropy") {
    value = entropy(rho);
  } else if (measure == "qrel") {
    SearchConfig search;
    search.seed = seed;
    const QuantumnessResult q = q_rel(rho, search);
    value = q.value;
    witness = classical_basis_json(q.argmin_basis);
    diag = {{"restarts", q.restarts}, {"best_restart", q.best_restart},
            {"converged", q.converged}};
  } else {
    const auto c = resolve_cut(rho.profile(), cut);
    if (!c) {
      throw Error(ErrorCode::MissingCut, "qschmidt on " + std::to_string(rho.profile().size()) +
                                             " subsystems needs --cut");
    }
    value = q_schmidt(rho, *c);
    const SchmidtBasis sb = schmidt_basis(rho, *c);
    witness = classical_basis_json(sb.basis);
    diag = {{"cut", cut_json(*c)}, {"tie_break_applied", sb.tie_break_applied}};
  }
  report["value"] = number_json(value);
  report["witness"] = witness;
  report["diagnostics"] = std::move(diag);
  report["measures"] = {{measure == "qrel" ? "q_rel" : measure == "qschmidt" ? "q_schmidt"
                                                                              : "entropy",
                         number_json(value)}};
  out << report.dump(2) << "\n";
  return kDefinite;
}

int cmd_zoo_list(std::ostream& out) {
  json list = json::array();
  for (const auto& info : list_catalog()) {
    json params = json::array();
    for (const auto& p : info.params) {
      params.push_back({{"name", p.name}, {"default", p.default_value}, {"range", p.range}});
    }
    const CatalogEntry e = build(info.name);
    list.push_back({{"name", info.name},
                    {"dims", e.state.profile().dims()},
                    {"params", std::move(params)},
                    {"annotations", info.annotations},
                    {"origin", info.origin},
                    {"expected_verdict",
                     e.expected_verdict ? json(to_string(*e.expected_verdict)) : json()}});
  }
  out << list.dump(2) << "\n";
  return kDefinite;
}

int cmd_zoo_emit(const std::string& name, const std::vector<std::string>& raw_params,
                 const std::string& out_path, std::ostream& out) {
  Params params;
  for (const auto& kv : raw_params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidArgument, "--param expects k=v, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const CatalogEntry e = build(name, params);
  json doc = to_state_file(e.state);
  doc["catalog"] = {{"name", e.name}, {"params", e.params}};
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
    file << text;
  }
  return kDefinite;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify multipartite states into the zoo of separable states", "qzoo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string path;
  std::string cut;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string measure;
  std::string name;
  std::vector<std::string> params;
  std::string out_path;

  auto* classify = app.add_subcommand("classify", "Place a state in the zoo and report why");
  classify->add_option("path", path, "State file, or zoo:<name>")->required();
  classify->add_option("--seed", seed, "Optimizer seed")->capture_default_str();
  classify->add_option("--tol", tol, "Off-diagonal tolerance for classicality")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify->add_option("--cut", cut, "Side A of the Schmidt cut, e.g. 0,2");

  auto* measure_cmd = app.add_subcommand("measure", "Evaluate one quantumness measure");
  measure_cmd->add_option("path", path, "State file, or zoo:<name>")->required();
  measure_cmd->add_option("--measure", measure, "qrel, qschmidt or entropy")
      ->required()
      ->check(CLI::IsMember({"qrel", "qschmidt", "entropy"}));
  measure_cmd->add_option("--cut", cut, "Side A of the Schmidt cut, e.g. 0,2");
  measure_cmd->add_option("--seed", seed, "Optimizer seed")->capture_default_str();

  auto* zoo = app.add_subcommand("zoo", "Catalog of named states");
  zoo->require_subcommand(1);
  auto* list = zoo->add_subcommand("list", "List catalog entries");
  auto* emit = zoo->add_subcommand("emit", "Write a catalog state as a state file");
  emit->add_option("name", name, "Catalog name")->required();
  emit->add_option("--param", params, "Parameter as k=v (repeatable)");
  emit->add_option("--out", out_path, "Output path (default: stdout)");

  std::vector<std::string> argv_storage{"qzoo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kDefinite : kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify(path, seed, tol, cut, out);
    if (measure_cmd->parsed()) return cmd_measure(path, measure, seed, cut, out);
    if (list->parsed()) return cmd_zoo_list(out);
    if (emit->parsed()) return cmd_zoo_emit(name, params, out_path, out);
  } catch (const Error& e) {
    err << "qzoo: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "qzoo: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace qzoo::cli
