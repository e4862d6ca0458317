// Copyright 2026 The stabdet Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "stabdet/determination.hpp"
#include "stabdet/errors.hpp"

namespace stabdet::cli {
namespace {

struct CommonOptions {
  double tolerance = 1e-9;
  std::optional<int> cap;
  bool json = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--tol", o.tolerance, "Absolute tolerance for every equality check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap", o.cap, "Largest qubit count for dense vectors and matrices")->check(CLI::Range(1, 16));
  cmd->add_flag("--json", o.json, "Emit a machine-readable summary instead of text");
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

DenseCaps caps_for(const CommonOptions& o) {
  DenseCaps caps = DenseCaps::from_environment();
  if (o.cap) caps.vector_qubits = caps.matrix_qubits = static_cast<std::size_t>(*o.cap);
  return caps;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return is;
}

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
  auto is = open_input(path);
  try {
    return reader(is);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::vector<IndexSet> supports_of(const GeneratorSet& gens) {
  std::vector<IndexSet> out;
  for (const auto& m : gens) out.push_back(support(m));
  return out;
}

// --- state -----------------------------------------------------------------

struct StateArgs {
  std::string graph;
};

int cmd_state(const StateArgs& a, const CommonOptions& o, std::ostream& out) {
  const Graph g = read_file(a.graph, [](std::istream& is) { return read_graph_file(is); });
  const DenseCaps caps = caps_for(o);
  const ComplexVector psi = state_vector(g, caps);
  require_matrix_cap(g.n(), caps);
  const ComplexMatrix rho = outer_product(psi);
  if (o.json) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["edges"] = g.edges();
    std::vector<std::string> amps;
    for (Eigen::Index i = 0; i < psi.size(); ++i) amps.push_back(format_complex(psi(i)));
    j["amplitudes"] = amps;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "# state vector, qubit 0 most significant\n";
  write_vector(out, psi);
  out << "# density matrix\n";
  write_matrix(out, rho);
  return kExitOk;
}

// --- rdm -------------------------------------------------------------------

struct RdmArgs {
  std::string gens;
  std::vector<std::string> omegas;
};

int cmd_rdm(const RdmArgs& a, const CommonOptions& o, std::ostream& out) {
  const GeneratorSet gens = read_file(a.gens, [](std::istream& is) { return read_generator_file(is); });
  require_valid(gens);
  std::vector<IndexSet> omegas;
  for (const auto& text : a.omegas) omegas.push_back(parse_index_set(text));
  if (omegas.empty()) omegas = supports_of(gens);
  const DenseCaps caps = caps_for(o);
  RdmConstraintSet rdms(gens.n());
  for (const auto& omega : omegas) {
    if (omega.empty()) throw std::invalid_argument("subsystem must be nonempty");
    if (omega.back() >= gens.n()) {
      throw std::out_of_range("subsystem {" + format_index_set(omega) + "} out of range for n=" +
                              std::to_string(gens.n()));
    }
    rdms.add(omega, stabilizer_rdm(gens, omega, caps));
  }
  if (o.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [omega, rho] : rdms.constraints()) {
      std::vector<std::vector<std::string>> rows;
      for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        rows.emplace_back();
        for (Eigen::Index c = 0; c < rho.cols(); ++c) rows.back().push_back(format_complex(rho(r, c)));
      }
      j.push_back({{"omega", omega}, {"matrix", rows}});
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  write_constraint_file(out, rdms);
  return kExitOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string graph;
  std::string rdm;
  std::string gens;
  bool pure = false;
};

int exit_code(ReconstructionStatus s) {
  switch (s) {
    case ReconstructionStatus::kDetermined:
      return kExitOk;
    case ReconstructionStatus::kInconsistent:
      return kExitInconsistent;
    case ReconstructionStatus::kUnderdetermined:
      return kExitUnderdetermined;
  }
  return kExitInconsistent;
}

int cmd_check(const CheckArgs& a, const CommonOptions& o, std::ostream& out) {
  const Graph g = read_file(a.graph, [](std::istream& is) { return read_graph_file(is); });
  GeneratorSet gens = canonical_generators(g);
  if (!a.gens.empty()) {
    gens = read_file(a.gens, [](std::istream& is) { return read_generator_file(is); });
    if (gens.n() != g.n()) throw std::invalid_argument("generator file and graph disagree on n");
  }
  ForcingOptions options;
  options.tolerance = o.tolerance;
  options.caps = caps_for(o);

  RdmConstraintSet rdms;
  const bool self_check = a.rdm.empty();
  if (self_check) {
    require_matrix_cap(g.n(), options.caps);
    rdms = RdmConstraintSet::from_state(density_matrix(canonical_generators(g), options.caps), supports_of(gens));
  } else {
    const std::size_t n = g.n();
    rdms = read_file(a.rdm, [n](std::istream& is) { return read_constraint_file(is, n); });
  }

  const ReconstructionReport report =
      a.pure ? forcing_chain_pure(g, gens, rdms, options) : forcing_chain_mixed(g, gens, rdms, options);

  std::map<std::string, int> per_rule;
  int parameters = 0;
  for (const auto& step : report.log) {
    ++per_rule[to_string(step.rule)];
    parameters += step.parameters;
  }

  if (o.json) {
    nlohmann::ordered_json j;
    j["status"] = to_string(report.status);
    j["chain"] = a.pure ? "pure" : "mixed";
    j["n"] = g.n();
    j["residual"] = report.max_residual;
    j["violated_rule"] = report.violated_rule;
    j["message"] = report.message;
    j["log_steps"] = report.log.size();
    j["parameters"] = parameters;
    j["rules"] = per_rule;
    out << j.dump(2) << '\n';
    return exit_code(report.status);
  }

  out << "graph: n=" << g.n() << " edges=" << g.edges().size() << '\n';
  out << "chain: " << (a.pure ? "pure" : "mixed") << '\n';
  out << "marginals:";
  for (const auto& omega : rdms.subsystems()) out << " {" << format_index_set(omega) << '}';
  out << (self_check ? " (self-check)" : "") << '\n';
  out << "status: " << to_string(report.status) << '\n';
  if (!report.violated_rule.empty()) {
    out << "violated rule: " << report.violated_rule << '\n';
    out << "detail: " << report.message << '\n';
  }
  out << "forcing log: " << report.log.size() << " steps, " << parameters << " real parameters\n";
  for (const auto& [rule, count] : per_rule) out << "  " << rule << ": " << count << '\n';
  out << report.summary_line() << '\n';
  return exit_code(report.status);
}

// --- minimal ---------------------------------------------------------------

struct MinimalArgs {
  std::string gens;
};

int cmd_minimal(const MinimalArgs& a, const CommonOptions& o, std::ostream& out) {
  const GeneratorSet gens = read_file(a.gens, [](std::istream& is) { return read_generator_file(is); });
  require_valid(gens);
  const auto kept = minimal_support_indices(gens);
  if (o.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto s : kept) j.push_back({{"generator", s}, {"support", support(gens[s])}});
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (auto s : kept) out << format_index_set(support(gens[s])) << '\n';
  return kExitOk;
}

// --- counterexample --------------------------------------------------------

int cmd_counterexample(const CommonOptions& o, std::ostream& out) {
  const CounterexampleReport r = verify_counterexample();
  if (o.json) {
    nlohmann::ordered_json j;
    j["trace_distance"] = r.trace_distance;
    j["states_differ"] = r.states_differ;
    j["listed_marginals_agree"] = r.listed_marginals_agree;
    j["distinguishing_supports"] = r.distinguishing_supports;
    j["full_support_status"] = to_string(r.full_support_check.status);
    j["all_hold"] = r.all_hold();
    out << j.dump(2) << '\n';
    return r.all_hold() ? kExitOk : kExitInconsistent;
  }
  out << "graph state: path 0-1-2-3, generators XZII ZXZI IZXZ IIZX\n";
  out << "impostor: mixed state stabilized by XZII ZXZI IIZX\n";
  out << "trace distance: " << fmt("%.6f", r.trace_distance) << (r.states_differ ? " (> 0.1)" : " (<= 0.1)")
      << '\n';
  out << "listed marginals:\n";
  for (const auto& cmp : r.listed_marginals) {
    out << "  {" << format_index_set(cmp.omega) << "} max deviation " << fmt("%.3e", cmp.max_deviation)
        << (cmp.agrees ? " agree" : " differ") << '\n';
  }
  out << "generator supports:\n";
  for (const auto& cmp : r.generator_supports) {
    out << "  {" << format_index_set(cmp.omega) << "} max deviation " << fmt("%.3e", cmp.max_deviation)
        << (cmp.agrees ? " agree" : " differ") << '\n';
  }
  out << "full-support check on the graph state: " << to_string(r.full_support_check.status) << '\n';
  out << "findings: " << (r.all_hold() ? "all hold" : "FAILED") << '\n';
  return r.all_hold() ? kExitOk : kExitInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer and graph states: marginals and their determination", "stabdet"};
  app.require_subcommand(1);
  CommonOptions common;

  StateArgs state;
  auto* state_cmd = app.add_subcommand("state", "Graph state vector and density matrix");
  state_cmd->add_option("graph", state.graph, "Graph file")->required();
  add_common(state_cmd, common);

  RdmArgs rdm;
  auto* rdm_cmd = app.add_subcommand("rdm", "Reduced density matrices of a stabilizer state");
  rdm_cmd->add_option("generators", rdm.gens, "Generator file")->required();
  rdm_cmd->add_option("--omega", rdm.omegas, "Subsystem such as 0,1 (repeatable; default: generator supports)")
      ->take_all()
      ->allow_extra_args(false);
  add_common(rdm_cmd, common);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Reconstruct a graph state from generator-support marginals");
  check_cmd->add_option("graph", check.graph, "Graph file")->required();
  check_cmd->add_option("--rdm", check.rdm, "Constraint file (default: marginals of the graph state itself)");
  check_cmd->add_option("--gens", check.gens, "Generating set to use (default: canonical generators)");
  check_cmd->add_flag("--pure", check.pure, "Run the pure-state chain instead of the mixed-state chain");
  add_common(check_cmd, common);

  MinimalArgs minimal;
  auto* minimal_cmd = app.add_subcommand("minimal", "Minimal support set of a generating set");
  minimal_cmd->add_option("generators", minimal.gens, "Generator file")->required();
  add_common(minimal_cmd, common);

  auto* counter_cmd = app.add_subcommand("counterexample", "Four-qubit path graph versus its mixed impostor");
  add_common(counter_cmd, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "error: cannot write '" << common.out_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (*state_cmd) return cmd_state(state, common, *sink);
    if (*rdm_cmd) return cmd_rdm(rdm, common, *sink);
    if (*check_cmd) return cmd_check(check, common, *sink);
    if (*minimal_cmd) return cmd_minimal(minimal, common, *sink);
    if (*counter_cmd) return cmd_counterexample(common, *sink);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace stabdet::cli
