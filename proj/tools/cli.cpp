// Copyright 2026 The Rainbow Workbench Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/proofkit.hpp"
#include "rainbow/rainbow.hpp"

namespace rainbow::cli {
namespace {

// A bad file, bad format or failed precondition in the data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

Instance read_instance(const std::string& path) {
  auto inst = instance_from_string(read_file(path));
  if (auto bad = validate_instance(inst); !bad.empty()) {
    throw DataError("invalid instance: " + bad.front().message);
  }
  return inst;
}

LatinSquare read_latin(const std::string& path, std::ostream& err) {
  auto ls = latin_from_text(read_file(path));
  if (auto bad = validate_latin(ls); !bad.empty()) {
    for (const auto& v : bad) err << "latin: " << v.message << '\n';
    throw DataError("not a Latin square (" + std::to_string(bad.size()) + " violations)");
  }
  return ls;
}

std::string transversal_to_string(const PartialTransversal& pt) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : pt.entries()) arr.push_back({c.row, c.col});
  return dump_canonical(arr);
}

PartialTransversal transversal_from_string(const std::string& text) {
  const auto j = parse_json(text);
  if (!j.is_array()) throw FormatError("transversal must be an array of [row, col]");
  std::vector<Cell> cells;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw FormatError("cells are [row, col]");
    cells.push_back(
        {rainbow::detail::json_int(c[0], "row"), rainbow::detail::json_int(c[1], "col")});
  }
  return PartialTransversal(std::move(cells));
}

ordered_json report_to_json(const ExperimentReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["ell"] = r.ell;
  j["mode"] = to_string(r.mode);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["counterexample_found"] = r.counterexample.has_value();
  j["instances_checked"] = r.instances_checked;
  j["elapsed_ms"] = r.elapsed.count();
  if (r.counterexample_seed) j["counterexample_seed"] = *r.counterexample_seed;
  if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
  return j;
}

struct GenArgs {
  int n = 0;
  int m = 0;
  std::optional<int> a_size;
  std::optional<int> b_size;
  std::uint64_t seed = 0;
  std::string output;
};

struct SolveArgs {
  std::string input;
  int target = 0;
  std::uint64_t budget_nodes = kDefaultAugmentNodes;
  std::uint64_t seed = 0;
  bool oracle_fallback = false;
  int workers = 1;
  std::string output;
};

struct ExperimentArgs {
  int n = 0;
  int m = 0;
  int ell = 0;
  std::string mode = "randomized";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string witness;
  std::string output;
};

struct TraceArgs {
  std::string input;
  std::string matching;
  std::string eps = "1/2";
  std::string mode = "relaxed";
  int max_steps = 8;
  std::uint64_t seed = 0;
  std::string output;
};

struct ConvertArgs {
  std::string input;
  std::string square;
  std::string output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const auto inst = read_instance(a.input);
  if (a.target < 0 || a.target > inst.n_colours()) {
    throw DataError("--target must lie in [0, n_colours]");
  }
  const auto res = solve(inst, a.target, SearchBudget::nodes(a.budget_nodes),
                         {a.seed, a.oracle_fallback, a.workers});
  ordered_json j;
  j["target"] = a.target;
  j["size"] = res.matching.size();
  j["method"] = to_string(res.method);
  j["augment_steps"] = res.augment_steps;
  j["certified_optimal"] = res.certified_optimal;
  j["matching"] = to_json(res.matching);
  emit(a.output, dump_canonical(j), out);
  return res.matching.size() >= static_cast<std::size_t>(a.target) ? kExitOk : kExitUnmet;
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  const auto mode = a.mode == "exhaustive" ? SweepMode::exhaustive : SweepMode::randomized;
  const auto rep = estimate_mu(a.n, a.ell, a.m, mode, a.trials, a.seed);
  if (rep.counterexample && !a.witness.empty()) {
    emit(a.witness, instance_to_string(*rep.counterexample), out);
  }
  if (a.format == "json") {
    emit(a.output, dump_canonical(report_to_json(rep)), out);
  } else {
    emit(a.output, std::string(experiment_csv_header()) + "\n" + to_csv_row(rep) + "\n", out);
  }
  return kExitOk;
}

int cmd_trace(const TraceArgs& a, std::ostream& out) {
  using namespace proofkit;
  auto inst = std::make_shared<const Instance>(read_instance(a.input));
  if (inst->n_colours() < 1) throw DataError("the instance has no colours");
  RainbowMatching r;
  if (a.matching.empty()) {
    // Greedy over colours 1..n-1, so that colour 0 stays free.
    auto classes = inst->classes();
    classes[0].clear();
    r = greedy_rainbow(Instance(inst->a_size(), inst->b_size(), classes), a.seed);
  } else {
    r = matching_from_string(read_file(a.matching));
  }
  const auto st = initial_state(inst, r, Epsilon::parse(a.eps),
                                a.mode == "strict" ? Mode::strict : Mode::relaxed);
  const auto recs = run_trace(st, a.max_steps);
  emit(a.output, dump_canonical(trace_to_json(*inst, recs)), out);
  return kExitOk;
}

int cmd_verify_trace(const std::string& input, std::ostream& out) {
  const auto v = proofkit::verify_trace(parse_json(read_file(input)));
  for (const auto& f : v.failures) out << f << '\n';
  if (!v.ok) return kExitUnmet;
  out << "ok: " << v.steps << " steps verified\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow matching workbench"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance as JSON");
  gen->require_subcommand(1);
  GenArgs ga;
  auto* gen_drisko_cmd =
      gen->add_subcommand("drisko", "2n-2 classes with no rainbow matching of size n");
  gen_drisko_cmd->add_option("--n", ga.n, "Order")->required();
  gen_drisko_cmd->add_option("-o,--output", ga.output, "Output file (default stdout)");
  gen_drisko_cmd->callback([&] {
    action = [&] {
      emit(ga.output, instance_to_string(gen_drisko(ga.n)), out);
      return kExitOk;
    };
  });
  auto* gen_cyclic_cmd =
      gen->add_subcommand("cyclic", "Graph of the cyclic Latin square of order n");
  gen_cyclic_cmd->add_option("--n", ga.n, "Order")->required();
  gen_cyclic_cmd->add_option("-o,--output", ga.output, "Output file (default stdout)");
  gen_cyclic_cmd->callback([&] {
    action = [&] {
      if (ga.n < 1) throw DataError("--n must be >= 1");
      emit(ga.output, instance_to_string(latin_to_instance(gen_cyclic(ga.n))), out);
      return kExitOk;
    };
  });
  auto* gen_random_cmd = gen->add_subcommand("random", "n random matchings of size m");
  gen_random_cmd->add_option("--n", ga.n, "Number of classes")->required();
  gen_random_cmd->add_option("--m", ga.m, "Class size")->required();
  gen_random_cmd->add_option("--a-size", ga.a_size, "Size of A (default n + m)");
  gen_random_cmd->add_option("--b-size", ga.b_size, "Size of B (default n + m)");
  gen_random_cmd->add_option("--seed", ga.seed, "Seed");
  gen_random_cmd->add_option("-o,--output", ga.output, "Output file (default stdout)");
  gen_random_cmd->callback([&] {
    action = [&] {
      const int a_size = ga.a_size.value_or(ga.n + ga.m);
      const int b_size = ga.b_size.value_or(ga.n + ga.m);
      emit(ga.output, instance_to_string(gen_random_instance(ga.n, ga.m, a_size, b_size, ga.seed)),
           out);
      return kExitOk;
    };
  });

  // solve
  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Greedy, augment, then optionally the oracle");
  solve_cmd->add_option("--in", sa.input, "Instance JSON")->required();
  solve_cmd->add_option("--target", sa.target, "Required matching size")->required();
  solve_cmd->add_option("--budget-nodes", sa.budget_nodes, "Node budget per search stage");
  solve_cmd->add_option("--seed", sa.seed, "Greedy tie-break seed");
  solve_cmd->add_flag("--oracle-fallback", sa.oracle_fallback, "Run the exact oracle last");
  solve_cmd->add_option("--workers", sa.workers, "Oracle worker threads")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("-o,--output", sa.output, "Output file (default stdout)");
  solve_cmd->callback([&] { action = [&] { return cmd_solve(sa, out); }; });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Sweep for counterexamples to a size bound");
  exp->require_subcommand(1);
  ExperimentArgs ea;
  auto add_common = [&ea](CLI::App* c) {
    c->add_option("--n", ea.n, "Number of classes")->required();
    c->add_option("--m", ea.m, "Class size")->required();
    c->add_option("--mode", ea.mode, "exhaustive or randomized")
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    c->add_option("--trials", ea.trials, "Random trials");
    c->add_option("--seed", ea.seed, "Seed");
    c->add_option("--format", ea.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--witness", ea.witness, "Write a counterexample instance here");
    c->add_option("-o,--output", ea.output, "Output file (default stdout)");
  };
  auto* exp_f = exp->add_subcommand("f", "Rainbow matching of size n");
  add_common(exp_f);
  exp_f->callback([&] { action = [&] { return cmd_experiment(ea, out); }; });
  auto* exp_mu = exp->add_subcommand("mu", "Rainbow matching of size n - ell");
  add_common(exp_mu);
  exp_mu->add_option("--ell", ea.ell, "Deficiency")->required();
  exp_mu->callback([&] { action = [&] { return cmd_experiment(ea, out); }; });

  // verify-trace
  std::string trace_in;
  auto* verify_cmd = app.add_subcommand("verify-trace", "Re-check every snapshot of a trace");
  verify_cmd->add_option("--in", trace_in, "Trace JSON")->required();
  verify_cmd->callback([&] { action = [&] { return cmd_verify_trace(trace_in, out); }; });

  // trace
  TraceArgs ta;
  auto* trace_cmd = app.add_subcommand("trace", "Record extension steps from a rainbow matching");
  trace_cmd->add_option("--in", ta.input, "Instance JSON")->required();
  trace_cmd->add_option("--matching", ta.matching,
                        "Root matching JSON avoiding colour 0 (default greedy without colour 0)");
  trace_cmd->add_option("--eps", ta.eps, "Epsilon as p/q");
  trace_cmd->add_option("--mode", ta.mode, "strict or relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  trace_cmd->add_option("--max-steps", ta.max_steps, "Maximum number of extensions")
      ->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--seed", ta.seed, "Greedy tie-break seed");
  trace_cmd->add_option("-o,--output", ta.output, "Output file (default stdout)");
  trace_cmd->callback([&] { action = [&] { return cmd_trace(ta, out); }; });

  // convert
  auto* conv = app.add_subcommand("convert", "Latin squares and transversals");
  conv->require_subcommand(1);
  ConvertArgs ca;
  auto* l2i = conv->add_subcommand("latin-to-instance", "Latin square text to instance JSON");
  l2i->add_option("--in", ca.input, "Latin square text")->required();
  l2i->add_option("-o,--output", ca.output, "Output file (default stdout)");
  l2i->callback([&] {
    action = [&] {
      emit(ca.output, instance_to_string(latin_to_instance(read_latin(ca.input, err))), out);
      return kExitOk;
    };
  });
  auto* i2l = conv->add_subcommand("instance-to-latin", "Instance JSON to Latin square text");
  i2l->add_option("--in", ca.input, "Instance JSON")->required();
  i2l->add_option("-o,--output", ca.output, "Output file (default stdout)");
  i2l->callback([&] {
    action = [&] {
      emit(ca.output, latin_to_text(instance_to_latin(read_instance(ca.input))), out);
      return kExitOk;
    };
  });
  auto* r2t = conv->add_subcommand("rainbow-to-transversal",
                                   "Rainbow matching JSON to transversal cells [[row, col]]");
  r2t->add_option("--square", ca.square, "Latin square text")->required();
  r2t->add_option("--in", ca.input, "Rainbow matching JSON")->required();
  r2t->add_option("-o,--output", ca.output, "Output file (default stdout)");
  r2t->callback([&] {
    action = [&] {
      const auto ls = read_latin(ca.square, err);
      const auto r = matching_from_string(read_file(ca.input));
      emit(ca.output, transversal_to_string(rainbow_to_transversal(ls, r)), out);
      return kExitOk;
    };
  });
  auto* t2r = conv->add_subcommand("transversal-to-rainbow",
                                   "Transversal cells [[row, col]] to rainbow matching JSON");
  t2r->add_option("--square", ca.square, "Latin square text")->required();
  t2r->add_option("--in", ca.input, "Transversal JSON")->required();
  t2r->add_option("-o,--output", ca.output, "Output file (default stdout)");
  t2r->callback([&] {
    action = [&] {
      const auto ls = read_latin(ca.square, err);
      const auto pt = transversal_from_string(read_file(ca.input));
      emit(ca.output, matching_to_string(transversal_to_rainbow(ls, pt)), out);
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rainbow::cli
