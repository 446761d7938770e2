#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ncsynth/dot.hpp"
#include "ncsynth/formats.hpp"
#include "ncsynth/instances.hpp"
#include "ncsynth/planner.hpp"

namespace ncsynth::cli {
namespace {

struct DemandFlags {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
  Demand demand() const { return {h0, h1, h2}; }
};

void add_demand(CLI::App* cmd, DemandFlags& d, bool required) {
  auto* a = cmd->add_option("--h0", d.h0, "rate of X0, wanted by both terminals");
  auto* b = cmd->add_option("--h1", d.h1, "rate of X1, wanted by terminal 1");
  auto* c = cmd->add_option("--h2", d.h2, "rate of X2, wanted by terminal 2");
  for (auto* opt : {a, b, c}) {
    opt->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  }
}

void print_report(const FeasibilityReport& r, std::ostream& out) {
  auto triple = [](const std::array<int, 3>& v) {
    return std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]);
  };
  if (r.feasible) {
    out << "FEASIBLE (cuts " << triple(r.cuts) << " ≥ " << triple(r.required) << ")\n";
    return;
  }
  out << "INFEASIBLE (cuts " << triple(r.cuts) << ", required " << triple(r.required) << ")\n";
  for (const auto& v : r.violated) {
    out << "  " << v.name << ": " << v.cut << " = " << v.actual << " < " << v.required << " (short by "
        << v.shortfall() << ")\n";
  }
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

int cmd_check(const std::string& net_path, const DemandFlags& flags, std::ostream& out) {
  Network net = load_network(net_path);
  FeasibilityReport report = check_feasibility(net, flags.demand());
  print_report(report, out);
  return report.feasible ? kOk : kInfeasible;
}

int cmd_synthesize(const std::string& net_path, const DemandFlags& flags, std::uint64_t seed, unsigned field_bits,
                   const std::string& out_path, const std::string& trace_path, std::ostream& out,
                   std::ostream& err) {
  Network net = load_network(net_path);
  SynthesisAudit audit;
  try {
    audit = synthesize_audited(net, flags.demand(), seed, {field_bits, {}});
  } catch (const InfeasibleDemand& e) {
    print_report(e.report(), out);
    return kInfeasible;
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    err << "synthesis failed: " << e.what() << "\n";
    return kSynthesisFailure;
  }
  std::string text = dump_plan(audit.plan);
  if (out_path.empty()) {
    out << text;
  } else if (!write_file(out_path, text, err)) {
    return kInputError;
  }
  if (!trace_path.empty()) {
    std::string trace = trace_to_jsonl(audit.augmented.net, "x1", audit.passes.x1_pass.fixpoint.trace) +
                        trace_to_jsonl(audit.passes.x2_graph.net, "x2", audit.passes.x2_pass.fixpoint.trace);
    if (!write_file(trace_path, trace, err)) return kInputError;
  }
  return kOk;
}

int cmd_verify(const std::string& net_path, const std::string& plan_path, std::size_t trials, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
  Network net = load_network(net_path);
  TransferPlan plan = load_plan(plan_path);
  VerificationReport report;
  try {
    report = verify_plan(net, plan, trials, seed);
  } catch (const PlanMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  out << "verified " << report.passed << "/" << report.trials << " trials\n";
  for (const auto& f : report.failures) {
    out << "  trial " << f.trial << ": terminal " << f.terminal << " mismatch: " << f.detail << "\n";
  }
  return report.ok() ? kOk : kVerificationFailure;
}

int cmd_export_dot(const std::string& net_path, const std::string& plan_path, bool augmented,
                   const DemandFlags& flags, const std::string& out_path, std::ostream& out, std::ostream& err) {
  Network net = load_network(net_path);
  std::optional<TransferPlan> plan;
  if (!plan_path.empty()) {
    plan = load_plan(plan_path);
    try {
      check_plan(net, *plan);
    } catch (const PlanMismatchError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  DotOptions options;
  options.plan = plan ? &*plan : nullptr;
  if (augmented) options.augmented = plan ? plan->demand : flags.demand();
  std::string text = to_dot(net, options);
  if (out_path.empty()) {
    out << text;
    return kOk;
  }
  return write_file(out_path, text, err) ? kOk : kInputError;
}

int cmd_generate(int count, std::uint64_t seed, const std::string& dir, std::ostream& out, std::ostream& err) {
  Rng rng(seed);
  nlohmann::json manifest = nlohmann::json::array();
  int made = 0;
  while (made < count) {
    Network net = random_dag(rng);
    Demand d{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    if (d.total() == 0 || !check_feasibility(net, d).feasible) continue;
    char name[32];
    std::snprintf(name, sizeof name, "instance_%03d.json", made);
    if (!write_file(dir + "/" + name, network_to_json(net).dump(2) + "\n", err)) return kInputError;
    manifest.push_back({{"file", name}, {"h0", d.h0}, {"h1", d.h1}, {"h2", d.h2}});
    ++made;
  }
  if (!write_file(dir + "/manifest.json", manifest.dump(2) + "\n", err)) return kInputError;
  out << "wrote " << made << " feasible instances to " << dir << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Routing + network coding synthesizer for one source and two terminals"};
  app.name("ncsynth");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string net_path;
  std::string plan_path;
  std::string out_path;
  std::string trace_path;
  DemandFlags flags;
  std::uint64_t seed = 1;
  unsigned field_bits = 8;
  std::size_t trials = 100;
  bool augmented = false;
  int count = 50;

  auto* check = app.add_subcommand("check", "Decide feasibility of a demand from the three min-cuts");
  check->add_option("network", net_path, "network JSON file")->required();
  add_demand(check, flags, true);

  auto* synth = app.add_subcommand("synthesize", "Build a routing + coding plan");
  synth->add_option("network", net_path, "network JSON file")->required();
  add_demand(synth, flags, true);
  synth->add_option("--seed", seed, "random seed for coefficient selection")->capture_default_str();
  synth->add_option("--field-bits", field_bits, "initial field degree m of GF(2^m)")
      ->check(CLI::Range(1U, 16U))
      ->capture_default_str();
  synth->add_option("-o,--output", out_path, "plan file to write (default: stdout)");
  synth->add_option("--trace", trace_path, "write the rerouting trace as JSON lines");

  auto* verify = app.add_subcommand("verify", "Simulate a plan symbol by symbol and check decoding");
  verify->add_option("network", net_path, "network JSON file")->required();
  verify->add_option("plan", plan_path, "plan JSON file")->required();
  verify->add_option("--trials", trials, "random message tuples to simulate")->capture_default_str();
  verify->add_option("--seed", seed, "seed for the message stream")->capture_default_str();

  auto* dot = app.add_subcommand("export-dot", "Render the network (and optionally a plan) as Graphviz DOT");
  dot->add_option("network", net_path, "network JSON file")->required();
  dot->add_option("plan", plan_path, "plan JSON file");
  dot->add_flag("--augmented", augmented, "include virtual terminals and collectors");
  add_demand(dot, flags, false);
  dot->add_option("-o,--output", out_path, "DOT file to write (default: stdout)");

  auto* gen = app.add_subcommand("generate", "Write seeded random feasible instances");
  gen->add_option("--count", count, "number of instances")->capture_default_str();
  gen->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen->add_option("--out-dir", out_path, "target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(net_path, flags, out);
    if (synth->parsed()) return cmd_synthesize(net_path, flags, seed, field_bits, out_path, trace_path, out, err);
    if (verify->parsed()) return cmd_verify(net_path, plan_path, trials, seed, out, err);
    if (dot->parsed()) return cmd_export_dot(net_path, plan_path, augmented, flags, out_path, out, err);
    if (gen->parsed()) return cmd_generate(count, seed, out_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ncsynth::cli
