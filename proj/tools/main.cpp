#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cansub/error.hpp"
#include "cli/commands.hpp"
#include "cli/sweep.hpp"

namespace {

using cansub::Error;
using cansub::ErrorKind;
using namespace cansub::cli;

// Boolean fields that are self-checks rather than answers; false means exit 1.
bool checks_pass(const std::vector<Record>& records) {
  for (const auto& r : records) {
    for (const char* key : {"oracle_match", "fargues_match", "transcripts_replay"}) {
      if (r.contains(key) && !r[key].get<bool>()) return false;
    }
  }
  return true;
}

void emit(const std::vector<Record>& records, Format format, const std::string& out_path) {
  if (out_path.empty()) {
    write_records(std::cout, records, format);
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + out_path);
  write_records(out, records, format);
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical subgroup valuations, Hodge-Tate images and overconvergence regions"};
  app.set_help_flag("--help", "Print help and exit");
  app.require_subcommand(1);

  CommandArgs args;
  std::string format_name = "json-lines";
  std::string out_path;
  std::string config_path;
  bool inject_fault = false;

  auto common = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "Print help and exit");
    cmd->add_option("--format", format_name, "json-lines or csv")->check(CLI::IsMember({"json-lines", "csv"}));
    cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  };
  auto add_p = [&](CLI::App* cmd) { cmd->add_option("-p", args.p, "Prime")->required(); };
  auto add_h = [&](CLI::App* cmd) { cmd->add_option("-h", args.h, "Hasse valuation, 'a/b' in [0, 1]")->required(); };

  std::vector<std::pair<CLI::App*, std::function<std::vector<Record>(const CommandArgs&)>>> commands;

  auto* torsion = app.add_subcommand("torsion", "Valuation of a p^k-torsion point");
  add_p(torsion);
  add_h(torsion);
  torsion->add_option("-k", args.k, "Level")->required();
  torsion->add_option("-a", args.a, "Depth in the canonical tower");
  torsion->add_flag("--profile", args.profile, "One record per admissible depth");
  commands.emplace_back(torsion, cmd_torsion);

  auto* ht = app.add_subcommand("ht", "Valuation of the Hodge-Tate image");
  add_p(ht);
  add_h(ht);
  ht->add_option("-a", args.a, "Depth, integer or 'inf'")->required();
  ht->add_option("-m", args.m, "Modulus exponent for the ball check");
  ht->add_option("-c", args.c, "Ball scale exponent (default m)");
  ht->add_option("-u", args.u, "Weight for the invertibility verdict");
  commands.emplace_back(ht, cmd_ht);

  auto* region = app.add_subcommand("region", "Buzzard's v and region membership");
  add_p(region);
  add_h(region);
  region->add_option("-m", args.m, "Level of the region (default 1)");
  region->add_option("-v", args.v, "Radius to test membership against");
  region->add_flag("--non-canonical", args.non_canonical, "Use the non-canonical branch");
  commands.emplace_back(region, cmd_region);

  auto* succ = app.add_subcommand("succ", "One step of the radius successor map");
  add_p(succ);
  succ->add_option("-v", args.v, "Radius in (0, 1)")->required();
  commands.emplace_back(succ, cmd_succ);

  auto* cutoff = app.add_subcommand("cutoff", "Invertibility cutoff radius");
  add_p(cutoff);
  cutoff->add_option("-m", args.m, "Level")->required();
  cutoff->add_option("-c", args.c, "Weight exponent (default 1)");
  commands.emplace_back(cutoff, cmd_cutoff);

  auto* inject = app.add_subcommand("inject", "Determinant of the circle system");
  add_p(inject);
  commands.emplace_back(inject, cmd_inject);

  auto* plan = app.add_subcommand("plan", "Successor steps needed to reach p/(p+1)");
  add_p(plan);
  plan->add_option("-v", args.v, "Starting radius in (0, 1)")->required();
  commands.emplace_back(plan, cmd_plan);

  auto* sweep = app.add_subcommand("sweep", "Evaluate every invariant over a configured grid");
  sweep->add_option("--config", config_path, "JSON sweep config")->required();
  sweep->add_flag("--inject-fault", inject_fault, "Corrupt the closed-form torsion values");

  for (auto& [cmd, _] : commands) common(cmd);
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << to_string(ErrorKind::kInvalidInput) << ": " << e.what() << '\n';
    return 2;
  }

  try {
    if (sweep->parsed()) {
      SweepConfig cfg = load_sweep_config(config_path);
      if (inject_fault) cfg.inject_fault = true;
      if (sweep->count("--format") > 0) cfg.format = parse_format(format_name);
      SweepResult result = run_sweep(cfg);
      emit(result.records, cfg.format, out_path);
      return result.all_passed ? 0 : 1;
    }
    for (auto& [cmd, run] : commands) {
      if (!cmd->parsed()) continue;
      auto records = run(args);
      emit(records, parse_format(format_name), out_path);
      return checks_pass(records) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << to_string(ErrorKind::kInvalidInput) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}
