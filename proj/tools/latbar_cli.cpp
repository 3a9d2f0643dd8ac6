#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latbar/latbar.h"

namespace {

struct Cfg {
  std::string input;
  std::string kind;
  std::string witnesses;
  long degree_bound = 0;
  long face_cap = 4;
  long orders = 20;
  long seed = 0;
  long limit_states = 1000000;
  std::string format = "text";
};

// Inputs with whitespace or ':' are inline documents / generator names;
// anything else must name a readable file.
bool load_input(const std::string& arg, std::string& out) {
  if (arg.find_first_of(" \t\n") != std::string::npos || arg.find(':') != std::string::npos) {
    out = arg;
    return true;
  }
  std::ifstream in(arg);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

void add_common(CLI::App* cmd, Cfg& cfg, const std::string& default_kind, bool fixed_kind) {
  cmd->add_option("input", cfg.input, "input file, inline document, or generator name")
      ->required();
  cfg.kind = default_kind;
  if (!fixed_kind)
    cmd->add_option("--kind", cfg.kind, "input kind")
        ->check(CLI::IsMember({"matrix-kernel", "lattice-basis", "graph", "determinantal"}));
  cmd->add_option("--degree-bound", cfg.degree_bound, "face search degree bound (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--face-cap", cfg.face_cap, "largest vertex-set size examined for faces")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--orders", cfg.orders, "random term-order samples")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", cfg.seed, "random seed")->check(CLI::NonNegativeNumber);
  cmd->add_option("--limit-states", cfg.limit_states, "fiber/search state ceiling")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));
}

int run_job(const std::string& command, const Cfg& cfg) {
  std::string input;
  if (!load_input(cfg.input, input)) {
    std::fprintf(stderr, "error: cannot read input file: %s\n", cfg.input.c_str());
    return LATBAR_BAD_INPUT;
  }
  using Job = std::unique_ptr<latbar_job, decltype(&latbar_job_free)>;
  Job job(latbar_job_new(cfg.kind.c_str(), command.c_str(), input.c_str()), &latbar_job_free);
  if (!job) {
    std::fprintf(stderr, "error: out of memory\n");
    return LATBAR_RESOURCE_LIMIT;
  }
  if (!cfg.witnesses.empty()) {
    std::ifstream in(cfg.witnesses);
    if (!in) {
      std::fprintf(stderr, "error: cannot read witness file: %s\n", cfg.witnesses.c_str());
      return LATBAR_BAD_INPUT;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    latbar_job_set_aux(job.get(), buf.str().c_str());
  }
  latbar_job_set_option(job.get(), "degree-bound", cfg.degree_bound);
  latbar_job_set_option(job.get(), "face-cap", cfg.face_cap);
  latbar_job_set_option(job.get(), "orders", cfg.orders);
  latbar_job_set_option(job.get(), "seed", cfg.seed);
  latbar_job_set_option(job.get(), "limit-states", cfg.limit_states);
  latbar_job_set_option(job.get(), "machine", cfg.format == "machine" ? 1 : 0);

  int status = latbar_job_run(job.get());
  std::fputs(latbar_job_report(job.get()), stdout);
  if (status != LATBAR_OK) std::fprintf(stderr, "error: %s\n", latbar_job_error(job.get()));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice ideal invariants and binomial arithmetical rank certificates"};
  app.set_version_flag("--version", std::string(latbar_version()));
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    const char* kind;
    bool fixed;
    bool witnesses;
  };
  static const Sub subs[] = {
      {"circuits", "circuits of the configuration and their minimal supports", "matrix-kernel",
       false, false},
      {"complex", "the simplicial complex on the minimal circuit supports", "matrix-kernel", false,
       false},
      {"bounds", "invariant chain and certified binomial arithmetical rank", "matrix-kernel",
       false, false},
      {"markov", "minimal binomial generating set and indispensables", "matrix-kernel", false,
       false},
      {"graph", "toric ideal analysis of a graph", "graph", true, false},
      {"det", "the 2 x m determinantal family", "determinantal", true, false},
      {"verify-witness", "check a witness polynomial set against the reference generators",
       "matrix-kernel", false, true},
  };

  Cfg cfgs[7];
  for (int i = 0; i < 7; ++i) {
    auto* cmd = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(cmd, cfgs[i], subs[i].kind, subs[i].fixed);
    if (subs[i].witnesses)
      cmd->add_option("--witnesses", cfgs[i].witnesses, "witness polynomial file")->required();
  }

  CLI11_PARSE(app, argc, argv);

  for (int i = 0; i < 7; ++i)
    if (app.get_subcommand(subs[i].name)->parsed()) return run_job(subs[i].name, cfgs[i]);
  return LATBAR_BAD_INPUT;
}
