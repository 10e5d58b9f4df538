// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: single runs, the three sweep families and
// configuration dumps.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dmaswipt/energy_harvesting.hpp"
#include "dmaswipt/errors.hpp"
#include "dmaswipt/experiments.hpp"
#include "dmaswipt/lorentzian_mapping.hpp"
#include "dmaswipt/precoder_optimizer.hpp"
#include "dmaswipt/results_io.hpp"
#include "dmaswipt/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSolver = 4;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string scheme;
  std::string ps;
  std::string eh_model;
  std::string format = "csv";
  int parallel = 1;
  bool full_scale = false;
  bool desk_scale = false;
  std::optional<int> realizations;
  bool timing = false;
  bool no_refine = false;
  std::string summary;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "Scenario file (key = value or JSON)");
  sub->add_option("--seed", f.seed, "Base random seed");
  sub->add_option("--out", f.out, "Output file (default: stdout, or "
                                  "$DMASWIPT_OUT_DIR/<command>.<format>)");
  sub->add_option("--scheme", f.scheme, "arlch|lcph|lcush|aoh|uw|fd");
  sub->add_option("--ps", f.ps, "ops|eps|fixed:R");
  sub->add_option("--eh-model", f.eh_model,
                  "linear:eta=E or logistic:esat_dbm=S,a=A,b=B");
  sub->add_option("--format", f.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--parallel", f.parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--full-scale", f.full_scale, "Use the 8 x 64 array");
  sub->add_flag("--desk-scale", f.desk_scale, "Use the 4 x 8 array");
  sub->add_flag("--timing", f.timing,
                "Record wall-clock seconds (makes output nondeterministic)");
  sub->add_flag("--no-refine", f.no_refine,
                "Disable refinement over weights of nested-constraint runs");
}

dmaswipt::ScenarioConfig build_config(const Flags& f, bool full_default) {
  using dmaswipt::ScenarioConfig;
  if (f.full_scale && f.desk_scale)
    throw dmaswipt::ConfigError("--full-scale and --desk-scale are exclusive");
  const bool full = f.full_scale || (full_default && !f.desk_scale);
  ScenarioConfig c = full ? ScenarioConfig::full_scale()
                           : ScenarioConfig::desk_scale();
  if (!f.config.empty()) c = dmaswipt::load_scenario(f.config, c);
  if (f.seed) c.seed = *f.seed;
  if (!f.scheme.empty()) c.scheme = f.scheme;
  if (!f.ps.empty()) c.ps_mode = f.ps;
  if (!f.eh_model.empty()) {
    c.eh_model = f.eh_model;
    c.eh_models = {f.eh_model};
  }
  if (f.realizations) c.mc_realizations = *f.realizations;
  if (f.no_refine) c.cross_refine = false;
  c.validate();
  return c;
}

// Opens the destination; empty path means stdout.
std::ostream& destination(const Flags& f, const std::string& command,
                          std::ofstream& file) {
  std::string path = f.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("DMASWIPT_OUT_DIR")) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / (command + "." + f.format)).string();
    }
  }
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw dmaswipt::ConfigError("cannot write '" + path + "'");
  return file;
}

int outcome_code(const std::vector<dmaswipt::ResultRow>& rows) {
  switch (dmaswipt::classify(rows)) {
    case dmaswipt::TableOutcome::Ok:
      return kExitOk;
    case dmaswipt::TableOutcome::AllInfeasible:
      return kExitInfeasible;
    case dmaswipt::TableOutcome::SolverFailure:
      return kExitSolver;
  }
  return kExitOk;
}

int emit_table(const Flags& f, const std::string& command,
               const std::vector<dmaswipt::ResultRow>& rows) {
  std::ofstream file;
  std::ostream& out = destination(f, command, file);
  if (f.format == "json")
    dmaswipt::write_json(out, rows);
  else
    dmaswipt::write_csv(out, rows);
  return outcome_code(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DMA-aided multiuser MISO PS-SWIPT transmit-power optimizer"};
  app.require_subcommand(1);
  Flags f;

  auto* run = app.add_subcommand("run", "Optimize one scenario");
  add_common(run, f);
  auto* eh = app.add_subcommand("sweep-eh", "Transmit power vs EH threshold");
  add_common(eh, f);
  auto* sep = app.add_subcommand("sweep-sep", "Transmit power vs user separation");
  add_common(sep, f);
  auto* mc = app.add_subcommand("monte-carlo", "Mean transmit power vs SINR target");
  add_common(mc, f);
  mc->add_option("--realizations", f.realizations, "Realizations per point")
      ->check(CLI::PositiveNumber);
  mc->add_option("--summary", f.summary, "Write per-scheme means to this CSV");
  auto* dump = app.add_subcommand(
      "dump-config", "Print the scenario configuration (full scale by default)");
  add_common(dump, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  dmaswipt::ExperimentOptions opts;
  opts.parallel = f.parallel;
  opts.timing = f.timing;

  try {
    if (*dump) {
      const auto c = build_config(f, true);
      std::ofstream file;
      std::ostream& out = destination(f, "config", file);
      out << (f.format == "json" ? dmaswipt::format_scenario_json(c)
                                 : dmaswipt::format_scenario_flat(c));
      return kExitOk;
    }
    const auto c = build_config(f, false);
    if (*run) {
      const auto r = dmaswipt::run_single(c, opts);
      std::ofstream file;
      std::ostream& out = destination(f, "run", file);
      if (f.format == "json")
        dmaswipt::write_run_json(out, r);
      else
        dmaswipt::write_csv(out, {r.row});
      return outcome_code({r.row});
    }
    if (*eh) return emit_table(f, "sweep-eh", dmaswipt::run_eh_sweep(c, opts));
    if (*sep)
      return emit_table(f, "sweep-sep", dmaswipt::run_separation_sweep(c, opts));
    if (*mc) {
      const auto rows = dmaswipt::run_sinr_montecarlo(c, opts);
      if (!f.summary.empty()) {
        std::ofstream s(f.summary, std::ios::binary);
        if (!s) throw dmaswipt::ConfigError("cannot write '" + f.summary + "'");
        dmaswipt::write_summary_csv(s, dmaswipt::summarize_montecarlo(rows));
      }
      return emit_table(f, "monte-carlo", rows);
    }
  } catch (const dmaswipt::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dmaswipt::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dmaswipt::UnsupportedConfigurationError& e) {
    std::cerr << "unsupported configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dmaswipt::InfeasibleThresholdError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}
