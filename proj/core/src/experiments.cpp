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

#include "dmaswipt/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

#include "dmaswipt/energy_harvesting.hpp"
#include "dmaswipt/errors.hpp"
#include "dmaswipt/units.hpp"

namespace dmaswipt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// A single optimizer invocation and its bookkeeping.
struct Task {
  ScenarioConfig config;
  std::vector<UserPosition> users;
  SchemeVariant variant;
  ResultRow row;  // id, seed, sweep value pre-filled
  std::vector<int> refine_from;

  // Filled by execution.
  bool has_system = false;
  SystemModel system;
  RunRecord record;
  double seconds = 0.0;
};

void execute(Task& t) {
  const auto start = std::chrono::steady_clock::now();
  const OptimizerConfig opt = t.config.optimizer(t.variant);
  try {
    t.system = t.config.system(t.users);
    t.has_system = true;
  } catch (const InfeasibleThresholdError&) {
    t.record.best_power = kNaN;
  }
  if (t.has_system)
    t.record = t.variant.fully_digital ? run_fd_baseline(t.system, opt)
                                       : run_alternating(t.system, opt);
  t.seconds += std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count();
}

ResultRow finish(const Task& t, bool timing) {
  ResultRow r = t.row;
  r.scheme = t.variant.scheme_name();
  r.ps_mode = format_ps_mode(t.config.optimizer(t.variant).ps_mode);
  r.users = static_cast<int>(t.users.size());
  r.feasible = t.has_system && t.record.feasible;
  r.ptx_dbm = r.feasible ? watts_to_dbm(t.record.best_power) : kNaN;
  r.sinr_margins = t.record.margins.sinr;
  r.eh_margins = t.record.margins.eh;
  r.iterations = t.record.iterations;
  r.solver_failure = t.record.solver_failure;
  if (timing) r.wall_clock_s = t.seconds;
  return r;
}

std::vector<ResultRow> run_tasks(std::vector<Task>& tasks,
                                 const ExperimentOptions& options) {
  const int n = static_cast<int>(tasks.size());
  parallel_for(n, options.parallel, [&](int i) { execute(tasks[i]); });
  // Refinement only reads other tasks' first-pass records, so it is
  // snapshot-based and order independent.
  std::vector<RunRecord> first(n);
  for (int i = 0; i < n; ++i) first[i] = tasks[i].record;
  parallel_for(n, options.parallel, [&](int i) {
    Task& t = tasks[i];
    if (!t.has_system || t.variant.fully_digital || t.refine_from.empty())
      return;
    const auto start = std::chrono::steady_clock::now();
    std::vector<DmaWeights> cands;
    for (int j : t.refine_from)
      if (first[j].feasible && first[j].weights.size() > 0)
        cands.push_back(first[j].weights);
    t.record = refine_over_weights(t.system, t.config.optimizer(t.variant),
                                   std::move(t.record), cands);
    t.seconds += std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  });
  std::vector<ResultRow> rows;
  rows.reserve(n);
  for (const auto& t : tasks) rows.push_back(finish(t, options.timing));
  return rows;
}

ScenarioConfig checked(const ScenarioConfig& c) {
  c.validate();
  return c;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ (b * 0xD1B54A32D192ED03ULL));
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  threads = std::clamp(threads, 1, n);
  std::vector<std::exception_ptr> errors(n);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

SingleRun run_single(const ScenarioConfig& config,
                     const ExperimentOptions& options) {
  const ScenarioConfig c = checked(config);
  std::vector<Task> tasks(1);
  Task& t = tasks[0];
  t.config = c;
  t.users = c.resolved_users();
  t.variant = parse_scheme_variant(c.scheme);
  t.row.scenario_id = "run";
  t.row.seed = c.seed;
  t.row.sweep_value = c.eh_threshold_dbm;
  execute(t);
  SingleRun out;
  out.row = finish(t, options.timing);
  out.record = t.record;
  return out;
}

std::vector<ResultRow> run_eh_sweep(const ScenarioConfig& config,
                                    const ExperimentOptions& options) {
  const ScenarioConfig c = checked(config);
  const SchemeVariant variant = parse_scheme_variant(c.scheme);
  const auto users = c.resolved_users();
  std::vector<Task> tasks;
  const int npts = static_cast<int>(c.eh_grid_dbm.size());
  for (std::size_t m = 0; m < c.eh_models.size(); ++m) {
    const int first = static_cast<int>(tasks.size());
    for (int i = 0; i < npts; ++i) {
      Task t;
      t.config = c;
      t.config.eh_model = c.eh_models[m];
      t.config.eh_threshold_dbm = c.eh_grid_dbm[i];
      t.users = users;
      t.variant = variant;
      t.row.scenario_id = "eh/" + c.eh_models[m] + "/p" + std::to_string(i);
      t.row.seed = c.seed;
      t.row.sweep_value = c.eh_grid_dbm[i];
      // Weights feasible for a harder target are feasible for this one.
      if (c.cross_refine)
        for (int j = 0; j < npts; ++j)
          if (c.eh_grid_dbm[j] > c.eh_grid_dbm[i]) t.refine_from.push_back(first + j);
      tasks.push_back(std::move(t));
    }
  }
  return run_tasks(tasks, options);
}

std::vector<ResultRow> run_separation_sweep(const ScenarioConfig& config,
                                            const ExperimentOptions& options) {
  const ScenarioConfig c = checked(config);
  const double df = c.fraunhofer();
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < c.sep_conversion_noise_dbm.size(); ++s) {
    for (std::size_t z = 0; z < c.zeta_grid.size(); ++z) {
      for (const auto& scheme : c.sep_schemes) {
        const SchemeVariant base = parse_scheme_variant(scheme);
        const int first = static_cast<int>(tasks.size());
        std::vector<int> pinned;
        for (const auto& mode : c.sep_ps_modes) {
          Task t;
          t.config = c;
          t.config.conversion_noise_dbm = c.sep_conversion_noise_dbm[s];
          t.users = {{0.0, 0.0, c.sep_anchor_df * df},
                     {0.0, 0.0, c.zeta_grid[z] * df}};
          t.variant = base;
          t.variant.ps_override = parse_ps_mode(mode);
          t.row.scenario_id = "sep/sigc" +
                              format_double(c.sep_conversion_noise_dbm[s]) +
                              "/z" + std::to_string(z);
          t.row.seed = c.seed;
          t.row.sweep_value = c.zeta_grid[z];
          if (t.variant.ps_override->pinned())
            pinned.push_back(static_cast<int>(tasks.size()));
          tasks.push_back(std::move(t));
        }
        // Every pinned-ratio solution is feasible for the optimized-ratio run.
        if (c.cross_refine)
          for (int i = first; i < static_cast<int>(tasks.size()); ++i)
            if (!tasks[i].variant.ps_override->pinned()) tasks[i].refine_from = pinned;
      }
    }
  }
  return run_tasks(tasks, options);
}

std::vector<UserPosition> sample_users(const ScenarioConfig& c,
                                       std::uint64_t realization_seed) {
  std::mt19937_64 rng(derive_seed(realization_seed, 1));
  const double df = c.fraunhofer();
  std::uniform_real_distribution<double> radius(c.mc_radius_min_df * df,
                                                c.mc_radius_max_df * df);
  std::uniform_real_distribution<double> angle(-0.5 * kPi, 0.5 * kPi);
  std::vector<UserPosition> users;
  for (int k = 0; k < c.mc_users; ++k) {
    const double r = radius(rng);
    const double th = angle(rng);
    users.push_back({r * std::sin(th), 0.0, r * std::cos(th)});
  }
  return users;
}

std::vector<ResultRow> run_sinr_montecarlo(const ScenarioConfig& config,
                                           const ExperimentOptions& options) {
  const ScenarioConfig c = checked(config);
  std::vector<SchemeVariant> variants;
  for (const auto& s : c.mc_schemes) variants.push_back(parse_scheme_variant(s));
  std::vector<Task> tasks;
  for (std::size_t d = 0; d < c.mc_sinr_grid_db.size(); ++d) {
    for (int r = 0; r < c.mc_realizations; ++r) {
      const std::uint64_t rseed = derive_seed(c.seed, static_cast<std::uint64_t>(r));
      const auto users = sample_users(c, rseed);
      const int first = static_cast<int>(tasks.size());
      for (const auto& v : variants) {
        Task t;
        t.config = c;
        t.config.sinr_db = c.mc_sinr_grid_db[d];
        t.config.seed = derive_seed(rseed, 2);
        t.users = users;
        t.variant = v;
        t.row.scenario_id =
            "mc/d" + std::to_string(d) + "/r" + std::to_string(r);
        t.row.seed = rseed;
        t.row.sweep_value = c.mc_sinr_grid_db[d];
        tasks.push_back(std::move(t));
      }
      if (!c.cross_refine) continue;
      const int last = static_cast<int>(tasks.size());
      for (int i = first; i < last; ++i) {
        const Task& ti = tasks[i];
        if (ti.variant.fully_digital ||
            ti.config.optimizer(ti.variant).ps_mode.pinned())
          continue;
        std::vector<int> from;
        for (int j = first; j < last; ++j) {
          const Task& tj = tasks[j];
          if (j != i && !tj.variant.fully_digital &&
              tj.variant.mapping == ti.variant.mapping &&
              tj.config.optimizer(tj.variant).ps_mode.pinned())
            from.push_back(j);
        }
        tasks[i].refine_from = std::move(from);
      }
    }
  }
  return run_tasks(tasks, options);
}

std::vector<SummaryRow> summarize_montecarlo(const std::vector<ResultRow>& rows) {
  // sweep value -> realization id -> variant label -> row
  std::map<double, std::map<std::string, std::map<std::string, const ResultRow*>>> grid;
  std::map<double, std::vector<std::string>> order;
  for (const auto& r : rows) {
    const std::string label = r.scheme + "/" + r.ps_mode;
    const auto slash = r.scenario_id.rfind('/');
    const std::string real = r.scenario_id.substr(slash + 1);
    grid[r.sweep_value][real][label] = &r;
    auto& o = order[r.sweep_value];
    if (std::find(o.begin(), o.end(), label) == o.end()) o.push_back(label);
  }
  std::vector<SummaryRow> out;
  for (const auto& [value, reals] : grid) {
    const auto& labels = order[value];
    std::vector<double> sum(labels.size(), 0.0);
    int used = 0, excluded = 0;
    for (const auto& [id, byvar] : reals) {
      bool ok = byvar.size() == labels.size();
      for (const auto& [l, row] : byvar) ok = ok && row->feasible;
      if (!ok) {
        ++excluded;
        continue;
      }
      ++used;
      for (std::size_t i = 0; i < labels.size(); ++i)
        sum[i] += byvar.at(labels[i])->ptx_dbm;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      out.push_back({value, labels[i], used ? sum[i] / used : kNaN, used, excluded});
  }
  return out;
}

TableOutcome classify(const std::vector<ResultRow>& rows) {
  bool any_feasible = false, failure = false;
  for (const auto& r : rows) {
    any_feasible = any_feasible || r.feasible;
    failure = failure || (!r.feasible && r.solver_failure);
  }
  if (failure) return TableOutcome::SolverFailure;
  if (!rows.empty() && !any_feasible) return TableOutcome::AllInfeasible;
  return TableOutcome::Ok;
}

}  // namespace dmaswipt
