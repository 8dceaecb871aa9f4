// Copyright 2026 The screwdyn Authors
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

// screwdyn command-line front end.

#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "screwdyn/errors.hpp"

namespace cli = screwdyn::cli;

int main(int argc, char** argv) {
  CLI::App app{"Screw-theoretic rigid multibody kinematics and dynamics"};
  app.require_subcommand(1);
  // "-h" would clash with the step-size option.
  app.set_help_flag("--help", "Print this help message and exit");
  cli::RunConfig cfg;
  std::function<int(const cli::RunConfig&)> action;

  auto add = [&](const char* name, const char* help,
                 int (*fn)(const cli::RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--model", cfg.model, "Model file (JSON)")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto out_opt = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "Output path, '-' for stdout")->capture_default_str();
  };
  auto rep_opt = [&](CLI::App* s) {
    s->add_option("--rep", cfg.rep, "body|spatial|hybrid|mixed")->capture_default_str();
  };
  auto traj_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--traj", cfg.traj, "Trajectory CSV (t, q[, qd[, qdd]])");
    if (required) o->required();
  };
  auto gravity_opt = [&](CLI::App* s) {
    s->add_flag("--no-gravity", cfg.no_gravity, "Ignore the model's gravity");
  };

  CLI::App* check = add("check", "Validate a model file", cli::cmd_check);
  out_opt(check);

  CLI::App* fk = add("fk", "Body poses, or twists with --twists", cli::cmd_fk);
  traj_opt(fk, true);
  rep_opt(fk);
  out_opt(fk);
  fk->add_flag("--twists", cfg.twists, "Emit twists in --rep instead of poses");

  CLI::App* jac = add("jacobian", "System Jacobian, row-major 6n x n", cli::cmd_jacobian);
  traj_opt(jac, true);
  rep_opt(jac);
  out_opt(jac);

  CLI::App* id = add("idyn", "Recursive inverse dynamics", cli::cmd_idyn);
  traj_opt(id, true);
  id->add_option("--rep", cfg.rep, "body|spatial|hybrid|mixed|all")->capture_default_str();
  out_opt(id);
  gravity_opt(id);

  CLI::App* fd = add("fdyn", "Forward dynamics q̈ per sample", cli::cmd_fdyn);
  traj_opt(fd, true);
  fd->add_option("--torques", cfg.torques, "Joint force CSV (t, tau1..n); zero if omitted");
  out_opt(fd);
  gravity_opt(fd);

  CLI::App* sim = add("simulate", "RK4 simulation of the chain", cli::cmd_simulate);
  sim->add_option("--q0", cfg.q0, "Initial positions, comma-separated (default 0)");
  sim->add_option("--qd0", cfg.qd0, "Initial velocities, comma-separated (default 0)");
  sim->add_option("--torques", cfg.torques, "Joint force CSV (t, tau1..n); zero if omitted");
  sim->add_option("--T", cfg.T, "Horizon [s]")->capture_default_str();
  sim->add_option("--h", cfg.h, "Step size [s]")->capture_default_str();
  sim->add_option("--form", cfg.form, "state|momentum")->capture_default_str();
  sim->add_option("--report", cfg.report, "Diagnostics CSV (energy, momentum, drift)");
  out_opt(sim);
  gravity_opt(sim);

  CLI::App* chr = add("christoffel", "Christoffel symbols of the first kind",
                      cli::cmd_christoffel);
  chr->add_option("--q", cfg.q, "Joint positions, comma-separated (default 0)");
  traj_opt(chr, false);
  chr->add_option("--variant", cfg.variant, "standard|binet")->capture_default_str();
  out_opt(chr);

  // benchmark builds its own chains; --model is not used.
  CLI::App* bench = app.add_subcommand("benchmark", "Operation counts and timings of idyn");
  bench->add_option("--rep", cfg.reps, "Comma-separated representations")->capture_default_str();
  bench->add_option("--n", cfg.sizes, "Comma-separated chain sizes")->capture_default_str();
  bench->add_option("--trials", cfg.trials, "Timed calls per case")->capture_default_str();
  out_opt(bench);
  bench->callback([&action] { action = cli::cmd_benchmark; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kValidation;
  }

  try {
    return action(cfg);
  } catch (const screwdyn::ModelError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << d.to_string() << "\n";
    return cli::kValidation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kIo;
  } catch (const screwdyn::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return cli::kNumerical;
  } catch (const screwdyn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kValidation;
  }
}
