// Copyright 2026 The Authors.
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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sfm/cli.h"
#include "sfm/errors.h"
#include "sfm/rational.h"

int main(int argc, char** argv) {
  CLI::App app{"Exact submodular function minimization"};
  app.require_subcommand(1);

  sfm::RunConfig cfg;
  std::string algorithm = "scaling";
  std::string epsilon;
  CLI::App* solve = app.add_subcommand("solve", "Minimize an instance");
  solve->add_option("input", cfg.input, "Instance file")->required();
  solve->add_option("--algorithm", algorithm, "scaling, strong or brute")
      ->check(CLI::IsMember({"scaling", "strong", "brute"}));
  solve->add_flag("--verify", cfg.verify,
                  "Check the certificate and compare with brute force");
  solve->add_option("--trace", cfg.trace_path,
                    "Write phase, push and augment events as JSON lines");
  solve->add_option("--epsilon", epsilon,
                    "Lower bound p/q on the gap between distinct values");
  solve->add_option("--seed", cfg.seed, "Seed (kept for reproducibility)");
  solve->add_option("--output", cfg.output, "Result file (default stdout)");

  std::string family;
  int n = 0;
  uint64_t seed = 0;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("family", family, "table, cut, coverage, matroid, concave")
      ->required();
  gen->add_option("n", n, "Number of elements")->required();
  gen->add_option("SEED", seed, "Random seed (same as --seed)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--output", gen_output, "Output file (default stdout)");

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sfm::kExitInputError;
  }

  if (*solve) {
    cfg.algorithm = *sfm::ParseAlgorithm(algorithm);
    if (!epsilon.empty()) {
      try {
        cfg.epsilon = sfm::ParseRational(epsilon);
      } catch (const sfm::Error& e) {
        std::cerr << "error: --epsilon: " << e.what() << '\n';
        return sfm::kExitInputError;
      }
    }
    return sfm::SolveCommand(cfg, std::cout, std::cerr);
  }
  if (*gen) {
    return sfm::GenCommand(family, n, seed, gen_output, std::cout, std::cerr);
  }
  if (*selftest) return sfm::SelftestCommand(std::cout);
  return sfm::kExitInputError;
}
