// Copyright 2026 The gaussep Authors
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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gaussep/commands.hpp"

namespace {

using namespace gaussep;
using namespace gaussep::cli;

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability and P-representability of two-mode Gaussian states"};
  app.require_subcommand(1);

  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::string convention = "half";
  std::string output;
  bool timings = false;
  app.add_option("--tol", tol, "numerical tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--convention", convention, "covariance convention: half (vacuum I/2) or dgcz (vacuum I)")
      ->check(CLI::IsMember({"half", "dgcz"}));
  app.add_option("--output", output, "output file (stdout when omitted) or directory for random-state");

  std::string input = "-";
  auto* analyze = app.add_subcommand("analyze", "classify a state and print a JSON report");
  analyze->add_option("input", input, "input JSON file, - for stdin");
  analyze->add_flag("--timings", timings, "include per-stage timings in the report");

  double a = 1.0, b = 1.0;
  std::size_t t_steps = 11, grid = 400;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* scan = app.add_subcommand("region-scan", "compare the closed-form c1^2 bound with a brute-force maximum");
  scan->add_option("a", a, "local purity parameter a >= 1/2")->required();
  scan->add_option("b", b, "local purity parameter b >= 1/2")->required();
  scan->add_option("t_steps", t_steps, "number of t values in [0, 1]")->check(CLI::PositiveNumber);
  scan->add_option("--grid", grid, "grid points per squeezing axis")->check(CLI::PositiveNumber);
  scan->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string kind = "physical";
  std::size_t count = 1;
  auto* random = app.add_subcommand("random-state", "write random input documents of a given class");
  random->add_option("--kind", kind, "physical, separable, entangled or boundary")
      ->check(CLI::IsMember({"physical", "separable", "entangled", "boundary"}));
  random->add_option("--count", count, "number of documents")->check(CLI::PositiveNumber);

  std::size_t n = 100000;
  auto* sample = app.add_subcommand("sample-p", "sample the certified P-function and compare covariances");
  sample->add_option("input", input, "input JSON file, - for stdin");
  sample->add_option("--n", n, "number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  const Convention conv = convention == "dgcz" ? Convention::dgcz : Convention::half;
  try {
    if (*analyze) {
      const auto result = cmd_analyze(parse_input_text(read_all(input), conv), {tol, seed, timings});
      write_out(output, result.report.dump(2) + "\n");
      return result.exit_code;
    }
    if (*scan) {
      write_out(output, region_scan_csv(region_scan(a, b, t_steps, grid, threads)));
      return kExitOk;
    }
    if (*random) {
      const auto docs = cmd_random_state(seed, *parse_state_kind(kind), count);
      if (output.empty() || output == "-") {
        for (const auto& d : docs) std::cout << d.dump() << "\n";
        return kExitOk;
      }
      std::filesystem::create_directories(output);
      for (std::size_t i = 0; i < docs.size(); ++i) {
        std::ostringstream name;
        name << "state_" << std::setw(4) << std::setfill('0') << i << ".json";
        write_out((std::filesystem::path(output) / name.str()).string(), docs[i].dump(2) + "\n");
      }
      return kExitOk;
    }
    if (*sample) {
      const auto result = cmd_sample_p(parse_input_text(read_all(input), conv), n, seed, tol);
      write_out(output, result.report.dump(2) + "\n");
      return result.exit_code;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}
