// Copyright 2026 The mwkc Authors
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

#include "mwkc/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mwkc/errors.hpp"
#include "mwkc/export.hpp"
#include "mwkc/interval_graph.hpp"
#include "mwkc/oracle.hpp"
#include "mwkc/solver.hpp"

namespace mwkc::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ScheduleFormat infer_format(const RunConfig& config) {
  if (config.format) return *config.format;
  const auto& p = config.input;
  if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0) {
    return ScheduleFormat::kJson;
  }
  return ScheduleFormat::kCsv;
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : out_(out) {
    if (config.output) {
      file_.open(*config.output, std::ios::binary);
      if (!file_) throw Error("cannot write '" + *config.output + "'");
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : out_; }
  void json(const Json& doc) { stream() << doc.dump(2) << "\n"; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

int require_k(const RunConfig& config) {
  if (!config.k) throw CLI::ValidationError("--k", "is required");
  return *config.k;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ScheduleSet schedule =
      parse_schedule(read_file(config.input), infer_format(config));
  const ValidationReport report = validate_schedule(schedule);

  if (config.command == Command::kValidate) {
    Emitter(config, out).json(to_json(report));
    return report.has_errors() ? kExitFailure : kExitOk;
  }
  if (report.has_errors()) {
    err << to_json(report).dump(2) << "\n";
    return kExitFailure;
  }
  for (const auto& issue : report.issues) err << "warning: " << issue.message << "\n";

  const IntervalInstance instance = to_intervals(schedule, config.excluded);

  switch (config.command) {
    case Command::kCliques: {
      const auto cliques = enumerate_maximal_cliques(instance);
      Json doc = to_json(cliques, instance);
      doc["stats"] = to_json(compute_stats(instance, cliques), instance);
      Emitter(config, out).json(doc);
      return kExitOk;
    }
    case Command::kNetwork: {
      const int k = config.k.value_or(1);
      const auto cliques = enumerate_maximal_cliques(instance);
      const auto net = build_network(cliques, instance, k);
      const auto tn = transform_weights(net, compute_pi(net));
      Emitter emit(config, out);
      if (config.dump == DumpFormat::kDot) {
        write_dot(emit.stream(), tn, instance);
      } else {
        emit.json(to_json(tn, instance));
      }
      return kExitOk;
    }
    case Command::kSolve: {
      const int k = require_k(config);
      SolveOptions options;
      options.validate_paths = config.validate_paths;
      const auto sol = solve_mwkc(instance, k, options);
      Emitter(config, out).json(solution_to_json(sol, instance, &schedule));
      write_session_table(err, sol, instance, &schedule);
      return kExitOk;
    }
    case Command::kOracle: {
      const int k = require_k(config);
      const auto result = brute_force_mwkc(instance, k, config.oracle_limit);
      Emitter(config, out).json(to_json(result, k, instance));
      return kExitOk;
    }
    case Command::kCheck: {
      if (config.solution.empty()) {
        throw CLI::ValidationError("--solution", "is required");
      }
      auto parsed = solution_from_json(read_file(config.solution), instance);
      const int k = config.k.value_or(parsed.solution.k);
      CheckReport check = verify_solution(parsed.solution, instance, k);
      check.violations.insert(check.violations.begin(), parsed.problems.begin(),
                              parsed.problems.end());
      Emitter(config, out).json(to_json(check));
      err << (check.passed() ? "PASS" : "FAIL") << "\n";
      return check.passed() ? kExitOk : kExitFailure;
    }
    case Command::kValidate:
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Select k time-disjoint programme sessions of maximum viewers"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format;
  std::string exclude;
  std::string dump = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Schedule file")->required();
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--exclude", exclude, "Comma-separated slot ids to drop");
    sub->add_option("--output", config.output, "Write JSON here instead of stdout");
  };
  auto with_k = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "Number of parallel sessions")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Report schedule problems");
  common(validate);
  auto* cliques = app.add_subcommand("cliques", "Dump the maximal clique sequence");
  common(cliques);
  auto* network = app.add_subcommand("network", "Dump the flow network and its transform");
  common(network);
  with_k(network);
  network->add_option("--dump", dump, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  auto* solve = app.add_subcommand("solve", "Select k sessions of maximum weight");
  common(solve);
  with_k(solve);
  solve->add_flag("--validate", config.validate_paths,
                  "Cross-check every augmenting path (slow)");
  auto* check = app.add_subcommand("check", "Verify a solution document");
  common(check);
  with_k(check);
  check->add_option("--solution", config.solution, "Solution JSON")->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for small instances");
  common(oracle);
  with_k(oracle);
  oracle->add_option("--limit", config.oracle_limit,
                     "Largest component size to search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (validate->parsed()) config.command = Command::kValidate;
  if (cliques->parsed()) config.command = Command::kCliques;
  if (network->parsed()) config.command = Command::kNetwork;
  if (solve->parsed()) config.command = Command::kSolve;
  if (check->parsed()) config.command = Command::kCheck;
  if (oracle->parsed()) config.command = Command::kOracle;
  if (!format.empty()) config.format = parse_format(format);
  config.dump = dump == "dot" ? DumpFormat::kDot : DumpFormat::kJson;
  std::stringstream ids(exclude);
  for (std::string id; std::getline(ids, id, ',');) {
    if (!id.empty()) config.excluded.insert(id);
  }
  if ((config.command == Command::kSolve || config.command == Command::kOracle) &&
      !config.k) {
    err << "error: --k is required for this command\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace mwkc::cli
