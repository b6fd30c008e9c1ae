// pgcheck: exact verification of Poisson-geometric structure files.
//
//   pgcheck <command> <file.pg> [--json] [--seed N] [--samples N]
//           [--numeric-dynamical]
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 input or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgcheck/document.hpp"
#include "pgcheck/report_json.hpp"
#include "pgcheck/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pgcheck::IngestError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for Poisson-geometric structures"};
  app.set_version_flag("--version", "pgcheck 1.0.0");

  std::string command, file;
  bool json_output = false;
  bool numeric_dynamical = false;
  std::int64_t seed = -1;
  std::int64_t samples = -1;

  std::string commands_help;
  for (const auto& c : pgcheck::command_names()) commands_help += c + " ";
  app.add_option("command", command, "one of: " + commands_help)->required();
  app.add_option("file", file, "structure document (.pg, JSON)")->required();
  app.add_flag("--json", json_output, "write the report as JSON to stdout");
  app.add_option("--seed", seed, "seed for randomized sampling");
  app.add_option("--samples", samples, "number of random samples");
  app.add_flag("--numeric-dynamical", numeric_dynamical,
               "append the non-certifying numeric spot check of the coth family");

  CLI11_PARSE(app, argc, argv);

  bool known = false;
  for (const auto& c : pgcheck::command_names()) known = known || c == command;
  if (!known) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return 2;
  }

  pgcheck::Document doc;
  try {
    doc = pgcheck::ingest_text(read_file(file));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  pgcheck::RunOptions opt;
  if (seed >= 0) opt.seed = static_cast<std::uint64_t>(seed);
  if (samples >= 0) opt.samples = static_cast<std::size_t>(samples);
  opt.numeric_dynamical = numeric_dynamical;

  try {
    if (command == "dualize") {
      if (!doc.lie || !doc.cobracket) {
        std::cerr << "error: dualize requires 'lie_algebra' and 'cobracket' sections\n";
        return 2;
      }
      pgcheck::LieAlgebra dual = pgcheck::dual_bracket(*doc.lie, *doc.cobracket);
      pgcheck::CheckReport rep = pgcheck::validate_lie_algebra(dual);
      rep.name = "dualize";
      if (json_output) {
        nlohmann::ordered_json out;
        out["schema_version"] = pgcheck::kReportSchemaVersion;
        out["dual"] = pgcheck::dualize_to_json(dual);
        out["report"] = pgcheck::report_to_json_node(rep);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << pgcheck::dualize_to_json(dual).dump(2) << "\n";
        std::cout << pgcheck::render_text(rep);
      }
      return pgcheck::exit_code_for(rep);
    }

    pgcheck::CheckReport rep = pgcheck::run_command(doc, command, opt);
    if (rep.status == pgcheck::Status::error && rep.detail.rfind("missing section", 0) == 0) {
      std::cerr << "error: " << rep.detail << "\n";
      return 2;
    }
    if (json_output)
      std::cout << pgcheck::to_json(rep);
    else
      std::cout << pgcheck::render_text(rep);
    return pgcheck::exit_code_for(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
