#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "digrack/commands.hpp"
#include "digrack/errors.hpp"
#include "digrack/fixtures.hpp"
#include "digrack/json_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "digrack: finite generalized digroups, their conjugation racks and "
      "digroup algebras, with every closed-form invariant cross-checked "
      "against a brute-force oracle"};

  std::string input_path, fixture_name, format = "json";
  bool list_fixtures = false;
  digrack::JobSpec spec;

  auto* input_opt =
      app.add_option("--input", input_path, "Path to a digroup JSON record");
  auto* fixture_opt =
      app.add_option("--fixture", fixture_name, "Built-in digroup by name");
  input_opt->excludes(fixture_opt);
  app.add_option("--command", spec.command,
                 "check-axioms | invariants | subracks | hopf-verify | "
                 "factorization | all")
      ->check(CLI::IsMember({"check-axioms", "invariants", "subracks",
                             "hopf-verify", "factorization", "all"}));
  app.add_option("--seed", spec.seed, "Seed for randomized spot checks");
  app.add_option("--cap-triples", spec.cap_triples,
                 "Triple-quantified verification cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-subsets", spec.cap_subsets,
                 "Subset/subrack enumeration cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--list-fixtures", list_fixtures, "List built-in digroups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_fixtures) {
      for (const auto& name : digrack::fixture_names())
        std::cout << name << "\n";
      return kExitPass;
    }
    if (input_path.empty() == fixture_name.empty()) {
      std::cerr << "error: exactly one of --input or --fixture is required\n";
      return kExitInputError;
    }

    digrack::GDigroup digroup = [&] {
      if (!fixture_name.empty()) return digrack::fixture(fixture_name);
      std::ifstream in(input_path);
      if (!in)
        throw digrack::ValidationError("InputError",
                                       "cannot open '" + input_path + "'");
      nlohmann::json record = nlohmann::json::parse(in);
      return digrack::digroup_from_json(record);
    }();

    const digrack::CommandResult result = digrack::run_command(digroup, spec);
    if (format == "json")
      std::cout << result.report.dump(2) << "\n";
    else
      std::cout << digrack::render_text(result.report);
    return result.pass ? kExitPass : kExitVerificationFailure;
  } catch (const digrack::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}
