#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "digrack/digroup.hpp"

namespace digrack {

// One batch job: a digroup (by fixture name or input record), a command and
// the caps/seed for the randomized spot checks.
struct JobSpec {
  std::string command = "all";
  unsigned seed = 0;
  std::size_t cap_triples = 1000000;
  int cap_subsets = 16;
};

struct CommandResult {
  nlohmann::json report;
  bool pass = false;
};

// Commands: check-axioms, invariants, subracks, hopf-verify, factorization,
// all. Throws ValidationError on unknown commands or violated preconditions.
CommandResult run_command(const GDigroup& digroup, const JobSpec& spec);

// Flat "key.path = value" view of a JSON report.
std::string render_text(const nlohmann::json& j);

}  // namespace digrack
