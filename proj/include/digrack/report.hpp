#pragma once

#include <string>
#include <vector>

namespace digrack {

// One verified identity: pass/fail plus the first counterexample when it
// fails (element indices; -1 marks an unused slot).
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<int> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  std::string note;  // e.g. how exhaustiveness was reduced to basis tuples

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const AxiomCheck* find(const std::string& axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }
};

}  // namespace digrack
