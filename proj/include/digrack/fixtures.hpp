#pragma once

#include <string>
#include <vector>

#include "digrack/digroup.hpp"

namespace digrack {

struct Fixture {
  std::string name;
  GDigroup digroup;
};

// Canonical built-in names. "trivial-<n>" also resolves for any n >= 1.
std::vector<std::string> fixture_names();

GDigroup fixture(const std::string& name);

// Every named fixture, in fixture_names() order.
std::vector<Fixture> fixture_catalog();

}  // namespace digrack
