#pragma once

#include <string>
#include <vector>

#include "rpf/baselines/baseline.hpp"
#include "rpf/control/controller.hpp"

namespace rpf::bench {

// Search method identifiers accepted by the CLI and the batch runner.
struct MethodSpec {
  enum class Family { kRpfSearch, kGtll, kGtpl, kGtllNbv, kGtplNbv };
  Family family = Family::kRpfSearch;
  control::AblationFlags ablations;
  std::string id;
};

// Throws std::invalid_argument on an unknown identifier.
MethodSpec parseMethod(const std::string& id);

const std::vector<std::string>& knownMethods();

}  // namespace rpf::bench
