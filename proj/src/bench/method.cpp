#include "rpf/bench/method.hpp"

#include <stdexcept>

namespace rpf::bench {

const std::vector<std::string>& knownMethods() {
  static const std::vector<std::string> ids = {
      "rpf-search",
      "rpf-search-no-inference",
      "rpf-search-no-inheritance",
      "rpf-search-no-overtake",
      "rpf-search-no-fluid",
      "gtll",
      "gtpl",
      "gtll-nbv",
      "gtpl-nbv",
  };
  return ids;
}

MethodSpec parseMethod(const std::string& id) {
  MethodSpec m;
  m.id = id;
  if (id == "rpf-search") {
    m.family = MethodSpec::Family::kRpfSearch;
  } else if (id == "rpf-search-no-inference") {
    m.family = MethodSpec::Family::kRpfSearch;
    m.ablations.noInferenceFactor = true;
  } else if (id == "rpf-search-no-inheritance") {
    m.family = MethodSpec::Family::kRpfSearch;
    m.ablations.noInheritance = true;
  } else if (id == "rpf-search-no-overtake") {
    m.family = MethodSpec::Family::kRpfSearch;
    m.ablations.noOvertake = true;
  } else if (id == "rpf-search-no-fluid") {
    m.family = MethodSpec::Family::kRpfSearch;
    m.ablations.noFluid = true;
  } else if (id == "gtll") {
    m.family = MethodSpec::Family::kGtll;
  } else if (id == "gtpl") {
    m.family = MethodSpec::Family::kGtpl;
  } else if (id == "gtll-nbv") {
    m.family = MethodSpec::Family::kGtllNbv;
  } else if (id == "gtpl-nbv") {
    m.family = MethodSpec::Family::kGtplNbv;
  } else {
    throw std::invalid_argument("unknown method: " + id);
  }
  return m;
}

}  // namespace rpf::bench
