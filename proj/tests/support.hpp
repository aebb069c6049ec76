#pragma once

#include <filesystem>
#include <string>

namespace qenergy::testing {

inline std::filesystem::path fixture(const std::string& relative) {
  return std::filesystem::path(QENERGY_FIXTURE_DIR) / relative;
}

inline std::filesystem::path workload_fixture(const std::string& name) {
  return fixture("workloads/" + name + ".json");
}

}  // namespace qenergy::testing
