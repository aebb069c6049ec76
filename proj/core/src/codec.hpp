#pragma once

// JSON converters shared by the workload, profile and report formats.

#include "json_util.hpp"
#include "qenergy/catalog.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/nisq.hpp"
#include "qenergy/workload.hpp"

namespace qenergy {

TechnologyProfile profile_from_json(const json_util::Node& node);
json_util::Json profile_to_json(const TechnologyProfile& profile);

WorkloadSpec workload_from_json(const json_util::Node& node,
                                const std::filesystem::path& base_dir);
json_util::Json workload_to_json(const WorkloadSpec& spec);

}  // namespace qenergy
