#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlix/param_set.hpp"

namespace mlix {

/// One service record: the parameters it consumes, the parameters it
/// produces, and opaque descriptive attributes.  Attributes are stored
/// verbatim and never influence clustering or retrieval.
struct Service {
    ServiceId id = 0;
    ParamSet inputs;   ///< canonical, never empty
    ParamSet outputs;  ///< canonical, may be empty
    std::map<std::string, std::string> attributes;

    bool operator==(const Service&) const = default;
};

/// Builds a service, sorting and deduplicating both parameter lists.
/// Throws std::invalid_argument when `inputs` is empty.
Service make_service(ServiceId id, std::vector<ParameterId> inputs,
                     std::vector<ParameterId> outputs,
                     std::map<std::string, std::string> attributes = {});

}  // namespace mlix
