#pragma once

#include <span>
#include <vector>

#include "mlix/param_set.hpp"
#include "mlix/service.hpp"

namespace mlix {

/// Reference answer for retrieval: scans every service and returns the ids
/// (ascending) of those whose inputs are contained in `request`.  Costs
/// Theta(|S| * n) and is intentionally unoptimized; the index is correct
/// exactly when it reproduces this result.
std::vector<ServiceId> brute_force_retrieve(std::span<const Service> services,
                                            const ParamSet& request);

}  // namespace mlix
