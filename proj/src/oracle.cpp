#include "mlix/oracle.hpp"

#include <algorithm>

namespace mlix {

std::vector<ServiceId> brute_force_retrieve(std::span<const Service> services,
                                            const ParamSet& request) {
    std::vector<ServiceId> hits;
    for (const Service& s : services) {
        if (subset_of(s.inputs, request)) hits.push_back(s.id);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace mlix
