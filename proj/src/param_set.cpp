#include "mlix/param_set.hpp"

namespace mlix {

ParamSet make_param_set(std::vector<ParameterId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool is_canonical(const ParamSet& set) {
    for (std::size_t i = 1; i < set.size(); ++i) {
        if (set[i - 1] >= set[i]) return false;
    }
    return true;
}

}  // namespace mlix
