#include "mlix/parameter_table.hpp"

#include <stdexcept>

namespace mlix {

ParameterId ParameterTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<ParameterId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<ParameterId> ParameterTable::lookup(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& ParameterTable::name_of(ParameterId id) const {
    if (id >= names_.size()) {
        throw std::out_of_range("unknown parameter id " + std::to_string(id));
    }
    return names_[id];
}

}  // namespace mlix
