#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlix/param_set.hpp"

namespace mlix {

/// Interns parameter names into dense ids (0, 1, 2, ... in first-seen
/// order).  The id order doubles as the canonical parameter order, so a
/// table bound to an index also fixes |P| for that index.
class ParameterTable {
public:
    /// Returns the id of `name`, assigning the next free id on first use.
    ParameterId intern(std::string_view name);

    /// Id of a previously interned name, or nullopt.
    std::optional<ParameterId> lookup(std::string_view name) const;

    /// Name behind an id; throws std::out_of_range for unknown ids.
    const std::string& name_of(ParameterId id) const;

    /// Number of distinct parameters interned so far (|P|).
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ParameterId> ids_;
};

}  // namespace mlix
