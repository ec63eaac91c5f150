#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "mlix/index_model.hpp"
#include "mlix/param_set.hpp"

namespace mlix {

/// Strategies for picking the key parameter under which a service (or its
/// input-similar class) is filed.
///
///  * Original:   keep key-class sizes near the square root of the current
///                population (services in a primary index, input-similar
///                classes otherwise); smallest id wins ties.
///  * Random:     uniform choice among the inputs (seeded, deterministic).
///  * Maximum:    prefer a parameter that is not yet a key, so the key
///                directory grows as fast as possible.
///  * Minimum:    prefer a parameter that already is a key, so the key
///                directory grows as slowly as possible.
///  * Designated: position (sum of input ids) mod (input count) in the
///                ascending input list; a pure function of the input set,
///                so every service with the same inputs picks the same key.
enum class KeyStrategy { Original, Random, Maximum, Minimum, Designated };

std::string_view to_string(KeyStrategy strategy);
std::optional<KeyStrategy> parse_strategy(std::string_view name);

/// The designated key of an input set: with c = |inputs| and the inputs in
/// ascending order, returns the element at position (sum of ids) mod c
/// (0-based).  Throws std::invalid_argument on an empty set.
ParameterId designated_key(const ParamSet& inputs);

/// A key-selection strategy plus whatever state it needs.  Random draws
/// from a seeded mt19937_64 (index = next() mod |inputs|), so two selectors
/// with the same seed produce the same key sequence.  The other strategies
/// are pure functions of (inputs, index state).
class KeySelector {
public:
    explicit KeySelector(KeyStrategy strategy, std::uint64_t seed = 0)
        : strategy_(strategy), rng_(seed) {}

    KeyStrategy strategy() const noexcept { return strategy_; }

    /// Picks one of `inputs` as the key.  Key-directory probes made while
    /// deciding (Original's size queries, Maximum/Minimum's membership
    /// tests) each add one comparison to `directory_comparisons`.
    /// Throws std::invalid_argument on an empty input set.
    ParameterId select(const ParamSet& inputs, const IndexModel& index,
                       std::uint64_t& directory_comparisons);

private:
    KeyStrategy strategy_;
    std::mt19937_64 rng_;
};

}  // namespace mlix
