#include "mlix/key_selection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mlix {

std::string_view to_string(KeyStrategy strategy) {
    switch (strategy) {
        case KeyStrategy::Original: return "original";
        case KeyStrategy::Random: return "random";
        case KeyStrategy::Maximum: return "maximum";
        case KeyStrategy::Minimum: return "minimum";
        case KeyStrategy::Designated: return "designated";
    }
    return "?";
}

std::optional<KeyStrategy> parse_strategy(std::string_view name) {
    if (name == "original") return KeyStrategy::Original;
    if (name == "random") return KeyStrategy::Random;
    if (name == "maximum") return KeyStrategy::Maximum;
    if (name == "minimum") return KeyStrategy::Minimum;
    if (name == "designated") return KeyStrategy::Designated;
    return std::nullopt;
}

ParameterId designated_key(const ParamSet& inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument(
            "cannot select a key from an empty input set");
    }
    std::uint64_t sum = 0;
    for (ParameterId id : inputs) sum += id;
    return inputs[sum % inputs.size()];
}

namespace {

// Smallest input that is (Maximum) or is not (Minimum) already a key;
// falls back to the smallest input when no parameter qualifies.
ParameterId first_input_where(const ParamSet& inputs, const IndexModel& index,
                              bool want_existing_key,
                              std::uint64_t& directory_comparisons) {
    for (ParameterId p : inputs) {
        const bool is_key =
            index.directory().find(p, directory_comparisons) != nullptr;
        if (is_key == want_existing_key) return p;
    }
    return inputs.front();
}

// Keeps key-class sizes close to sqrt(population + 1), where population is
// the number the classes partition: services in a primary index,
// input-similar classes otherwise.  Picks the input whose class would land
// closest to that target after the addition; the smallest id wins ties.
ParameterId balanced_key(const ParamSet& inputs, const IndexModel& index,
                         std::uint64_t& directory_comparisons) {
    const IndexStats stats = index.stats();
    const std::uint64_t population = index.deployment() == Deployment::Primary
                                         ? stats.service_count
                                         : stats.input_similar_count;
    const double target = std::sqrt(static_cast<double>(population + 1));

    ParameterId best = inputs.front();
    double best_distance = std::numeric_limits<double>::infinity();
    for (ParameterId p : inputs) {
        const KeyClass* kc = index.directory().find(p, directory_comparisons);
        const std::uint64_t size =
            kc != nullptr ? kc->member_count(index.deployment()) : 0;
        const double distance =
            std::abs(static_cast<double>(size + 1) - target);
        if (distance < best_distance) {
            best_distance = distance;
            best = p;
        }
    }
    return best;
}

}  // namespace

ParameterId KeySelector::select(const ParamSet& inputs, const IndexModel& index,
                                std::uint64_t& directory_comparisons) {
    if (inputs.empty()) {
        throw std::invalid_argument(
            "cannot select a key from an empty input set");
    }
    switch (strategy_) {
        case KeyStrategy::Designated:
            return designated_key(inputs);
        case KeyStrategy::Random:
            return inputs[rng_() % inputs.size()];
        case KeyStrategy::Maximum:
            return first_input_where(inputs, index, false,
                                     directory_comparisons);
        case KeyStrategy::Minimum:
            return first_input_where(inputs, index, true,
                                     directory_comparisons);
        case KeyStrategy::Original:
            return balanced_key(inputs, index, directory_comparisons);
    }
    throw std::logic_error("unreachable key strategy");
}

}  // namespace mlix
