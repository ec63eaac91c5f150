#include "mlix/index_model.hpp"

#include <cassert>

namespace mlix {

std::string_view to_string(Deployment deployment) {
    switch (deployment) {
        case Deployment::Primary: return "primary";
        case Deployment::Partial: return "partial";
        case Deployment::Full: return "full";
    }
    return "?";
}

std::optional<Deployment> parse_deployment(std::string_view name) {
    if (name == "primary") return Deployment::Primary;
    if (name == "partial") return Deployment::Partial;
    if (name == "full") return Deployment::Full;
    return std::nullopt;
}

std::uint64_t InputSimilarClass::service_count() const noexcept {
    std::uint64_t total = services.size();
    for (const SimilarClass& sc : classes) total += sc.members.size();
    return total;
}

std::uint64_t KeyClass::member_count(Deployment deployment) const noexcept {
    return deployment == Deployment::Primary ? services.size()
                                             : classes.size();
}

std::pair<std::size_t, bool> KeyDirectory::locate(
    ParameterId key, std::uint64_t& comparisons) const {
    std::size_t lo = 0;
    std::size_t hi = classes_.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++comparisons;  // one three-way id test per probe
        const ParameterId probe = classes_[mid].key;
        if (probe == key) return {mid, true};
        if (probe < key) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return {lo, false};
}

const KeyClass* KeyDirectory::find(ParameterId key,
                                   std::uint64_t& comparisons) const {
    const auto [pos, found] = locate(key, comparisons);
    return found ? &classes_[pos] : nullptr;
}

KeyClass* KeyDirectory::find(ParameterId key, std::uint64_t& comparisons) {
    const auto [pos, found] = locate(key, comparisons);
    return found ? &classes_[pos] : nullptr;
}

const KeyClass* KeyDirectory::find(ParameterId key) const {
    std::uint64_t scratch = 0;
    return find(key, scratch);
}

KeyClass& KeyDirectory::find_or_create(ParameterId key,
                                       std::uint64_t& comparisons,
                                       bool& created) {
    const auto [pos, found] = locate(key, comparisons);
    created = !found;
    if (!found) {
        classes_.insert(classes_.begin() + static_cast<std::ptrdiff_t>(pos),
                        KeyClass{key, {}, {}});
    }
    return classes_[pos];
}

IndexModel::IndexModel(Deployment deployment, std::uint64_t parameter_count)
    : deployment_(deployment), parameter_count_(parameter_count) {}

IndexModel::IndexModel(Deployment deployment, const ParameterTable& parameters)
    : IndexModel(deployment, parameters.size()) {}

IndexStats IndexModel::stats() const noexcept {
    IndexStats s;
    s.service_count = service_ids_.size();
    s.input_similar_count = input_similar_count_;
    s.similar_count = similar_count_;
    s.key_count = directory_.size();
    s.parameter_count = parameter_count_;
    return s;
}

}  // namespace mlix
