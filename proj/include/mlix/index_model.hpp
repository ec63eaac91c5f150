#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mlix/param_set.hpp"
#include "mlix/parameter_table.hpp"
#include "mlix/service.hpp"

namespace mlix {

/// How many levels of the index are materialized.
///
///  * Primary: key directory -> services.
///  * Partial: key directory -> input-similar classes -> services.
///  * Full:    key directory -> input-similar classes -> similar classes
///             -> services.
enum class Deployment { Primary, Partial, Full };

std::string_view to_string(Deployment deployment);
std::optional<Deployment> parse_deployment(std::string_view name);

/// Services that share both the input set and the output set
/// (finest grouping, present in the full deployment only).
struct SimilarClass {
    ParamSet inputs;
    ParamSet outputs;
    std::vector<ServiceId> members;  ///< insertion order, never empty
};

/// Services that share the input set.  Exactly one of the two member
/// containers is populated, depending on the deployment: `services` in a
/// partial index, `classes` in a full index.
struct InputSimilarClass {
    ParamSet inputs;
    std::vector<ServiceId> services;
    std::vector<SimilarClass> classes;

    /// Number of services reachable below this class.
    std::uint64_t service_count() const noexcept;
};

/// A service as stored directly in a primary key class.  The input set is
/// kept alongside the id so retrieval can test containment in place.
struct ServiceRef {
    ServiceId id = 0;
    ParamSet inputs;
};

/// Everything indexed under one key parameter.  `services` is used by the
/// primary deployment, `classes` by the partial and full deployments.
struct KeyClass {
    ParameterId key = 0;
    std::vector<ServiceRef> services;
    std::vector<InputSimilarClass> classes;

    /// Direct member count: services in a primary index, input-similar
    /// classes otherwise.
    std::uint64_t member_count(Deployment deployment) const noexcept;
};

/// The key directory: key classes kept sorted by key id and located by
/// binary search.  Looking up any present key costs at most
/// floor(log2 |K|) + 1 key comparisons; iteration over `classes()` yields
/// ascending key order.
class KeyDirectory {
public:
    std::size_t size() const noexcept { return classes_.size(); }
    bool empty() const noexcept { return classes_.empty(); }
    const std::vector<KeyClass>& classes() const noexcept { return classes_; }

    /// Binary search for `key`; every probe adds one comparison to
    /// `comparisons`.  Returns nullptr when the key is not present.
    const KeyClass* find(ParameterId key, std::uint64_t& comparisons) const;
    KeyClass* find(ParameterId key, std::uint64_t& comparisons);

    /// Uncounted convenience lookup.
    const KeyClass* find(ParameterId key) const;

    /// Finds the class for `key`, inserting an empty one when absent.
    /// Probes are counted like find(); `created` reports what happened.
    KeyClass& find_or_create(ParameterId key, std::uint64_t& comparisons,
                             bool& created);

private:
    /// (position, found); when !found, position is where an insertion
    /// keeps the vector sorted.
    std::pair<std::size_t, bool> locate(ParameterId key,
                                        std::uint64_t& comparisons) const;

    std::vector<KeyClass> classes_;
};

/// Structural counters, maintained synchronously with every addition.
struct IndexStats {
    std::uint64_t service_count = 0;        ///< |S|
    std::uint64_t input_similar_count = 0;  ///< input-similar classes
    std::uint64_t similar_count = 0;        ///< similar classes
    std::uint64_t key_count = 0;            ///< |K|
    std::uint64_t parameter_count = 0;      ///< |P|

    bool operator==(const IndexStats&) const = default;
};

class KeySelector;
struct AdditionReport;

/// An in-memory multilevel index over a service repository.  The
/// deployment is fixed at construction; services enter through the
/// add_service* operations (index_ops.hpp) and are retrieved with
/// retrieve().  Single writer; concurrent const access is safe.
class IndexModel {
public:
    /// Empty index bound to a parameter universe of `parameter_count` ids.
    IndexModel(Deployment deployment, std::uint64_t parameter_count);

    /// Empty index bound to an interned parameter table (|P| = table size).
    IndexModel(Deployment deployment, const ParameterTable& parameters);

    Deployment deployment() const noexcept { return deployment_; }
    const KeyDirectory& directory() const noexcept { return directory_; }
    bool contains_service(ServiceId id) const {
        return service_ids_.count(id) != 0;
    }

    /// Consistent snapshot of the structural counters.
    IndexStats stats() const noexcept;

private:
    Deployment deployment_;
    std::uint64_t parameter_count_;
    KeyDirectory directory_;
    std::unordered_set<ServiceId> service_ids_;
    std::uint64_t input_similar_count_ = 0;
    std::uint64_t similar_count_ = 0;

    friend AdditionReport add_service_primary(IndexModel&, const Service&,
                                              KeySelector&);
    friend AdditionReport add_service_scan(IndexModel&, const Service&,
                                           KeySelector&);
    friend AdditionReport add_service_designated(IndexModel&, const Service&);
};

}  // namespace mlix
