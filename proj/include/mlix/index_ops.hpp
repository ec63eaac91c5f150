#pragma once

#include <cstdint>
#include <vector>

#include "mlix/index_model.hpp"
#include "mlix/key_selection.hpp"
#include "mlix/service.hpp"

namespace mlix {

// Counting rules for the reports below (see also param_set.hpp):
//
//  * every key-directory probe costs one comparison and is charged to
//    both parameter_comparisons and key_directory_comparisons, no matter
//    whether it happens while scanning, selecting a key, or inserting;
//  * input-set and output-set tests are charged per the set rules in
//    param_set.hpp and land in parameter_comparisons only;
//  * materializing a new similar class charges one test per output id
//    (the cost of building the class's ordered output set); opening a key
//    class or an input-similar class charges nothing beyond the probes
//    and set tests that led there.

/// What one addition call cost and what it changed.
struct AdditionReport {
    std::uint64_t parameter_comparisons = 0;     ///< total id tests
    std::uint64_t key_directory_comparisons = 0; ///< share spent in directory descent
    std::uint64_t classes_scanned = 0;           ///< classes whose sets were tested
    bool created_key_class = false;
    bool created_input_similar_class = false;
    bool created_similar_class = false;
};

/// What one retrieval call visited.  traversed_services counts services
/// examined directly (primary) or reachable through every examined class
/// (partial/full); parameter_comparisons covers the subset tests only.
struct TraversalReport {
    std::uint64_t traversed_services = 0;
    std::uint64_t traversed_classes = 0;
    std::uint64_t parameter_comparisons = 0;
    std::uint64_t results = 0;
};

struct RetrievalResult {
    std::vector<ServiceId> services;  ///< ascending id order, no duplicates
    TraversalReport report;
};

/// Adds a service to a primary index: the selector picks a key among the
/// service's inputs and the service is filed under that key class
/// (created on demand).  Throws std::invalid_argument on a duplicate id,
/// empty inputs, or ids outside the bound parameter universe, and
/// std::logic_error on a deployment mismatch.
AdditionReport add_service_primary(IndexModel& index, const Service& service,
                                   KeySelector& selector);

/// Adds a service to a partial or full index by scanning: walks the
/// service's inputs in ascending order and, for each one that is a key,
/// scans that key class for an input-similar class with the same input
/// set.  Joins the first match; otherwise asks the selector for a key and
/// opens a new class there.  Works with any selector.
AdditionReport add_service_scan(IndexModel& index, const Service& service,
                                KeySelector& selector);

/// Adds a service to a partial or full index by computing the designated
/// key of its inputs and checking only that one key class.  Produces the
/// same classes as add_service_scan with a Designated selector, at a
/// fraction of the comparisons.
AdditionReport add_service_designated(IndexModel& index,
                                      const Service& service);

/// Strategy-aware entry point: primary indexes go through
/// add_service_primary; partial/full indexes go through
/// add_service_designated when the selector is Designated and through
/// add_service_scan otherwise.
AdditionReport add_service(IndexModel& index, const Service& service,
                           KeySelector& selector);

/// Retrieves every indexed service whose inputs are contained in
/// `request` (which must be canonical; may be empty).  Each request
/// parameter that is a key has its key class examined: primary indexes
/// test each member service, partial/full indexes test each input-similar
/// class and emit all services below a matching class.  Every service
/// lives under exactly one key, so no deduplication is needed.
RetrievalResult retrieve(const IndexModel& index, const ParamSet& request);

}  // namespace mlix
