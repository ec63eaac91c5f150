#include "mlix/index_ops.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace mlix {

namespace {

void validate_new_service(const IndexModel& index, const Service& s) {
    if (s.inputs.empty()) {
        throw std::invalid_argument("service " + std::to_string(s.id) +
                                    " has no input parameters");
    }
    if (!is_canonical(s.inputs) || !is_canonical(s.outputs)) {
        throw std::invalid_argument(
            "service " + std::to_string(s.id) +
            " has parameter sets that are not sorted and duplicate-free");
    }
    const std::uint64_t universe = index.stats().parameter_count;
    if ((!s.inputs.empty() && s.inputs.back() >= universe) ||
        (!s.outputs.empty() && s.outputs.back() >= universe)) {
        throw std::invalid_argument(
            "service " + std::to_string(s.id) +
            " uses parameter ids outside the bound universe");
    }
    if (index.contains_service(s.id)) {
        throw std::invalid_argument("duplicate service id " +
                                    std::to_string(s.id));
    }
}

// Files the service into a located input-similar class.  Partial indexes
// append the id directly.  Full indexes scan the similar classes in
// insertion order for a matching output set and open a new one when none
// matches; materializing the new class charges one test per output id.
void place_service(Deployment deployment, InputSimilarClass& isc,
                   const Service& s, std::uint64_t& set_comparisons,
                   std::uint64_t& similar_count, AdditionReport& report) {
    if (deployment == Deployment::Partial) {
        isc.services.push_back(s.id);
        return;
    }
    for (SimilarClass& sc : isc.classes) {
        ++report.classes_scanned;
        if (set_equal_counted(sc.outputs, s.outputs, set_comparisons)) {
            sc.members.push_back(s.id);
            return;
        }
    }
    set_comparisons += s.outputs.size();
    isc.classes.push_back(SimilarClass{s.inputs, s.outputs, {s.id}});
    similar_count += 1;
    report.created_similar_class = true;
}

// Opens a new input-similar class under `kc` and files the service there.
void open_class(Deployment deployment, KeyClass& kc, const Service& s,
                std::uint64_t& set_comparisons,
                std::uint64_t& input_similar_count,
                std::uint64_t& similar_count, AdditionReport& report) {
    kc.classes.push_back(InputSimilarClass{s.inputs, {}, {}});
    input_similar_count += 1;
    report.created_input_similar_class = true;
    place_service(deployment, kc.classes.back(), s, set_comparisons,
                  similar_count, report);
}

}  // namespace

AdditionReport add_service_primary(IndexModel& index, const Service& s,
                                   KeySelector& selector) {
    if (index.deployment() != Deployment::Primary) {
        throw std::logic_error("add_service_primary needs a primary index");
    }
    validate_new_service(index, s);

    AdditionReport report;
    std::uint64_t dir = 0;
    const ParameterId key = selector.select(s.inputs, index, dir);
    KeyClass& kc =
        index.directory_.find_or_create(key, dir, report.created_key_class);
    kc.services.push_back(ServiceRef{s.id, s.inputs});
    index.service_ids_.insert(s.id);

    report.key_directory_comparisons = dir;
    report.parameter_comparisons = dir;
    return report;
}

AdditionReport add_service_scan(IndexModel& index, const Service& s,
                                KeySelector& selector) {
    if (index.deployment() == Deployment::Primary) {
        throw std::logic_error(
            "add_service_scan needs a partial or full index");
    }
    validate_new_service(index, s);

    AdditionReport report;
    std::uint64_t dir = 0;
    std::uint64_t sets = 0;
    const auto finish = [&]() {
        index.service_ids_.insert(s.id);
        report.key_directory_comparisons = dir;
        report.parameter_comparisons = dir + sets;
        return report;
    };

    // Walk the inputs in ascending order; any existing class with this
    // exact input set lives under one of them.
    for (ParameterId p : s.inputs) {
        KeyClass* kc = index.directory_.find(p, dir);
        if (kc == nullptr) continue;
        for (InputSimilarClass& isc : kc->classes) {
            ++report.classes_scanned;
            if (set_equal_counted(isc.inputs, s.inputs, sets)) {
                place_service(index.deployment(), isc, s, sets,
                              index.similar_count_, report);
                return finish();
            }
        }
    }

    // No class matches anywhere: pick a key and open a class under it.
    const ParameterId key = selector.select(s.inputs, index, dir);
    KeyClass& kc =
        index.directory_.find_or_create(key, dir, report.created_key_class);
    open_class(index.deployment(), kc, s, sets, index.input_similar_count_,
               index.similar_count_, report);
    return finish();
}

AdditionReport add_service_designated(IndexModel& index, const Service& s) {
    if (index.deployment() == Deployment::Primary) {
        throw std::logic_error(
            "add_service_designated needs a partial or full index");
    }
    validate_new_service(index, s);

    AdditionReport report;
    std::uint64_t dir = 0;
    std::uint64_t sets = 0;

    // The designated key is a pure function of the input set, so the only
    // key class that can hold a matching input-similar class is this one.
    const ParameterId key = designated_key(s.inputs);
    KeyClass& kc =
        index.directory_.find_or_create(key, dir, report.created_key_class);
    for (InputSimilarClass& isc : kc.classes) {
        ++report.classes_scanned;
        if (set_equal_counted(isc.inputs, s.inputs, sets)) {
            place_service(index.deployment(), isc, s, sets,
                          index.similar_count_, report);
            index.service_ids_.insert(s.id);
            report.key_directory_comparisons = dir;
            report.parameter_comparisons = dir + sets;
            return report;
        }
    }
    open_class(index.deployment(), kc, s, sets, index.input_similar_count_,
               index.similar_count_, report);
    index.service_ids_.insert(s.id);
    report.key_directory_comparisons = dir;
    report.parameter_comparisons = dir + sets;
    return report;
}

AdditionReport add_service(IndexModel& index, const Service& s,
                           KeySelector& selector) {
    if (index.deployment() == Deployment::Primary) {
        return add_service_primary(index, s, selector);
    }
    if (selector.strategy() == KeyStrategy::Designated) {
        return add_service_designated(index, s);
    }
    return add_service_scan(index, s, selector);
}

RetrievalResult retrieve(const IndexModel& index, const ParamSet& request) {
    assert(is_canonical(request));
    RetrievalResult out;
    TraversalReport& report = out.report;
    std::uint64_t scratch = 0;  // directory descent is not a traversal metric

    for (ParameterId p : request) {
        const KeyClass* kc = index.directory().find(p, scratch);
        if (kc == nullptr) continue;
        if (index.deployment() == Deployment::Primary) {
            for (const ServiceRef& ref : kc->services) {
                ++report.traversed_services;
                if (subset_of_counted(ref.inputs, request,
                                      report.parameter_comparisons)) {
                    out.services.push_back(ref.id);
                }
            }
        } else {
            for (const InputSimilarClass& isc : kc->classes) {
                ++report.traversed_classes;
                report.traversed_services += isc.service_count();
                if (!subset_of_counted(isc.inputs, request,
                                       report.parameter_comparisons)) {
                    continue;
                }
                out.services.insert(out.services.end(), isc.services.begin(),
                                    isc.services.end());
                for (const SimilarClass& sc : isc.classes) {
                    out.services.insert(out.services.end(),
                                        sc.members.begin(), sc.members.end());
                }
            }
        }
    }

    std::sort(out.services.begin(), out.services.end());
    // Each service sits under exactly one key, and each request parameter
    // is visited once, so nothing can be emitted twice.
    assert(std::adjacent_find(out.services.begin(), out.services.end()) ==
           out.services.end());
    report.results = out.services.size();
    return out;
}

}  // namespace mlix
