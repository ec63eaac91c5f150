#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mlix {

/// Dense, totally ordered parameter identifier produced by ParameterTable.
using ParameterId = std::uint32_t;

/// Identifier of a service record; unique within one index.
using ServiceId = std::uint64_t;

/// A set of parameter ids kept sorted ascending with no duplicates.
/// Ascending id order is the canonical order used everywhere: in service
/// records, class definitions, directory scans and file output.
using ParamSet = std::vector<ParameterId>;

// Comparison counting
// -------------------
// Every count reported by this library is a number of parameter-id tests
// (one equality-or-order test of two ids costs 1).  The two set operations
// below implement the counting rules used throughout:
//
//  * set equality: sets of different size cost 1 (the size check settles
//    it); equal-size sets are compared element by element and stop at the
//    first mismatch, costing one test per pair examined;
//  * subset test: a linear merge over both sorted sets, costing one test
//    per merge step executed.

/// Sorts and deduplicates `ids` into canonical form.
ParamSet make_param_set(std::vector<ParameterId> ids);

/// True iff `set` is sorted ascending with no duplicates.
bool is_canonical(const ParamSet& set);

/// True iff a == b. Adds the number of id tests performed to `comparisons`.
inline bool set_equal_counted(const ParamSet& a, const ParamSet& b,
                              std::uint64_t& comparisons) {
    if (a.size() != b.size()) {
        comparisons += 1;
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++comparisons;
        if (a[i] != b[i]) return false;
    }
    return true;
}

/// True iff every element of `needle` occurs in `hay` (both canonical).
/// Adds the number of merge steps executed to `comparisons`.
inline bool subset_of_counted(const ParamSet& needle, const ParamSet& hay,
                              std::uint64_t& comparisons) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < needle.size() && j < hay.size()) {
        ++comparisons;
        if (needle[i] == hay[j]) {
            ++i;
            ++j;
        } else if (needle[i] > hay[j]) {
            ++j;
        } else {
            return false;  // needle[i] is missing from hay
        }
    }
    return i == needle.size();
}

/// Uncounted subset test, for callers outside the instrumented paths.
inline bool subset_of(const ParamSet& needle, const ParamSet& hay) {
    return std::includes(hay.begin(), hay.end(), needle.begin(), needle.end());
}

}  // namespace mlix
