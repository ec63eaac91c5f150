#pragma once

#include <cstdint>

#include "mlix/index_model.hpp"

namespace mlix {

/// Addition methods covered by the closed-form cost model.
enum class AdditionMethod { Random, Designated };

/// Symbols feeding the expectation formulas.  The per-record shape values
/// (request size r, inputs per service n, outputs per service m) are real
/// numbers so averages can be plugged in; the structure sizes are counts.
struct ExpectationInputs {
    double request_size = 0;        ///< r
    double inputs_per_service = 0;  ///< n
    double outputs_per_service = 0; ///< m
    std::uint64_t parameter_count = 0;      ///< |P|
    std::uint64_t service_count = 0;        ///< |S|
    std::uint64_t key_count = 0;            ///< |K|
    std::uint64_t input_similar_count = 0;  ///< input-similar classes
    std::uint64_t similar_count = 0;        ///< similar classes
};

/// Expected number of index entries traversed by one uniform random
/// request of size r:
///
///   primary:       (r / |P|) * |S|          services
///   partial, full: (r / |P|) * |R2|         input-similar classes
///
/// where |R2| is input_similar_count.  Linear in r and independent of the
/// key count.  Throws std::domain_error when parameter_count is zero.
double expected_retrieval(Deployment deployment, const ExpectationInputs& in);

/// Expected number of parameter comparisons for one service addition.
/// With L = log2 |K|:
///
///   primary (either method):  L
///   partial, random:          n*L + (|K|/|P|) * n * (|R2|/|K|) * n
///   partial, designated:        L + (|K|/|P|) * 1 * (|R2|/|K|) * n
///   full:                     the partial value + (|R1|/|R2|) * m
///
/// so the designated method costs exactly 1/n of the random method on a
/// partial index.  Throws std::domain_error when key_count is zero, when
/// parameter_count is zero (partial/full), or when input_similar_count is
/// zero (full).
double expected_addition(Deployment deployment, AdditionMethod method,
                         const ExpectationInputs& in);

}  // namespace mlix
