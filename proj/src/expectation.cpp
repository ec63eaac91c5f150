#include "mlix/expectation.hpp"

#include <cmath>
#include <stdexcept>

namespace mlix {

namespace {

void require_positive(std::uint64_t value, const char* symbol) {
    if (value == 0) {
        throw std::domain_error(std::string(symbol) + " must be positive");
    }
}

}  // namespace

double expected_retrieval(Deployment deployment, const ExpectationInputs& in) {
    require_positive(in.parameter_count, "parameter count (P)");
    const double per_parameter =
        in.request_size / static_cast<double>(in.parameter_count);
    switch (deployment) {
        case Deployment::Primary:
            return per_parameter * static_cast<double>(in.service_count);
        case Deployment::Partial:
        case Deployment::Full:
            return per_parameter *
                   static_cast<double>(in.input_similar_count);
    }
    throw std::logic_error("unreachable deployment");
}

double expected_addition(Deployment deployment, AdditionMethod method,
                         const ExpectationInputs& in) {
    require_positive(in.key_count, "key count (K)");
    const double log_keys = std::log2(static_cast<double>(in.key_count));
    if (deployment == Deployment::Primary) {
        // Both methods make a single directory descent.
        return log_keys;
    }

    require_positive(in.parameter_count, "parameter count (P)");
    // Random consults the directory for each of the n inputs; designated
    // for exactly one.  Each consulted key is present with probability
    // |K|/|P| and its class list holds |R2|/|K| classes of n ids each.
    const double lookups =
        method == AdditionMethod::Random ? in.inputs_per_service : 1.0;
    const double key_hit_rate = static_cast<double>(in.key_count) /
                                static_cast<double>(in.parameter_count);
    const double classes_per_key =
        static_cast<double>(in.input_similar_count) /
        static_cast<double>(in.key_count);
    double cost = lookups * log_keys +
                  key_hit_rate * lookups * classes_per_key *
                      in.inputs_per_service;
    if (deployment == Deployment::Full) {
        require_positive(in.input_similar_count,
                         "input-similar class count (R2)");
        cost += static_cast<double>(in.similar_count) /
                static_cast<double>(in.input_similar_count) *
                in.outputs_per_service;
    }
    return cost;
}

}  // namespace mlix
