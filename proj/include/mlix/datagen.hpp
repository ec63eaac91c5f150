#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlix/parameter_table.hpp"
#include "mlix/service.hpp"

namespace mlix {

/// Shape of a synthetic dataset.  All fields except request_count must be
/// positive, and n, m, r must not exceed the parameter count.
struct DatasetSpec {
    std::uint64_t parameter_count = 0;      ///< |P|
    std::uint64_t service_count = 0;        ///< |S|
    std::uint32_t inputs_per_service = 0;   ///< n
    std::uint32_t outputs_per_service = 0;  ///< m
    std::uint64_t request_count = 0;
    std::uint32_t request_size = 0;         ///< r
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when the shape is unusable.
    void validate() const;

    bool operator==(const DatasetSpec&) const = default;
};

/// A generated or loaded dataset: the interned parameter universe
/// (p0 .. p|P|-1), the service records, and the retrieval requests.
struct Dataset {
    DatasetSpec spec;
    ParameterTable parameters;
    std::vector<Service> services;
    std::vector<ParamSet> requests;
};

/// Deterministically generates a dataset from its spec: every service gets
/// n distinct inputs and m distinct outputs sampled uniformly from the
/// universe, every request gets r distinct parameters, all from one
/// mt19937_64 stream seeded with spec.seed.  Equal specs yield equal
/// datasets.
Dataset generate(const DatasetSpec& spec);

/// Generates `count` uniform requests of `request_size` distinct ids out
/// of `parameter_count`, from a fresh mt19937_64 seeded with `seed`.
std::vector<ParamSet> generate_requests(std::uint64_t count,
                                        std::uint32_t request_size,
                                        std::uint64_t parameter_count,
                                        std::uint64_t seed);

// Dataset files are UTF-8 text, one record per line:
//
//   #mlix-dataset v1 P=<count> S=<count> n=<n> m=<m> r=<r> seed=<seed>
//   S <id>|<input ids, space separated, ascending>|<output ids, ascending>
//   R <ids, space separated, ascending>
//
// The writer emits the header, then services in storage order, then
// requests; writing is canonical, so equal datasets serialize to
// byte-identical files and a read/write round trip is the identity.

/// Raised by read_dataset on malformed input; line() is 1-based.
class DatasetParseError : public std::runtime_error {
public:
    DatasetParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

void write_dataset(const Dataset& dataset, std::ostream& out);
void write_dataset(const Dataset& dataset, const std::string& path);

Dataset read_dataset(std::istream& in);
Dataset read_dataset(const std::string& path);

}  // namespace mlix
