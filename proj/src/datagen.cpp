#include "mlix/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <random>
#include <string_view>
#include <unordered_set>

namespace mlix {

void DatasetSpec::validate() const {
    const auto fail = [](const std::string& what) {
        throw std::invalid_argument("invalid dataset spec: " + what);
    };
    if (parameter_count == 0) fail("parameter count must be positive");
    if (parameter_count >
        std::uint64_t{std::numeric_limits<ParameterId>::max()} + 1) {
        fail("parameter count exceeds the id range");
    }
    if (service_count == 0) fail("service count must be positive");
    if (inputs_per_service == 0) fail("inputs per service must be positive");
    if (outputs_per_service == 0) fail("outputs per service must be positive");
    if (request_size == 0) fail("request size must be positive");
    if (inputs_per_service > parameter_count)
        fail("inputs per service exceeds the parameter count");
    if (outputs_per_service > parameter_count)
        fail("outputs per service exceeds the parameter count");
    if (request_size > parameter_count)
        fail("request size exceeds the parameter count");
}

namespace {

// Floyd's algorithm: k distinct ids from [0, universe), sorted ascending.
// One rng draw per element keeps the stream layout independent of the
// values drawn, which is what makes generation reproducible.
ParamSet sample_distinct(std::uint32_t k, std::uint64_t universe,
                         std::mt19937_64& rng) {
    ParamSet out;
    out.reserve(k);
    for (std::uint64_t j = universe - k; j < universe; ++j) {
        const auto candidate = static_cast<ParameterId>(rng() % (j + 1));
        if (std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(candidate);
        } else {
            out.push_back(static_cast<ParameterId>(j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Dataset generate(const DatasetSpec& spec) {
    spec.validate();
    Dataset data;
    data.spec = spec;
    for (std::uint64_t i = 0; i < spec.parameter_count; ++i) {
        data.parameters.intern("p" + std::to_string(i));
    }

    std::mt19937_64 rng(spec.seed);
    data.services.reserve(spec.service_count);
    for (std::uint64_t i = 0; i < spec.service_count; ++i) {
        Service s;
        s.id = i;
        s.inputs =
            sample_distinct(spec.inputs_per_service, spec.parameter_count, rng);
        s.outputs = sample_distinct(spec.outputs_per_service,
                                    spec.parameter_count, rng);
        data.services.push_back(std::move(s));
    }
    data.requests.reserve(spec.request_count);
    for (std::uint64_t i = 0; i < spec.request_count; ++i) {
        data.requests.push_back(
            sample_distinct(spec.request_size, spec.parameter_count, rng));
    }
    return data;
}

std::vector<ParamSet> generate_requests(std::uint64_t count,
                                        std::uint32_t request_size,
                                        std::uint64_t parameter_count,
                                        std::uint64_t seed) {
    if (parameter_count == 0 || request_size > parameter_count) {
        throw std::invalid_argument(
            "request size must fit the parameter universe");
    }
    std::mt19937_64 rng(seed);
    std::vector<ParamSet> requests;
    requests.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        requests.push_back(sample_distinct(request_size, parameter_count, rng));
    }
    return requests;
}

DatasetParseError::DatasetParseError(std::size_t line,
                                     const std::string& message)
    : std::runtime_error("dataset parse error at line " +
                         std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

void append_ids(std::string& out, const ParamSet& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += std::to_string(ids[i]);
    }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !text.empty();
}

// Consumes "name=<number>" from the front of `rest` (plus the preceding
// separator) or throws.
template <typename T>
T take_field(std::string_view& rest, std::string_view name,
             std::size_t line) {
    const std::string prefix = " " + std::string(name) + "=";
    if (rest.substr(0, prefix.size()) != prefix) {
        throw DatasetParseError(line, "expected header field '" +
                                          std::string(name) + "='");
    }
    rest.remove_prefix(prefix.size());
    const std::size_t end = rest.find(' ');
    const std::string_view value =
        end == std::string_view::npos ? rest : rest.substr(0, end);
    T out{};
    if (!parse_number(value, out)) {
        throw DatasetParseError(line, "bad number in header field '" +
                                          std::string(name) + "='");
    }
    rest.remove_prefix(value.size());
    return out;
}

ParamSet parse_id_list(std::string_view text, std::uint64_t parameter_count,
                       std::size_t line, const char* what) {
    ParamSet ids;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        ParameterId id = 0;
        if (end == pos || !parse_number(text.substr(pos, end - pos), id)) {
            throw DatasetParseError(
                line, std::string("bad ") + what + " parameter id");
        }
        if (id >= parameter_count) {
            throw DatasetParseError(
                line, std::string(what) + " parameter id " +
                          std::to_string(id) + " is outside the universe");
        }
        if (!ids.empty() && ids.back() >= id) {
            throw DatasetParseError(
                line, std::string(what) +
                          " parameter ids must be strictly ascending");
        }
        ids.push_back(id);
        pos = end + 1;
    }
    return ids;
}

}  // namespace

void write_dataset(const Dataset& dataset, std::ostream& out) {
    const DatasetSpec& spec = dataset.spec;
    std::string line = "#mlix-dataset v1";
    line += " P=" + std::to_string(spec.parameter_count);
    line += " S=" + std::to_string(spec.service_count);
    line += " n=" + std::to_string(spec.inputs_per_service);
    line += " m=" + std::to_string(spec.outputs_per_service);
    line += " r=" + std::to_string(spec.request_size);
    line += " seed=" + std::to_string(spec.seed);
    line.push_back('\n');
    out << line;

    for (const Service& s : dataset.services) {
        line = "S " + std::to_string(s.id) + "|";
        append_ids(line, s.inputs);
        line.push_back('|');
        append_ids(line, s.outputs);
        line.push_back('\n');
        out << line;
    }
    for (const ParamSet& request : dataset.requests) {
        line = "R";
        if (!request.empty()) {
            line.push_back(' ');
            append_ids(line, request);
        }
        line.push_back('\n');
        out << line;
    }
    if (!out) throw std::runtime_error("failed while writing dataset");
}

void write_dataset(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_dataset(dataset, out);
}

Dataset read_dataset(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;

    if (!std::getline(in, text)) {
        throw DatasetParseError(1, "missing header line");
    }
    line_no = 1;
    std::string_view rest(text);
    const std::string_view magic = "#mlix-dataset v1";
    if (rest.substr(0, magic.size()) != magic) {
        throw DatasetParseError(1, "expected '#mlix-dataset v1' header");
    }
    rest.remove_prefix(magic.size());

    Dataset data;
    DatasetSpec& spec = data.spec;
    spec.parameter_count = take_field<std::uint64_t>(rest, "P", 1);
    spec.service_count = take_field<std::uint64_t>(rest, "S", 1);
    spec.inputs_per_service = take_field<std::uint32_t>(rest, "n", 1);
    spec.outputs_per_service = take_field<std::uint32_t>(rest, "m", 1);
    spec.request_size = take_field<std::uint32_t>(rest, "r", 1);
    spec.seed = take_field<std::uint64_t>(rest, "seed", 1);
    if (!rest.empty()) {
        throw DatasetParseError(1, "trailing text after header fields");
    }
    if (spec.parameter_count == 0) {
        throw DatasetParseError(1, "parameter count must be positive");
    }
    if (spec.parameter_count >
        std::uint64_t{std::numeric_limits<ParameterId>::max()} + 1) {
        throw DatasetParseError(1, "parameter count exceeds the id range");
    }

    for (std::uint64_t i = 0; i < spec.parameter_count; ++i) {
        data.parameters.intern("p" + std::to_string(i));
    }

    std::unordered_set<ServiceId> seen_ids;
    while (std::getline(in, text)) {
        ++line_no;
        std::string_view body(text);
        if (body.substr(0, 2) == "S ") {
            body.remove_prefix(2);
            const std::size_t bar1 = body.find('|');
            const std::size_t bar2 =
                bar1 == std::string_view::npos ? bar1
                                               : body.find('|', bar1 + 1);
            if (bar1 == std::string_view::npos ||
                bar2 == std::string_view::npos ||
                body.find('|', bar2 + 1) != std::string_view::npos) {
                throw DatasetParseError(
                    line_no, "service line needs 'S <id>|<inputs>|<outputs>'");
            }
            Service s;
            if (!parse_number(body.substr(0, bar1), s.id)) {
                throw DatasetParseError(line_no, "bad service id");
            }
            if (!seen_ids.insert(s.id).second) {
                throw DatasetParseError(line_no, "duplicate service id " +
                                                     std::to_string(s.id));
            }
            s.inputs = parse_id_list(body.substr(bar1 + 1, bar2 - bar1 - 1),
                                     spec.parameter_count, line_no, "input");
            s.outputs = parse_id_list(body.substr(bar2 + 1),
                                      spec.parameter_count, line_no, "output");
            if (s.inputs.empty()) {
                throw DatasetParseError(line_no,
                                        "service has no input parameters");
            }
            data.services.push_back(std::move(s));
        } else if (body == "R" || body.substr(0, 2) == "R ") {
            const std::string_view ids =
                body == "R" ? std::string_view{} : body.substr(2);
            data.requests.push_back(parse_id_list(ids, spec.parameter_count,
                                                  line_no, "request"));
        } else {
            throw DatasetParseError(line_no,
                                    "expected a service or request line");
        }
    }

    if (data.services.size() != spec.service_count) {
        throw DatasetParseError(
            line_no + 1, "header announces " +
                             std::to_string(spec.service_count) +
                             " services but the file holds " +
                             std::to_string(data.services.size()));
    }
    spec.request_count = data.requests.size();
    return data;
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return read_dataset(in);
}

}  // namespace mlix
