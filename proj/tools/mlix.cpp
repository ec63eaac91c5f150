// mlix — build, exercise and measure multilevel service indexes.
//
//   generate        write a synthetic dataset file
//   bench-add       time and count index construction over a dataset
//   bench-retrieve  time and count retrieval over a dataset's requests
//   stability       per-request traversal spread across key methods
//   expect          closed-form cost estimates
//   verify          check index retrieval against the brute-force oracle
//
// Benchmark output is CSV with the fixed schema
//   experiment,dataset_id,deployment,key_method,metric,value,rep
// where dataset_id is the dataset's seed.  For a fixed seed every count
// column is exactly reproducible; rows whose metric starts with
// "wall_time" are the only nondeterministic ones.  In retrieval-style
// experiments the rep column of count rows is the request ordinal.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mlix/datagen.hpp"
#include "mlix/expectation.hpp"
#include "mlix/index_ops.hpp"
#include "mlix/oracle.hpp"

namespace {

using namespace mlix;

// ── Small utilities ──────────────────────────────────────────────────────

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double value, const char* fmt = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, value);
    return buf;
}

std::uint64_t median_of(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

double mean_of(const std::vector<std::uint64_t>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (std::uint64_t v : values) sum += static_cast<double>(v);
    return sum / static_cast<double>(values.size());
}

// Population standard deviation; 0 for a single observation.
double stddev_of(const std::vector<std::uint64_t>& values) {
    if (values.empty()) return 0.0;
    const double mean = mean_of(values);
    double sq = 0.0;
    for (std::uint64_t v : values) {
        const double d = static_cast<double>(v) - mean;
        sq += d * d;
    }
    return std::sqrt(sq / static_cast<double>(values.size()));
}

// Resolves the run seed: --seed beats MLIX_SEED beats 0.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("MLIX_SEED")) {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("MLIX_SEED is not a number: ") + env);
    }
    return 0;
}

Deployment need_deployment(const std::string& name) {
    const auto d = parse_deployment(name);
    if (!d) throw UsageError("unknown deployment '" + name + "'");
    return *d;
}

KeyStrategy need_strategy(const std::string& name) {
    const auto s = parse_strategy(name);
    if (!s) throw UsageError("unknown key method '" + name + "'");
    return *s;
}

Dataset load_dataset(const std::string& path) {
    if (path == "-") return read_dataset(std::cin);
    return read_dataset(path);
}

// Output sink that honours "-" as stdout.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open " + path + " for writing");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {
        out_ << "experiment,dataset_id,deployment,key_method,metric,value,rep\n";
    }
    void row(const std::string& experiment, std::uint64_t dataset_id,
             const std::string& deployment, const std::string& key_method,
             const std::string& metric, const std::string& value,
             std::uint64_t rep) {
        out_ << experiment << ',' << dataset_id << ',' << deployment << ','
             << key_method << ',' << metric << ',' << value << ',' << rep
             << '\n';
    }

private:
    std::ostream& out_;
};

// ── Shared measurement helpers ───────────────────────────────────────────

struct AdditionTotals {
    std::uint64_t parameter_comparisons = 0;
    std::uint64_t key_directory_comparisons = 0;
    std::uint64_t classes_scanned = 0;

    void absorb(const AdditionReport& r) {
        parameter_comparisons += r.parameter_comparisons;
        key_directory_comparisons += r.key_directory_comparisons;
        classes_scanned += r.classes_scanned;
    }
    bool operator==(const AdditionTotals&) const = default;
};

IndexModel build_index(const Dataset& data, Deployment deployment,
                       KeyStrategy strategy, std::uint64_t seed,
                       AdditionTotals* totals = nullptr) {
    KeySelector selector(strategy, seed);
    IndexModel index(deployment, data.parameters);
    for (const Service& s : data.services) {
        const AdditionReport report = add_service(index, s, selector);
        if (totals != nullptr) totals->absorb(report);
    }
    return index;
}

std::uint64_t nanoseconds_since(
    std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
}

// ── generate ─────────────────────────────────────────────────────────────

struct GenerateArgs {
    std::uint64_t params = 0;
    std::uint64_t services = 0;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t requests = 0;
    std::uint32_t r = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
};

int cmd_generate(const GenerateArgs& args) {
    DatasetSpec spec;
    spec.parameter_count = args.params;
    spec.service_count = args.services;
    spec.inputs_per_service = args.n;
    spec.outputs_per_service = args.m;
    spec.request_count = args.requests;
    spec.request_size = args.r;
    spec.seed = resolve_seed(args.seed_given, args.seed);
    const Dataset data = generate(spec);
    if (args.out == "-") {
        write_dataset(data, std::cout);
    } else {
        write_dataset(data, args.out);
    }
    return 0;
}

// ── bench-add ────────────────────────────────────────────────────────────

struct BenchArgs {
    std::string dataset;
    std::string deployment;
    std::string key_method;
    std::string out;
    std::uint32_t reps = 5;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int cmd_bench_add(const BenchArgs& args) {
    const Dataset data = load_dataset(args.dataset);
    const Deployment deployment = need_deployment(args.deployment);
    const KeyStrategy strategy = need_strategy(args.key_method);
    const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

    AdditionTotals totals;
    IndexStats stats;
    std::vector<std::uint64_t> times;
    for (std::uint32_t rep = 0; rep < args.reps; ++rep) {
        AdditionTotals t;
        const auto start = std::chrono::steady_clock::now();
        IndexModel index = build_index(data, deployment, strategy, seed, &t);
        times.push_back(nanoseconds_since(start));
        if (rep == 0) {
            totals = t;
            stats = index.stats();
        } else if (!(t == totals)) {
            throw std::runtime_error(
                "comparison counts differed between repetitions");
        }
    }

    OutputFile out(args.out);
    CsvWriter csv(out.stream());
    const std::uint64_t id = data.spec.seed;
    const std::string dep(to_string(deployment));
    const std::string method(to_string(strategy));
    for (std::size_t i = 0; i < times.size(); ++i) {
        csv.row("bench_add", id, dep, method, "wall_time_ns",
                std::to_string(times[i]), i);
    }
    csv.row("bench_add", id, dep, method, "wall_time_ns_median",
            std::to_string(median_of(times)), 0);
    csv.row("bench_add", id, dep, method, "parameter_comparisons_total",
            std::to_string(totals.parameter_comparisons), 0);
    csv.row("bench_add", id, dep, method, "key_directory_comparisons_total",
            std::to_string(totals.key_directory_comparisons), 0);
    csv.row("bench_add", id, dep, method, "classes_scanned_total",
            std::to_string(totals.classes_scanned), 0);
    csv.row("bench_add", id, dep, method, "stat_services",
            std::to_string(stats.service_count), 0);
    csv.row("bench_add", id, dep, method, "stat_input_similar_classes",
            std::to_string(stats.input_similar_count), 0);
    csv.row("bench_add", id, dep, method, "stat_similar_classes",
            std::to_string(stats.similar_count), 0);
    csv.row("bench_add", id, dep, method, "stat_keys",
            std::to_string(stats.key_count), 0);
    csv.row("bench_add", id, dep, method, "stat_parameters",
            std::to_string(stats.parameter_count), 0);
    csv.row("bench_add", id, dep, method, "dataset_n",
            std::to_string(data.spec.inputs_per_service), 0);
    csv.row("bench_add", id, dep, method, "dataset_m",
            std::to_string(data.spec.outputs_per_service), 0);
    csv.row("bench_add", id, dep, method, "dataset_r",
            std::to_string(data.spec.request_size), 0);
    return 0;
}

// ── bench-retrieve ───────────────────────────────────────────────────────

int cmd_bench_retrieve(const BenchArgs& args) {
    const Dataset data = load_dataset(args.dataset);
    if (data.requests.empty()) {
        throw UsageError("dataset has no retrieval requests");
    }
    const Deployment deployment = need_deployment(args.deployment);
    const KeyStrategy strategy = need_strategy(args.key_method);
    const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

    const IndexModel index = build_index(data, deployment, strategy, seed);

    std::vector<TraversalReport> reports;
    reports.reserve(data.requests.size());
    for (const ParamSet& request : data.requests) {
        reports.push_back(retrieve(index, request).report);
    }
    std::vector<std::uint64_t> times;
    for (std::uint32_t rep = 0; rep < args.reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        for (const ParamSet& request : data.requests) {
            retrieve(index, request);
        }
        times.push_back(nanoseconds_since(start));
    }

    OutputFile out(args.out);
    CsvWriter csv(out.stream());
    const std::uint64_t id = data.spec.seed;
    const std::string dep(to_string(deployment));
    const std::string method(to_string(strategy));
    std::vector<std::uint64_t> services, classes, comparisons, results;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const TraversalReport& r = reports[i];
        csv.row("bench_retrieve", id, dep, method, "traversed_services",
                std::to_string(r.traversed_services), i);
        csv.row("bench_retrieve", id, dep, method, "traversed_classes",
                std::to_string(r.traversed_classes), i);
        csv.row("bench_retrieve", id, dep, method, "parameter_comparisons",
                std::to_string(r.parameter_comparisons), i);
        csv.row("bench_retrieve", id, dep, method, "results",
                std::to_string(r.results), i);
        services.push_back(r.traversed_services);
        classes.push_back(r.traversed_classes);
        comparisons.push_back(r.parameter_comparisons);
        results.push_back(r.results);
    }
    csv.row("bench_retrieve", id, dep, method, "traversed_services_mean",
            format_double(mean_of(services)), 0);
    csv.row("bench_retrieve", id, dep, method, "traversed_classes_mean",
            format_double(mean_of(classes)), 0);
    csv.row("bench_retrieve", id, dep, method, "parameter_comparisons_mean",
            format_double(mean_of(comparisons)), 0);
    csv.row("bench_retrieve", id, dep, method, "results_mean",
            format_double(mean_of(results)), 0);
    for (std::size_t i = 0; i < times.size(); ++i) {
        csv.row("bench_retrieve", id, dep, method, "wall_time_ns",
                std::to_string(times[i]), i);
    }
    csv.row("bench_retrieve", id, dep, method, "wall_time_ns_median",
            std::to_string(median_of(times)), 0);
    return 0;
}

// ── stability ────────────────────────────────────────────────────────────

struct StabilityArgs {
    std::string dataset;
    std::string deployment;
    std::vector<std::string> key_methods;
    std::uint64_t requests = 0;  // 0: use the dataset's own requests
    std::string out;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int cmd_stability(const StabilityArgs& args) {
    const Dataset data = load_dataset(args.dataset);
    const Deployment deployment = need_deployment(args.deployment);
    const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

    // With --requests N the request list is generated here (seed + 1, so
    // it does not replay the key selector's stream); otherwise the
    // dataset's own requests are used.
    std::vector<ParamSet> requests;
    if (args.requests > 0) {
        requests = generate_requests(args.requests, data.spec.request_size,
                                     data.spec.parameter_count, seed + 1);
    } else {
        requests = data.requests;
    }
    if (requests.empty()) {
        throw UsageError(
            "dataset has no requests; pass --requests to generate some");
    }

    OutputFile out(args.out);
    CsvWriter csv(out.stream());
    const std::uint64_t id = data.spec.seed;
    const std::string dep(to_string(deployment));
    for (const std::string& name : args.key_methods) {
        const KeyStrategy strategy = need_strategy(name);
        const IndexModel index =
            build_index(data, deployment, strategy, seed);
        std::vector<std::uint64_t> traversed;
        traversed.reserve(requests.size());
        for (std::size_t i = 0; i < requests.size(); ++i) {
            const RetrievalResult got = retrieve(index, requests[i]);
            csv.row("stability", id, dep, name, "traversed_services",
                    std::to_string(got.report.traversed_services), i);
            traversed.push_back(got.report.traversed_services);
        }
        csv.row("stability", id, dep, name, "traversed_services_mean",
                format_double(mean_of(traversed)), 0);
        csv.row("stability", id, dep, name, "traversed_services_stddev",
                format_double(stddev_of(traversed)), 0);
    }
    return 0;
}

// ── expect ───────────────────────────────────────────────────────────────

struct ExpectArgs {
    bool retrieval = false;
    bool addition = false;
    std::string deployment;
    std::string method;
    std::string from_stats;
    double r = 0, n = 0, m = 0;
    std::uint64_t P = 0, S = 0, K = 0, R2 = 0, R1 = 0;
    bool has_r = false, has_n = false, has_m = false, has_P = false,
         has_S = false, has_K = false, has_R2 = false, has_R1 = false,
         has_method = false;
};

// Pulls symbol values out of a bench-add CSV (metric/value columns).
std::map<std::string, double> read_stats_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path + " for reading");
    std::map<std::string, double> values;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 7) continue;
        values[fields[4]] = std::strtod(fields[5].c_str(), nullptr);
    }
    return values;
}

int cmd_expect(ExpectArgs args) {
    if (args.retrieval == args.addition) {
        throw UsageError("pass exactly one of --retrieval / --addition");
    }
    const Deployment deployment = need_deployment(args.deployment);

    if (!args.from_stats.empty()) {
        const auto stats = read_stats_csv(args.from_stats);
        const auto fill = [&](const char* metric, auto& value, bool& has) {
            const auto it = stats.find(metric);
            if (!has && it != stats.end()) {
                value = static_cast<std::remove_reference_t<decltype(value)>>(
                    it->second);
                has = true;
            }
        };
        fill("stat_parameters", args.P, args.has_P);
        fill("stat_services", args.S, args.has_S);
        fill("stat_keys", args.K, args.has_K);
        fill("stat_input_similar_classes", args.R2, args.has_R2);
        fill("stat_similar_classes", args.R1, args.has_R1);
        fill("dataset_n", args.n, args.has_n);
        fill("dataset_m", args.m, args.has_m);
        fill("dataset_r", args.r, args.has_r);
    }

    const auto need = [](bool has, const char* symbol) {
        if (!has) {
            throw UsageError(std::string("missing required symbol --") +
                             symbol + " for this formula");
        }
    };

    ExpectationInputs in;
    in.request_size = args.r;
    in.inputs_per_service = args.n;
    in.outputs_per_service = args.m;
    in.parameter_count = args.P;
    in.service_count = args.S;
    in.key_count = args.K;
    in.input_similar_count = args.R2;
    in.similar_count = args.R1;

    double value = 0;
    if (args.retrieval) {
        need(args.has_r, "r");
        need(args.has_P, "P");
        if (deployment == Deployment::Primary) {
            need(args.has_S, "S");
        } else {
            need(args.has_R2, "R2");
        }
        value = expected_retrieval(deployment, in);
    } else {
        need(args.has_method, "method");
        AdditionMethod method;
        if (args.method == "random") {
            method = AdditionMethod::Random;
        } else if (args.method == "designated") {
            method = AdditionMethod::Designated;
        } else {
            throw UsageError("unknown addition method '" + args.method +
                             "' (random|designated)");
        }
        need(args.has_K, "K");
        if (deployment != Deployment::Primary) {
            need(args.has_P, "P");
            need(args.has_R2, "R2");
            need(args.has_n, "n");
        }
        if (deployment == Deployment::Full) {
            need(args.has_R1, "R1");
            need(args.has_m, "m");
        }
        value = expected_addition(deployment, method, in);
    }
    std::printf("%.10g\n", value);
    return 0;
}

// ── verify ───────────────────────────────────────────────────────────────

struct VerifyArgs {
    std::string dataset;
    std::string deployment;
    std::string key_method;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

std::string join_ids(const std::vector<std::uint64_t>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

int cmd_verify(const VerifyArgs& args) {
    const Dataset data = load_dataset(args.dataset);
    const std::uint64_t seed = resolve_seed(args.seed_given, args.seed);

    std::vector<Deployment> deployments;
    if (args.deployment == "all") {
        deployments = {Deployment::Primary, Deployment::Partial,
                       Deployment::Full};
    } else {
        deployments = {need_deployment(args.deployment)};
    }
    std::vector<KeyStrategy> strategies;
    if (args.key_method == "all") {
        strategies = {KeyStrategy::Original, KeyStrategy::Random,
                      KeyStrategy::Maximum, KeyStrategy::Minimum,
                      KeyStrategy::Designated};
    } else {
        strategies = {need_strategy(args.key_method)};
    }

    if (data.requests.empty()) {
        std::printf("warning: dataset has no requests; nothing to verify\n");
        return 0;
    }

    std::vector<std::vector<ServiceId>> expected;
    expected.reserve(data.requests.size());
    for (const ParamSet& request : data.requests) {
        expected.push_back(brute_force_retrieve(data.services, request));
    }

    for (const Deployment deployment : deployments) {
        for (const KeyStrategy strategy : strategies) {
            const IndexModel index =
                build_index(data, deployment, strategy, seed);
            for (std::size_t i = 0; i < data.requests.size(); ++i) {
                const RetrievalResult got = retrieve(index, data.requests[i]);
                if (got.services != expected[i]) {
                    std::printf(
                        "MISMATCH deployment=%s key-method=%s request #%zu "
                        "{%s}\n  expected: [%s]\n  returned: [%s]\n",
                        std::string(to_string(deployment)).c_str(),
                        std::string(to_string(strategy)).c_str(), i,
                        join_ids({data.requests[i].begin(),
                                  data.requests[i].end()})
                            .c_str(),
                        join_ids(expected[i]).c_str(),
                        join_ids(got.services).c_str());
                    return 1;
                }
            }
            std::printf("ok deployment=%s key-method=%s (%zu requests)\n",
                        std::string(to_string(deployment)).c_str(),
                        std::string(to_string(strategy)).c_str(),
                        data.requests.size());
        }
    }
    std::printf("verified %zu requests against the oracle\n",
                data.requests.size());
    return 0;
}

}  // namespace

// ── argument wiring ──────────────────────────────────────────────────────

int main(int argc, char** argv) {
    CLI::App app{"multilevel service index benchmark tool"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "write a synthetic dataset file");
    generate->add_option("--params", gen.params, "parameter universe size")
        ->required();
    generate->add_option("--services", gen.services, "number of services")
        ->required();
    generate->add_option("--n", gen.n, "inputs per service")->required();
    generate->add_option("--m", gen.m, "outputs per service")->required();
    generate->add_option("--requests", gen.requests, "number of requests");
    generate->add_option("--r", gen.r, "parameters per request")->required();
    CLI::Option* gen_seed = generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--out", gen.out, "output path ('-' for stdout)")
        ->required();

    const auto add_bench_options = [](CLI::App* cmd, BenchArgs& args) {
        cmd->add_option("--dataset", args.dataset,
                        "dataset path ('-' for stdin)")
            ->required();
        cmd->add_option("--deployment", args.deployment,
                        "primary|partial|full")
            ->required();
        cmd->add_option("--key-method", args.key_method,
                        "original|random|maximum|minimum|designated")
            ->required();
        cmd->add_option("--out", args.out, "CSV path ('-' for stdout)")
            ->required();
        cmd->add_option("--reps", args.reps, "timing repetitions")
            ->check(CLI::PositiveNumber);
        return cmd->add_option("--seed", args.seed, "RNG seed");
    };

    BenchArgs add_args;
    CLI::App* bench_add = app.add_subcommand(
        "bench-add", "time and count index construction");
    CLI::Option* add_seed = add_bench_options(bench_add, add_args);

    BenchArgs ret_args;
    CLI::App* bench_retrieve = app.add_subcommand(
        "bench-retrieve", "time and count retrieval over requests");
    CLI::Option* ret_seed = add_bench_options(bench_retrieve, ret_args);

    StabilityArgs stab;
    CLI::App* stability = app.add_subcommand(
        "stability", "per-request traversal spread per key method");
    stability->add_option("--dataset", stab.dataset, "dataset path")
        ->required();
    stability
        ->add_option("--deployment", stab.deployment, "primary|partial|full")
        ->required();
    stability
        ->add_option("--key-methods", stab.key_methods,
                     "comma-separated key methods")
        ->delimiter(',')
        ->default_val(std::vector<std::string>{"original", "random",
                                               "maximum", "minimum",
                                               "designated"});
    stability->add_option("--requests", stab.requests,
                          "generate this many requests (0: use dataset's)");
    stability->add_option("--out", stab.out, "CSV path ('-' for stdout)")
        ->required();
    CLI::Option* stab_seed =
        stability->add_option("--seed", stab.seed, "RNG seed");

    ExpectArgs exp;
    CLI::App* expect = app.add_subcommand(
        "expect", "closed-form traversal / addition cost estimates");
    expect->add_flag("--retrieval", exp.retrieval, "retrieval formula");
    expect->add_flag("--addition", exp.addition, "addition formula");
    expect->add_option("--deployment", exp.deployment, "primary|partial|full")
        ->required();
    CLI::Option* exp_method =
        expect->add_option("--method", exp.method, "random|designated");
    CLI::Option* exp_r = expect->add_option("--r", exp.r, "request size");
    CLI::Option* exp_n = expect->add_option("--n", exp.n, "inputs per service");
    CLI::Option* exp_m =
        expect->add_option("--m", exp.m, "outputs per service");
    CLI::Option* exp_P = expect->add_option("--P", exp.P, "parameter count");
    CLI::Option* exp_S = expect->add_option("--S", exp.S, "service count");
    CLI::Option* exp_K = expect->add_option("--K", exp.K, "key count");
    CLI::Option* exp_R2 =
        expect->add_option("--R2", exp.R2, "input-similar class count");
    CLI::Option* exp_R1 =
        expect->add_option("--R1", exp.R1, "similar class count");
    expect->add_option("--from-stats", exp.from_stats,
                       "bench-add CSV to pull symbols from");

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand(
        "verify", "check retrieval against the brute-force oracle");
    verify->add_option("--dataset", ver.dataset, "dataset path")->required();
    verify
        ->add_option("--deployment", ver.deployment,
                     "primary|partial|full|all")
        ->required();
    verify
        ->add_option("--key-method", ver.key_method,
                     "original|random|maximum|minimum|designated|all")
        ->required();
    CLI::Option* ver_seed = verify->add_option("--seed", ver.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, anything else 2
    }

    try {
        if (generate->parsed()) {
            gen.seed_given = gen_seed->count() > 0;
            return cmd_generate(gen);
        }
        if (bench_add->parsed()) {
            add_args.seed_given = add_seed->count() > 0;
            return cmd_bench_add(add_args);
        }
        if (bench_retrieve->parsed()) {
            ret_args.seed_given = ret_seed->count() > 0;
            return cmd_bench_retrieve(ret_args);
        }
        if (stability->parsed()) {
            stab.seed_given = stab_seed->count() > 0;
            return cmd_stability(stab);
        }
        if (expect->parsed()) {
            exp.has_method = exp_method->count() > 0;
            exp.has_r = exp_r->count() > 0;
            exp.has_n = exp_n->count() > 0;
            exp.has_m = exp_m->count() > 0;
            exp.has_P = exp_P->count() > 0;
            exp.has_S = exp_S->count() > 0;
            exp.has_K = exp_K->count() > 0;
            exp.has_R2 = exp_R2->count() > 0;
            exp.has_R1 = exp_R1->count() > 0;
            return cmd_expect(exp);
        }
        if (verify->parsed()) {
            ver.seed_given = ver_seed->count() > 0;
            return cmd_verify(ver);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
