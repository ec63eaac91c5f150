#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mlix/index_model.hpp"
#include "mlix/index_ops.hpp"
#include "mlix/key_selection.hpp"
#include "mlix/parameter_table.hpp"
#include "mlix/service.hpp"
#include "test_support.hpp"

using namespace mlix;

TEST_CASE("parameter table interns names once and looks them up") {
    ParameterTable table;
    CHECK(table.intern("latitude") == 0);
    CHECK(table.intern("longitude") == 1);
    CHECK(table.intern("latitude") == 0);
    CHECK(table.size() == 2);
    CHECK(table.lookup("longitude").value() == 1);
    CHECK_FALSE(table.lookup("altitude").has_value());
    CHECK(table.name_of(0) == "latitude");
    CHECK_THROWS_AS((void)table.name_of(5), std::out_of_range);
}

TEST_CASE("make_service canonicalizes parameter sets") {
    const Service s = make_service(9, {12, 3, 7, 3}, {5, 5, 1});
    CHECK(s.id == 9);
    CHECK(s.inputs == ParamSet{3, 7, 12});
    CHECK(s.outputs == ParamSet{1, 5});
    CHECK(s.attributes.empty());

    const Service with_attrs =
        make_service(1, {2}, {}, {{"name", "geocode"}});
    CHECK(with_attrs.outputs.empty());
    CHECK(with_attrs.attributes.at("name") == "geocode");

    CHECK_THROWS_AS((void)make_service(2, {}, {1}), std::invalid_argument);
}

TEST_CASE("set helpers count comparisons the way the index charges them") {
    std::uint64_t comps = 0;

    SUBCASE("equality short-circuits on size") {
        CHECK_FALSE(set_equal_counted({1, 2}, {1, 2, 3}, comps));
        CHECK(comps == 1);
    }
    SUBCASE("equality walks until the first difference") {
        CHECK_FALSE(set_equal_counted({1, 2, 9}, {1, 2, 8}, comps));
        CHECK(comps == 3);
        comps = 0;
        CHECK(set_equal_counted({1, 2, 9}, {1, 2, 9}, comps));
        CHECK(comps == 3);
    }
    SUBCASE("subset walks a merge and stops at a miss") {
        CHECK(subset_of_counted({2, 5}, {1, 2, 3, 5}, comps));
        CHECK(comps == 4);
        comps = 0;
        CHECK_FALSE(subset_of_counted({0, 9}, {1, 2, 3}, comps));
        CHECK(comps == 1);
        comps = 0;
        CHECK(subset_of_counted({}, {1, 2}, comps));
        CHECK(comps == 0);
    }
    SUBCASE("uncounted subset matches the counted one") {
        std::mt19937_64 rng(3);
        for (int round = 0; round < 200; ++round) {
            std::vector<ParameterId> a;
            std::vector<ParameterId> b;
            for (int i = 0; i < 6; ++i) {
                if (rng() % 2) a.push_back(static_cast<ParameterId>(rng() % 12));
                if (rng() % 2) b.push_back(static_cast<ParameterId>(rng() % 12));
            }
            const ParamSet x = make_param_set(std::move(a));
            const ParamSet y = make_param_set(std::move(b));
            std::uint64_t scratch = 0;
            CHECK(subset_of(x, y) == subset_of_counted(x, y, scratch));
        }
    }
}

TEST_CASE("a fresh index reports empty stats and its universe size") {
    for (Deployment d : test::all_deployments()) {
        const IndexModel index(d, 1000);
        CHECK(index.deployment() == d);
        const IndexStats stats = index.stats();
        CHECK(stats.service_count == 0);
        CHECK(stats.input_similar_count == 0);
        CHECK(stats.similar_count == 0);
        CHECK(stats.key_count == 0);
        CHECK(stats.parameter_count == 1000);
        CHECK(index.directory().empty());
    }
    ParameterTable table;
    table.intern("a");
    table.intern("b");
    const IndexModel from_table(Deployment::Full, table);
    CHECK(from_table.stats().parameter_count == 2);
}

TEST_CASE("stats track the class structure as services arrive") {
    IndexModel index(Deployment::Full, 100);
    KeySelector selector(KeyStrategy::Designated);
    AdditionReport r1 =
        add_service(index, make_service(0, {3, 7}, {20}), selector);
    IndexStats s = index.stats();
    CHECK(s.service_count == 1);
    CHECK(s.input_similar_count == 1);
    CHECK(s.similar_count == 1);
    CHECK(s.key_count == 1);
    CHECK(r1.created_key_class);
    CHECK(r1.created_input_similar_class);
    CHECK(r1.created_similar_class);

    // Same inputs and outputs: joins the existing similar class.
    AdditionReport r2 =
        add_service(index, make_service(1, {3, 7}, {20}), selector);
    s = index.stats();
    CHECK(s.service_count == 2);
    CHECK(s.input_similar_count == 1);
    CHECK(s.similar_count == 1);
    CHECK_FALSE(r2.created_similar_class);

    // Same inputs, different outputs: new similar class only.
    AdditionReport r3 =
        add_service(index, make_service(2, {3, 7}, {21}), selector);
    s = index.stats();
    CHECK(s.service_count == 3);
    CHECK(s.input_similar_count == 1);
    CHECK(s.similar_count == 2);
    CHECK(r3.created_similar_class);
    CHECK_FALSE(r3.created_input_similar_class);

    // Different inputs: everything beneath the (possibly shared) key is new.
    AdditionReport r4 =
        add_service(index, make_service(3, {3, 9}, {21}), selector);
    s = index.stats();
    CHECK(s.service_count == 4);
    CHECK(s.input_similar_count == 2);
    CHECK(s.similar_count == 3);
    CHECK(r4.created_input_similar_class);

    CHECK(index.contains_service(2));
    CHECK_FALSE(index.contains_service(17));
    CHECK(test::check_structure(index).empty());
}

TEST_CASE("directory lookups stay within the binary-search budget") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        KeyDirectory directory;
        const std::size_t target = 1 + rng() % 200;
        std::uint64_t scratch = 0;
        while (directory.size() < target) {
            bool created = false;
            directory.find_or_create(static_cast<ParameterId>(rng() % 4096),
                                     scratch, created);
        }
        const auto budget = static_cast<std::uint64_t>(
            std::floor(std::log2(static_cast<double>(directory.size()))) + 1);
        ParameterId previous = 0;
        bool first = true;
        for (const KeyClass& kc : directory.classes()) {
            if (!first) CHECK(previous < kc.key);
            previous = kc.key;
            first = false;
            std::uint64_t cost = 0;
            CHECK(directory.find(kc.key, cost) != nullptr);
            CHECK(cost >= 1);
            CHECK(cost <= budget);
        }
        for (int probe = 0; probe < 50; ++probe) {
            const auto key = static_cast<ParameterId>(rng() % 8192);
            std::uint64_t cost = 0;
            const KeyClass* hit = directory.find(key, cost);
            CHECK(cost <= budget);
            CHECK((hit == nullptr || hit->key == key));
        }
    }
}

TEST_CASE("find_or_create reports creation exactly once per key") {
    KeyDirectory directory;
    std::uint64_t scratch = 0;
    bool created = false;
    KeyClass& a = directory.find_or_create(7, scratch, created);
    CHECK(created);
    CHECK(a.key == 7);
    created = false;
    KeyClass& b = directory.find_or_create(7, scratch, created);
    CHECK_FALSE(created);
    CHECK(&a == &b);
    directory.find_or_create(3, scratch, created);
    CHECK(created);
    CHECK(directory.size() == 2);
    CHECK(directory.classes().front().key == 3);
}

TEST_CASE("random builds keep the structure partitioned and consistent") {
    std::uint64_t walk = 0;
    for (Deployment d : test::all_deployments()) {
        for (KeyStrategy strategy : test::all_strategies()) {
            ++walk;
            test::ServiceFactory factory(walk * 131, 30, 4, 3);
            IndexModel index(d, 30);
            KeySelector selector(strategy, walk);
            IndexStats before = index.stats();
            for (int i = 0; i < 250; ++i) {
                const Service s = factory.next();
                const AdditionReport report = add_service(index, s, selector);
                const IndexStats after = index.stats();

                // Every addition grows the service count by exactly one and
                // the class counts by exactly the creations it reported.
                CHECK(after.service_count == before.service_count + 1);
                CHECK(after.key_count ==
                      before.key_count + (report.created_key_class ? 1 : 0));
                CHECK(after.input_similar_count ==
                      before.input_similar_count +
                          (report.created_input_similar_class ? 1 : 0));
                CHECK(after.similar_count ==
                      before.similar_count +
                          (report.created_similar_class ? 1 : 0));
                CHECK(report.key_directory_comparisons <=
                      report.parameter_comparisons);
                before = after;
            }

            const std::string problem = test::check_structure(index);
            INFO("deployment ", to_string(d), " strategy ",
                 to_string(strategy), ": ", problem);
            CHECK(problem.empty());

            const IndexStats stats = index.stats();
            const IndexStats recount = test::recount_stats(index);
            CHECK(stats == recount);
            for (const auto& [id, count] : test::service_occurrences(index)) {
                INFO("service ", id, " appears ", count, " times");
                CHECK(count == 1);
            }

            CHECK(stats.key_count <= stats.parameter_count);
            if (d == Deployment::Primary) {
                CHECK(stats.input_similar_count == 0);
                CHECK(stats.similar_count == 0);
            } else {
                CHECK(stats.key_count <= stats.input_similar_count);
                CHECK(stats.input_similar_count <= stats.service_count);
                if (d == Deployment::Partial) {
                    CHECK(stats.similar_count == 0);
                } else {
                    CHECK(stats.input_similar_count <= stats.similar_count);
                    CHECK(stats.similar_count <= stats.service_count);
                }
            }
        }
    }
}
