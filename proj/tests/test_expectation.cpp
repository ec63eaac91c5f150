#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mlix/expectation.hpp"

using namespace mlix;
using doctest::Approx;

namespace {

// The reference shape used throughout: a 1,000-parameter universe with
// 1,000 keys, 2,000 input-similar classes, 4,000 similar classes, and
// ten-input/ten-output services.
ExpectationInputs reference_inputs() {
    ExpectationInputs in;
    in.request_size = 32;
    in.inputs_per_service = 10;
    in.outputs_per_service = 10;
    in.parameter_count = 1000;
    in.service_count = 20000;
    in.key_count = 1000;
    in.input_similar_count = 2000;
    in.similar_count = 4000;
    return in;
}

ExpectationInputs random_inputs(std::mt19937_64& rng) {
    ExpectationInputs in;
    in.request_size = 1 + static_cast<double>(rng() % 64);
    in.inputs_per_service = 1 + static_cast<double>(rng() % 24);
    in.outputs_per_service = 1 + static_cast<double>(rng() % 24);
    in.parameter_count = 1 + rng() % 5000;
    in.service_count = 1 + rng() % 100000;
    in.key_count = 1 + rng() % 2000;
    in.input_similar_count = 1 + rng() % 50000;
    in.similar_count = in.input_similar_count + rng() % 50000;
    return in;
}

}  // namespace

TEST_CASE("expected retrieval: frozen examples") {
    ExpectationInputs in = reference_inputs();
    CHECK(expected_retrieval(Deployment::Primary, in) == Approx(640.0));
    CHECK(expected_retrieval(Deployment::Partial, in) == Approx(64.0));
    CHECK(expected_retrieval(Deployment::Full, in) == Approx(64.0));

    in.request_size = 0;
    CHECK(expected_retrieval(Deployment::Primary, in) == Approx(0.0));
    CHECK(expected_retrieval(Deployment::Partial, in) == Approx(0.0));
}

TEST_CASE("expected retrieval: linear in the request size, blind to keys") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        ExpectationInputs in = random_inputs(rng);
        for (Deployment d :
             {Deployment::Primary, Deployment::Partial, Deployment::Full}) {
            const double base = expected_retrieval(d, in);
            ExpectationInputs tripled = in;
            tripled.request_size *= 3;
            CHECK(expected_retrieval(d, tripled) ==
                  Approx(3 * base).epsilon(1e-12));
            ExpectationInputs rekeyed = in;
            rekeyed.key_count = 1 + rng() % 2000;
            CHECK(expected_retrieval(d, rekeyed) == Approx(base));
        }
        CHECK(expected_retrieval(Deployment::Partial, in) ==
              Approx(expected_retrieval(Deployment::Full, in)));
    }
}

TEST_CASE("expected addition: frozen examples") {
    ExpectationInputs in = reference_inputs();

    SUBCASE("primary cost is the directory descent, whatever the method") {
        in.key_count = 1024;
        CHECK(expected_addition(Deployment::Primary, AdditionMethod::Random,
                                in) == Approx(10.0));
        CHECK(expected_addition(Deployment::Primary,
                                AdditionMethod::Designated, in) ==
              Approx(10.0));
    }
    SUBCASE("partial costs") {
        CHECK(expected_addition(Deployment::Partial, AdditionMethod::Random,
                                in) ==
              Approx(299.6578428466209).epsilon(1e-12));
        CHECK(expected_addition(Deployment::Partial,
                                AdditionMethod::Designated, in) ==
              Approx(29.96578428466209).epsilon(1e-12));
    }
    SUBCASE("full costs sit one output-matching term above partial") {
        CHECK(expected_addition(Deployment::Full, AdditionMethod::Random,
                                in) ==
              Approx(319.6578428466209).epsilon(1e-12));
        CHECK(expected_addition(Deployment::Full, AdditionMethod::Designated,
                                in) ==
              Approx(49.96578428466209).epsilon(1e-12));
    }
}

TEST_CASE("expected addition: domain errors on degenerate structures") {
    ExpectationInputs in = reference_inputs();
    in.key_count = 0;
    CHECK_THROWS_AS((void)expected_addition(Deployment::Partial,
                                            AdditionMethod::Random, in),
                    std::domain_error);
    in = reference_inputs();
    in.parameter_count = 0;
    CHECK_THROWS_AS((void)expected_addition(Deployment::Partial,
                                            AdditionMethod::Designated, in),
                    std::domain_error);
    CHECK_THROWS_AS((void)expected_retrieval(Deployment::Primary, in),
                    std::domain_error);
    in = reference_inputs();
    in.input_similar_count = 0;
    CHECK_THROWS_AS((void)expected_addition(Deployment::Full,
                                            AdditionMethod::Random, in),
                    std::domain_error);
}

TEST_CASE("expected addition: designated is exactly 1/n of random on a "
          "partial index") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 1000; ++round) {
        const ExpectationInputs in = random_inputs(rng);
        const double random_cost =
            expected_addition(Deployment::Partial, AdditionMethod::Random, in);
        const double designated_cost = expected_addition(
            Deployment::Partial, AdditionMethod::Designated, in);
        CHECK(designated_cost ==
              Approx(random_cost / in.inputs_per_service).epsilon(1e-9));
    }
}

TEST_CASE("expected addition: the full index adds exactly the output term") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 1000; ++round) {
        const ExpectationInputs in = random_inputs(rng);
        const double gap = static_cast<double>(in.similar_count) /
                           static_cast<double>(in.input_similar_count) *
                           in.outputs_per_service;
        for (AdditionMethod method :
             {AdditionMethod::Random, AdditionMethod::Designated}) {
            const double partial =
                expected_addition(Deployment::Partial, method, in);
            const double full = expected_addition(Deployment::Full, method, in);
            CHECK(full - partial == Approx(gap).epsilon(1e-9));
            CHECK(full > partial);
        }
    }
}
