#include <doctest.h>

#include <cmath>

#include "chainsched/synth.hpp"

using namespace chainsched;

TEST_SUITE("synth-gen") {

TEST_CASE("identical seeds give identical chains") {
    GenSpec spec;
    spec.n_tasks = 20;
    spec.stateless_ratio = 0.5;
    spec.seed = 7;
    TaskChain a = generate(spec);
    TaskChain b = generate(spec);
    REQUIRE(a.size() == b.size());
    for (int i = 1; i <= a.size(); ++i) {
        CHECK(a.task(i).weight_big == b.task(i).weight_big);
        CHECK(a.task(i).weight_little == b.task(i).weight_little);
        CHECK(a.task(i).replicable == b.task(i).replicable);
    }
    spec.seed = 8;
    TaskChain c = generate(spec);
    bool all_equal = true;
    for (int i = 1; i <= a.size(); ++i)
        if (!(a.task(i).weight_big == c.task(i).weight_big)) all_equal = false;
    CHECK_FALSE(all_equal);
}

TEST_CASE("replicable count is exactly round(n * SR)") {
    for (double sr : {0.2, 0.5, 0.8}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            GenSpec spec;
            spec.n_tasks = 20;
            spec.stateless_ratio = sr;
            spec.seed = seed;
            TaskChain chain = generate(spec);
            int reps = 0;
            for (const auto& t : chain.tasks()) reps += t.replicable ? 1 : 0;
            CHECK(reps == static_cast<int>(std::llround(20 * sr)));
        }
    }
    GenSpec odd;
    odd.n_tasks = 7;
    odd.stateless_ratio = 0.5;
    odd.seed = 1;
    int reps = 0;
    TaskChain odd_chain = generate(odd);
    for (const auto& t : odd_chain.tasks()) reps += t.replicable ? 1 : 0;
    CHECK(reps == 4); // round(3.5)
}

TEST_CASE("weight bounds follow the ranges") {
    GenSpec spec;
    spec.n_tasks = 200;
    spec.stateless_ratio = 0.5;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        spec.seed = seed + 100;
        TaskChain chain = generate(spec);
        for (const auto& t : chain.tasks()) {
            CHECK(t.weight_big >= Rational(1));
            CHECK(t.weight_big <= Rational(100));
            CHECK(t.weight_little >= t.weight_big);
            CHECK(t.weight_little <= Rational(5) * t.weight_big);
            CHECK(t.weight_little.den() == 1); // ceil keeps integers
        }
    }
}

TEST_CASE("mean big weight over 10000 tasks sits near 50.5") {
    GenSpec spec;
    spec.n_tasks = 100;
    spec.stateless_ratio = 0.5;
    long long sum = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        spec.seed = seed * 31 + 5;
        TaskChain chain = generate(spec);
        for (const auto& t : chain.tasks()) sum += t.weight_big.num();
    }
    double mean = static_cast<double>(sum) / 10000.0;
    CHECK(mean >= 48.0);
    CHECK(mean <= 53.0);
}

TEST_CASE("spec validation") {
    GenSpec bad;
    bad.n_tasks = 0;
    CHECK_THROWS_AS(generate(bad), InputError);
    bad = GenSpec{};
    bad.stateless_ratio = 1.5;
    CHECK_THROWS_AS(generate(bad), InputError);
    bad = GenSpec{};
    bad.weight_max = 0;
    CHECK_THROWS_AS(generate(bad), InputError);
    bad = GenSpec{};
    bad.slowdown_min = 0.5;
    CHECK_THROWS_AS(generate(bad), InputError);
}

} // TEST_SUITE
