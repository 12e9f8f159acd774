#include <doctest.h>

#include "chainsched/oracle.hpp"
#include "chainsched/synth.hpp"
#include "test_util.hpp"

using namespace chainsched;
using testutil::make_c1;

TEST_SUITE("oracle") {

TEST_CASE("c1 on (1,2), confirmed by both traversal orders") {
    TaskChain c1 = make_c1();
    OracleResult forward = brute_force(c1, Platform(1, 2));
    CHECK(forward.min_period == Rational(8));
    OracleOptions rev;
    rev.reverse = true;
    OracleResult backward = brute_force(c1, Platform(1, 2), rev);
    CHECK(backward.min_period == forward.min_period);
    CHECK(backward.witness_count == forward.witness_count);
    CHECK(backward.min_big_used == forward.min_big_used);
    CHECK(backward.min_total_used == forward.min_total_used);
    for (const auto& w : forward.witnesses) {
        CHECK(w.period == forward.min_period);
        CHECK(is_resource_valid(w, Platform(1, 2)));
        CHECK(period(c1, w) == w.period);
    }
}

TEST_CASE("single sequential task picks the faster core type") {
    TaskChain one("one", {Task{1, Rational(5), Rational(9), false}});
    OracleResult r = brute_force(one, Platform(1, 1));
    CHECK(r.min_period == Rational(5));
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().stages.front().type == CoreType::Big);
}

TEST_CASE("all-replicable 2-task chain on (0,2): exhaustive 3-option check") {
    TaskChain two("two", {Task{1, Rational(3), Rational(7), true},
                          Task{2, Rational(4), Rational(5), true}});
    // options: two 1-core stages (max 7,5), or one stage on 1 or 2 little cores
    Rational split = rational_max(Rational(7), Rational(5));
    Rational merged1 = Rational(12);
    Rational merged2 = Rational(12, 2);
    Rational expected = rational_min(split, rational_min(merged1, merged2));
    OracleResult r = brute_force(two, Platform(0, 2));
    CHECK(r.min_period == expected);
    CHECK(r.min_period == Rational(6));
}

TEST_CASE("size guards") {
    GenSpec spec;
    spec.n_tasks = 13;
    spec.seed = 3;
    TaskChain big_chain = generate(spec);
    CHECK_THROWS_AS(brute_force(big_chain, Platform(1, 1)), SizeGuardError);
    TaskChain c1 = make_c1();
    CHECK_THROWS_AS(brute_force(c1, Platform(4, 4)), SizeGuardError);
    OracleOptions loose;
    loose.max_cores = 8;
    // derived by exhaustive search; (1) on 3L, (2) on 1B, (3,4) on 3B all hit 8/3
    CHECK(brute_force(c1, Platform(4, 4), loose).min_period == Rational(8, 3));
}

TEST_CASE("parallel kernel matches the serial reference") {
    GenSpec spec;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        spec.seed = seed + 50;
        spec.n_tasks = 5 + static_cast<int>(seed % 4);
        spec.stateless_ratio = 0.5;
        TaskChain chain = generate(spec);
        Platform platform(2, 2);
        OracleResult serial = brute_force(chain, platform);
        OracleOptions par;
        par.threads = 0; // all available
        OracleResult parallel = brute_force(chain, platform, par);
        CHECK(serial.min_period == parallel.min_period);
        CHECK(serial.witness_count == parallel.witness_count);
        CHECK(serial.min_big_used == parallel.min_big_used);
        CHECK(serial.min_total_used == parallel.min_total_used);
        REQUIRE(serial.witnesses.size() == parallel.witnesses.size());
        for (std::size_t i = 0; i < serial.witnesses.size(); ++i)
            CHECK(serial.witnesses[i].period == parallel.witnesses[i].period);
    }
}

TEST_CASE("order independence on a random corpus") {
    GenSpec spec;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        spec.seed = seed + 4000;
        spec.n_tasks = 4 + static_cast<int>(seed % 5);
        spec.stateless_ratio = 0.25 * (seed % 4);
        TaskChain chain = generate(spec);
        Platform platform(1 + seed % 3, 1 + (seed + 1) % 3);
        OracleOptions rev;
        rev.reverse = true;
        CHECK(brute_force(chain, platform).min_period ==
              brute_force(chain, platform, rev).min_period);
    }
}

} // TEST_SUITE
