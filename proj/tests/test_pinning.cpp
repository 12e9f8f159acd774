#include <doctest.h>

#include <algorithm>
#include <set>

#include "chainsched/pinning.hpp"
#include "test_util.hpp"

using namespace chainsched;

namespace {

// Topology from the policy illustration: big clusters (1,2) and (5,6),
// little clusters (3,4) and (7,8).
Platform fig_topology() {
    return Platform(4, 4,
                    {Cluster{CoreType::Big, {1, 2}}, Cluster{CoreType::Little, {3, 4}},
                     Cluster{CoreType::Big, {5, 6}}, Cluster{CoreType::Little, {7, 8}}});
}

// Four single-core stages: t1 big, t2 little, t3 little, t4 big.
Solution four_threads() {
    TaskChain chain("threads",
                    {Task{1, Rational(9), Rational(9), false}, Task{2, Rational(1), Rational(1), false},
                     Task{3, Rational(1), Rational(1), false}, Task{4, Rational(9), Rational(9), false}});
    return make_solution(chain, {{1, 1, 1, CoreType::Big},
                                 {2, 2, 1, CoreType::Little},
                                 {3, 3, 1, CoreType::Little},
                                 {4, 4, 1, CoreType::Big}});
}

int cluster_of(const Platform& platform, int core) {
    for (std::size_t c = 0; c < platform.clusters.size(); ++c)
        for (int id : platform.clusters[c].cores)
            if (id == core) return static_cast<int>(c);
    return -1;
}

} // namespace

TEST_SUITE("runtime-plan") {

TEST_CASE("packed pins ascending within the type") {
    PinMap map = pin(four_threads(), fig_topology(), PinPolicy::Packed);
    REQUIRE(map.threads.size() == 4);
    CHECK((map.threads[0].cores == std::vector<int>{1})); // t1 big -> C1
    CHECK((map.threads[1].cores == std::vector<int>{3})); // t2 little -> C3
    CHECK((map.threads[2].cores == std::vector<int>{4})); // t3 little -> C4
    CHECK((map.threads[3].cores == std::vector<int>{2})); // t4 big -> C2
}

TEST_CASE("distant round-robins the clusters of each type") {
    PinMap map = pin(four_threads(), fig_topology(), PinPolicy::Distant);
    CHECK((map.threads[0].cores == std::vector<int>{1})); // t1 -> first core of big cluster 1
    CHECK((map.threads[3].cores == std::vector<int>{5})); // t4 -> first core of big cluster 2
    CHECK((map.threads[1].cores == std::vector<int>{3})); // t2 -> little cluster 1
    CHECK((map.threads[2].cores == std::vector<int>{7})); // t3 -> little cluster 2
}

TEST_CASE("loose and guided") {
    Solution sol = four_threads();
    PinMap loose = pin(sol, fig_topology(), PinPolicy::Loose);
    for (const auto& t : loose.threads) CHECK(t.kind == ThreadPin::Kind::AnyCore);

    PinMap guided = pin(sol, fig_topology(), PinPolicy::Guided);
    CHECK((guided.threads[0].cores == std::vector<int>{1, 2, 5, 6}));
    CHECK((guided.threads[1].cores == std::vector<int>{3, 4, 7, 8}));
    for (const auto& t : guided.threads) CHECK(t.kind == ThreadPin::Kind::CoreSet);
}

TEST_CASE("one-to-one maps are injective and deterministic") {
    TaskChain chain("rep", {Task{1, Rational(8), Rational(8), true},
                            Task{2, Rational(8), Rational(8), true}});
    Solution sol = make_solution(chain, {{1, 1, 3, CoreType::Big}, {2, 2, 4, CoreType::Little}});
    Platform topo = fig_topology();
    for (PinPolicy policy : {PinPolicy::Packed, PinPolicy::Distant}) {
        PinMap a = pin(sol, topo, policy);
        PinMap b = pin(sol, topo, policy);
        std::set<int> used;
        for (const auto& t : a.threads) {
            REQUIRE(t.kind == ThreadPin::Kind::SingleCore);
            CHECK(used.insert(t.cores[0]).second);
        }
        REQUIRE(a.threads.size() == b.threads.size());
        for (std::size_t i = 0; i < a.threads.size(); ++i) CHECK(a.threads[i].cores == b.threads[i].cores);
    }
}

TEST_CASE("packed minimizes and distant maximizes clusters used per type") {
    Platform topo = fig_topology();
    // two big threads: enumerate every injective placement onto big cores
    TaskChain chain("bb", {Task{1, Rational(1), Rational(1), true}});
    Solution sol = make_solution(chain, {{1, 1, 2, CoreType::Big}});
    auto clusters_used = [&](const PinMap& map) {
        std::set<int> c;
        for (const auto& t : map.threads) c.insert(cluster_of(topo, t.cores[0]));
        return c.size();
    };
    std::size_t min_possible = 99;
    std::size_t max_possible = 0;
    const std::vector<int> big_cores{1, 2, 5, 6};
    for (int a : big_cores)
        for (int b : big_cores) {
            if (a == b) continue;
            std::set<int> c{cluster_of(topo, a), cluster_of(topo, b)};
            min_possible = std::min(min_possible, c.size());
            max_possible = std::max(max_possible, c.size());
        }
    CHECK(clusters_used(pin(sol, topo, PinPolicy::Packed)) == min_possible);
    CHECK(clusters_used(pin(sol, topo, PinPolicy::Distant)) == max_possible);
}

TEST_CASE("capacity and topology errors") {
    TaskChain chain("wide", {Task{1, Rational(1), Rational(1), true}});
    Solution sol = make_solution(chain, {{1, 1, 5, CoreType::Big}});
    CHECK_THROWS_AS(pin(sol, fig_topology(), PinPolicy::Packed), CapacityError);
    Solution small = make_solution(chain, {{1, 1, 1, CoreType::Big}});
    CHECK_THROWS_AS(pin(small, Platform(4, 4), PinPolicy::Packed), InputError);
    // loose works without any topology
    CHECK(pin(small, Platform(4, 4), PinPolicy::Loose).threads.size() == 1);
}

TEST_CASE("policy names round-trip") {
    for (PinPolicy p : {PinPolicy::Loose, PinPolicy::Guided, PinPolicy::Packed, PinPolicy::Distant})
        CHECK(pin_policy_from_name(pin_policy_name(p)) == p);
    CHECK_THROWS_AS(pin_policy_from_name("tight"), InputError);
}

} // TEST_SUITE
