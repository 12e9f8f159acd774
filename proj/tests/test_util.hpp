#pragma once

#include <string>

#include "chainsched/chain.hpp"
#include "chainsched/json_io.hpp"

namespace chainsched::testutil {

// Small hand-checkable chain used throughout: weights big [4,2,6,2],
// little [8,4,12,4], only task 2 sequential.
inline TaskChain make_c1() {
    std::vector<Task> tasks{
        Task{1, Rational(4), Rational(8), true},
        Task{2, Rational(2), Rational(4), false},
        Task{3, Rational(6), Rational(12), true},
        Task{4, Rational(2), Rational(4), true},
    };
    return TaskChain("c1", std::move(tasks));
}

inline std::string fixture_path(const std::string& rel) {
    return std::string(CHAINSCHED_FIXTURE_DIR) + "/" + rel;
}

inline TaskChain load_fixture_chain(const std::string& name) {
    return load_chain_file(fixture_path("chains/" + name));
}

} // namespace chainsched::testutil
