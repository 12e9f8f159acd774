#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainsched/errors.hpp"
#include "chainsched/rational.hpp"

namespace chainsched {

enum class CoreType : std::uint8_t { Big, Little };

inline char core_type_code(CoreType v) { return v == CoreType::Big ? 'B' : 'L'; }

inline CoreType core_type_from_code(char c) {
    if (c == 'B' || c == 'b') return CoreType::Big;
    if (c == 'L' || c == 'l') return CoreType::Little;
    throw InputError(std::string("unknown core type code: ") + c);
}

/// One task of a chain: per-core-type latency plus whether it may be replicated.
struct Task {
    int id = 0; // 1-based position in the chain
    Rational weight_big;
    Rational weight_little;
    bool replicable = false;

    const Rational& weight(CoreType v) const { return v == CoreType::Big ? weight_big : weight_little; }
};

/// An ordered task chain with prefix sums and a next-sequential-task index so
/// interval weight and replicability queries are O(1).
class TaskChain {
public:
    TaskChain(std::string name, std::vector<Task> tasks);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(tasks_.size()); }
    const Task& task(int i) const { return tasks_[static_cast<std::size_t>(i - 1)]; } // 1-based
    const std::vector<Task>& tasks() const { return tasks_; }

    /// Sum of weights over [first,last] on one core of the given type.
    Rational interval_weight(int first, int last, CoreType v) const {
        check_interval(first, last);
        const auto& pre = v == CoreType::Big ? prefix_big_ : prefix_little_;
        return pre[static_cast<std::size_t>(last)] - pre[static_cast<std::size_t>(first - 1)];
    }

    bool all_replicable(int first, int last) const {
        check_interval(first, last);
        return next_seq_[static_cast<std::size_t>(first)] > last;
    }

    /// Smallest sequential task index >= i, or n+1 when none remains.
    int next_sequential_at_or_after(int i) const { return next_seq_[static_cast<std::size_t>(i)]; }

    /// Largest e with [start,e] fully replicable; start-1 when task `start` is sequential.
    int replicable_reach(int start) const { return next_seq_[static_cast<std::size_t>(start)] - 1; }

    bool has_sequential() const { return next_seq_[1] <= size(); }

    Rational total_weight(CoreType v) const { return interval_weight(1, size(), v); }
    Rational max_task_weight(CoreType v) const;
    /// Largest weight among sequential tasks; zero when every task is replicable.
    Rational max_sequential_weight(CoreType v) const;

    void check_interval(int first, int last) const {
        if (first < 1 || last > size() || first > last)
            throw InputError("task interval [" + std::to_string(first) + "," + std::to_string(last) +
                             "] out of range for chain of " + std::to_string(size()) + " tasks");
    }

private:
    std::string name_;
    std::vector<Task> tasks_;
    std::vector<Rational> prefix_big_;    // prefix_[i] = sum of weights of tasks 1..i
    std::vector<Rational> prefix_little_;
    std::vector<int> next_seq_;           // indexed 1..n+1
};

struct Cluster {
    CoreType type = CoreType::Big;
    std::vector<int> cores;
};

/// Core counts of a two-type platform, with an optional cluster topology used
/// by the pinning policies.
struct Platform {
    Platform(long long big_cores, long long little_cores, std::vector<Cluster> topology = {});

    long long big = 0;
    long long little = 0;
    std::vector<Cluster> clusters;

    bool has_topology() const { return !clusters.empty(); }
    long long count(CoreType v) const { return v == CoreType::Big ? big : little; }
    long long total() const { return big + little; }
};

/// A contiguous task interval mapped onto `cores` cores of one type.
struct Stage {
    int first = 0;
    int last = 0;
    long long cores = 0;
    CoreType type = CoreType::Big;
};

struct CoreUsage {
    long long big = 0;
    long long little = 0;

    long long total() const { return big + little; }
    bool fits(long long b, long long l) const { return big <= b && little <= l; }
    friend bool operator==(const CoreUsage&, const CoreUsage&) = default;
};

/// An ordered stage decomposition with its cached period.
struct Solution {
    std::vector<Stage> stages;
    Rational period;

    CoreUsage usage() const {
        CoreUsage u;
        for (const auto& s : stages) {
            if (s.type == CoreType::Big)
                u.big += s.cores;
            else
                u.little += s.cores;
        }
        return u;
    }
    std::size_t stage_count() const { return stages.size(); }
};

} // namespace chainsched
