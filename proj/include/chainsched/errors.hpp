#pragma once

#include <stdexcept>
#include <string>

namespace chainsched {

/// Malformed user-facing input: bad files, out-of-range arguments.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structurally broken object, e.g. a solution whose stages do not tile the chain.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a deliberate size guard (exhaustive search only works at desk scale).
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A strategy ran out of its expansion budget before finishing.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Not enough physical cores of some type to realize a pin policy.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The pipeline simulation cannot make progress on some link.
struct DeadlockError : std::runtime_error {
    explicit DeadlockError(int link_index, const std::string& what)
        : std::runtime_error(what), link(link_index) {}
    int link;
};

} // namespace chainsched
