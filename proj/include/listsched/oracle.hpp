#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "listsched/model.hpp"

namespace listsched {

enum class OptKind {
    exact,              // branch and bound finished
    certified_by_bound, // a schedule met the lower bound
    analytic_class,     // closed form for a structured family
    lower_bound_only,   // search budget ran out; value is only a lower bound
};

std::string_view to_string(OptKind kind);

struct OptResult {
    Time value;
    OptKind kind = OptKind::exact;
    std::uint64_t nodes_explored = 0;
    // Witness schedule with makespan == value; present for exact and
    // certified_by_bound results.
    std::optional<Schedule> schedule;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    // Only open the first unused machine, and skip machines whose load equals
    // one already tried at the same node.
    bool symmetry_pruning = true;
    // Stop as soon as the incumbent meets lower_bound().
    bool certify_early = true;
};

// max(total_load / m, largest job).
Time lower_bound(const Instance& instance);

struct LptResult {
    Time makespan;
    Schedule schedule;
};

// Longest processing time first: jobs by non-increasing size (ties by
// ascending id), each placed on a least loaded machine.
LptResult lpt_makespan(const Instance& instance);

// Optimal makespan by depth-first branch and bound, seeded with the LPT
// schedule. Never reports `exact` unless the search completed.
OptResult opt_exact(const Instance& instance, std::uint64_t node_budget = kDefaultNodeBudget);
OptResult opt_exact(const Instance& instance, const SearchOptions& options);

enum class StructuredClass { class1, class2 };

// Optimal makespan of the structured families: m for class 1 ((m-1)^2 unit
// jobs and one job of size m), m^2 for class 2 (m(m-1) unit jobs and one job
// of size m^2). Throws std::invalid_argument for m < 2.
Time opt_structured(StructuredClass cls, std::size_t machines);

} // namespace listsched
