#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "listsched/generators.hpp"
#include "listsched/model.hpp"
#include "listsched/online.hpp"
#include "listsched/oracle.hpp"

namespace listsched {

// alg / opt kept as the exact pair; rendered only at the edges.
struct Ratio {
    Time alg;
    Time opt;

    [[nodiscard]] Surd value() const { return alg.value() / opt.value(); }
    // "3/2" when both sides are rational, otherwise "(4+3r2)/(2+2r2)".
    [[nodiscard]] std::string exact() const;
    [[nodiscard]] std::string decimal(int places = 4) const { return to_decimal(value(), places); }
};

// 2 - 1/m
Surd graham_bound(std::size_t machines);

struct RatioReport {
    std::string label; // family tag, or instance digest for ad hoc instances
    std::string policy;
    std::size_t machines = 0;
    Time alg_makespan;
    OptResult opt;
    Ratio ratio;
    // Set when opt is only a lower bound: ratio then over-estimates.
    bool upper_estimate = false;
    // ratio <= 2 - 1/m; unset when upper_estimate.
    std::optional<bool> bound_satisfied;

    [[nodiscard]] std::string bound_decimal() const { return to_decimal(graham_bound(machines)); }
};

// "inst-" followed by the FNV-1a 64 hash of the instance file text.
std::string instance_digest(const Instance& instance);

// Runs the policy online and divides by the oracle optimum. When a
// structured class is given, its closed form backs up an inconclusive search
// and must agree with a conclusive one (std::logic_error otherwise).
RatioReport competitive_ratio(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy,
                              std::uint64_t node_budget = kDefaultNodeBudget,
                              std::optional<StructuredClass> structured = std::nullopt, std::string label = {});

// Family under its worst order, labelled by tag.
RatioReport competitive_ratio(const GeneratedFamily& family, const OnlinePolicy& policy,
                              std::uint64_t node_budget = kDefaultNodeBudget);

struct WorstOrderResult {
    ArrivalOrder best_order;
    Time worst_makespan;
    std::uint64_t orders_examined = 0;
    bool exhaustive = false;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Maximizes the policy's makespan over distinct arrival orders (orders that
// differ only by swapping equal-size jobs count once). Enumerates all of them
// when there are at most `enumeration_cap`; otherwise evaluates a uniform
// sample of `enumeration_cap` distinct ones. Ties go to the lexicographically
// smallest id sequence.
WorstOrderResult worst_order_search(const Instance& instance, const OnlinePolicy& policy,
                                    std::uint64_t enumeration_cap = kDefaultEnumerationCap, std::uint64_t seed = 0);

struct Table2Row {
    std::size_t machines = 0;
    RatioReport class1;
    RatioReport class2;
};

inline const std::vector<std::size_t> kTable2Machines{2, 3, 4, 5, 10, 50, 100};

// Class-1 and class-2 ratios of list scheduling under their worst orders.
std::vector<Table2Row> table2(std::span<const std::size_t> machine_counts);

struct VerifyOptions {
    std::uint64_t trials = 1000;
    std::size_t max_n = 12;
    std::size_t max_m = 4;
    std::int64_t min_size = 1;
    std::int64_t max_size = 9;
    std::uint64_t seed = 42;
    std::uint64_t node_budget = kDefaultNodeBudget;
};

struct VerifySummary {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    // Trials where the oracle ran out of budget (never expected within the limits).
    std::uint64_t inconclusive = 0;
    std::optional<RatioReport> worst;
    std::string worst_instance; // instance file text of the witness
    std::vector<JobId> worst_order;
};

class BoundViolation : public std::runtime_error {
public:
    BoundViolation(const std::string& message, std::string counterexample)
        : std::runtime_error(message), counterexample_(std::move(counterexample)) {}

    // Instance file text followed by an "order=..." line.
    [[nodiscard]] const std::string& counterexample() const { return counterexample_; }

private:
    std::string counterexample_;
};

// Random integer instances (n uniform in [1, max_n], m uniform in
// [2, max_m], sizes uniform in [min_size, max_size]) under random orders.
// Throws BoundViolation on the first ratio above 2 - 1/m, and
// std::invalid_argument when max_n > 12 or max_m > 4.
VerifySummary verify_bound(const VerifyOptions& options, const OnlinePolicy& policy);
VerifySummary verify_bound(const VerifyOptions& options);

} // namespace listsched
