#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listsched/model.hpp"

namespace listsched {

// An online placement rule. It sees only the current per-machine loads and
// the arriving job, never the rest of the sequence.
class OnlinePolicy {
public:
    virtual ~OnlinePolicy() = default;

    [[nodiscard]] virtual std::string_view name() const = 0;
    // Returns a machine index in [1, loads.size()].
    [[nodiscard]] virtual MachineIndex choose(std::span<const Time> loads, const Job& job) const = 0;
};

// Graham's list scheduling: put each job on a least loaded machine.
class ListScheduling final : public OnlinePolicy {
public:
    enum class TieBreak { lowest_index, highest_index };

    explicit ListScheduling(TieBreak tie_break = TieBreak::lowest_index) : tie_break_(tie_break) {}

    [[nodiscard]] std::string_view name() const override {
        return tie_break_ == TieBreak::lowest_index ? "lsa" : "lsa-high";
    }
    [[nodiscard]] MachineIndex choose(std::span<const Time> loads, const Job& job) const override;

private:
    TieBreak tie_break_;
};

// Index of a minimum-load machine, lowest index among ties.
MachineIndex lsa_step(std::span<const Time> loads, const Job& job);

struct TraceStep {
    JobId job = 0;
    MachineIndex machine = 0;
    std::vector<Time> loads_before;
    std::vector<Time> loads_after;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct OnlineRun {
    Schedule schedule;
    std::vector<TraceStep> trace;
};

// Feeds the jobs to the policy in arrival order and commits every decision.
// The order is checked against the instance before any step runs; a policy
// that returns an out-of-range machine raises std::logic_error.
OnlineRun run_online(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy);

// Same placement loop as run_online, keeping only the final makespan.
Time online_makespan(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy);

// One JSON object per line:
// {"job":3,"machine":1,"loads_before":["1","1"],"loads_after":["2","1"]}
// with times in instance-file syntax.
void write_trace_jsonl(std::ostream& out, const std::vector<TraceStep>& trace);

} // namespace listsched
