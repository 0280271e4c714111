#include "listsched/online.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace listsched {

namespace {

template <class OnStep>
std::vector<Time> place_all(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy,
                            OnStep&& on_step) {
    std::vector<Time> loads(instance.machines());
    for (JobId id : order.ids()) {
        const Job& job = instance.job(id);
        MachineIndex machine = policy.choose(loads, job);
        if (machine < 1 || machine > loads.size())
            throw std::logic_error("policy " + std::string(policy.name()) + " chose machine " + std::to_string(machine) +
                                   " of " + std::to_string(loads.size()));
        on_step(job, machine, loads);
        loads[machine - 1] += job.size;
    }
    return loads;
}

} // namespace

MachineIndex lsa_step(std::span<const Time> loads, const Job& job) {
    return ListScheduling(ListScheduling::TieBreak::lowest_index).choose(loads, job);
}

MachineIndex ListScheduling::choose(std::span<const Time> loads, const Job& /*job*/) const {
    if (loads.empty()) throw std::invalid_argument("no machines");
    std::size_t best = 0;
    for (std::size_t j = 1; j < loads.size(); ++j) {
        if (loads[j] < loads[best] || (tie_break_ == TieBreak::highest_index && loads[j] == loads[best])) best = j;
    }
    return static_cast<MachineIndex>(best + 1);
}

OnlineRun run_online(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy) {
    ArrivalOrder checked(instance, order.ids()); // throws on a mismatched order

    OnlineRun run;
    run.trace.reserve(checked.size());
    std::map<JobId, MachineIndex> assignment;
    auto loads = place_all(instance, checked, policy,
                           [&](const Job& job, MachineIndex machine, const std::vector<Time>& before) {
                               TraceStep step{job.id, machine, before, before};
                               step.loads_after[machine - 1] += job.size;
                               run.trace.push_back(std::move(step));
                               assignment.emplace(job.id, machine);
                           });
    run.schedule.assignment = std::move(assignment);
    run.schedule.makespan = makespan(loads);
    run.schedule.loads = std::move(loads);
    return run;
}

Time online_makespan(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy) {
    return makespan(place_all(instance, order, policy, [](const Job&, MachineIndex, const std::vector<Time>&) {}));
}

void write_trace_jsonl(std::ostream& out, const std::vector<TraceStep>& trace) {
    auto times = [](const std::vector<Time>& loads) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Time& t : loads) arr.push_back(t.to_string());
        return arr;
    };
    for (const TraceStep& step : trace) {
        nlohmann::ordered_json line;
        line["job"] = step.job;
        line["machine"] = step.machine;
        line["loads_before"] = times(step.loads_before);
        line["loads_after"] = times(step.loads_after);
        out << line.dump() << '\n';
    }
}

} // namespace listsched
