#include "listsched/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace listsched {

Instance::Instance(std::vector<Job> jobs, std::size_t machines) : jobs_(std::move(jobs)), machines_(machines) {
    if (machines_ < 2) throw std::invalid_argument("instance needs at least 2 machines");
    if (jobs_.empty()) throw std::invalid_argument("instance has no jobs");
    index_.reserve(jobs_.size());
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        const Job& job = jobs_[i];
        if (job.size.is_zero()) throw std::invalid_argument("job " + std::to_string(job.id) + " has zero size");
        if (!index_.emplace(job.id, i).second)
            throw std::invalid_argument("duplicate job id " + std::to_string(job.id));
    }
}

Instance Instance::from_sizes(const std::vector<Time>& sizes, std::size_t machines) {
    std::vector<Job> jobs;
    jobs.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) jobs.push_back({static_cast<JobId>(i + 1), sizes[i]});
    return Instance(std::move(jobs), machines);
}

const Job& Instance::job(JobId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::out_of_range("unknown job id " + std::to_string(id));
    return jobs_[it->second];
}

Time Instance::max_size() const {
    Time best;
    for (const Job& job : jobs_) best = std::max(best, job.size);
    return best;
}

ArrivalOrder::ArrivalOrder(const Instance& instance, std::vector<JobId> ids) : ids_(std::move(ids)) {
    if (ids_.size() != instance.size())
        throw std::invalid_argument("arrival order has " + std::to_string(ids_.size()) + " entries, instance has " +
                                    std::to_string(instance.size()) + " jobs");
    std::unordered_set<JobId> seen;
    for (JobId id : ids_) {
        if (!instance.contains(id)) throw std::invalid_argument("arrival order names unknown job " + std::to_string(id));
        if (!seen.insert(id).second) throw std::invalid_argument("arrival order repeats job " + std::to_string(id));
    }
}

ArrivalOrder ArrivalOrder::as_listed(const Instance& instance) {
    std::vector<JobId> ids;
    ids.reserve(instance.size());
    for (const Job& job : instance.jobs()) ids.push_back(job.id);
    return ArrivalOrder(instance, std::move(ids));
}

Schedule Schedule::from_assignment(const Instance& instance, std::map<JobId, MachineIndex> assignment) {
    Schedule s;
    s.loads.assign(instance.machines(), Time{});
    for (const auto& [id, machine] : assignment) {
        if (machine < 1 || machine > instance.machines())
            throw std::invalid_argument("machine " + std::to_string(machine) + " out of range");
        s.loads[machine - 1] += instance.job(id).size;
    }
    s.assignment = std::move(assignment);
    s.makespan = listsched::makespan(s.loads);
    return s;
}

Time makespan(std::span<const Time> loads) {
    Time best;
    for (const Time& load : loads) best = std::max(best, load);
    return best;
}

Time makespan(const Schedule& schedule) { return makespan(std::span<const Time>(schedule.loads)); }

Time total_load(const Instance& instance) {
    Time sum;
    for (const Job& job : instance.jobs()) sum += job.size;
    return sum;
}

std::optional<std::string> validate(const Instance& instance, const Schedule& schedule) {
    if (schedule.loads.size() != instance.machines())
        return "wrong machine count: " + std::to_string(schedule.loads.size()) + " loads for " +
               std::to_string(instance.machines()) + " machines";
    for (const auto& [id, machine] : schedule.assignment) {
        if (!instance.contains(id)) return "unknown job " + std::to_string(id);
        if (machine < 1 || machine > instance.machines())
            return "machine out of range: job " + std::to_string(id) + " on machine " + std::to_string(machine);
    }
    for (const Job& job : instance.jobs())
        if (!schedule.assignment.contains(job.id)) return "unassigned job " + std::to_string(job.id);

    std::vector<Time> recomputed(instance.machines());
    for (const auto& [id, machine] : schedule.assignment) recomputed[machine - 1] += instance.job(id).size;
    for (std::size_t j = 0; j < recomputed.size(); ++j)
        if (recomputed[j] != schedule.loads[j])
            return "stale load on machine " + std::to_string(j + 1) + ": recorded " + schedule.loads[j].to_string() +
                   ", actual " + recomputed[j].to_string();
    if (schedule.makespan != makespan(schedule))
        return "stale makespan: recorded " + schedule.makespan.to_string() + ", actual " +
               makespan(schedule).to_string();
    return std::nullopt;
}

} // namespace listsched
