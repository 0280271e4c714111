#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "listsched/time.hpp"

namespace listsched {

using JobId = std::uint32_t;
// Machines are numbered 1..m.
using MachineIndex = std::uint32_t;

struct Job {
    JobId id = 0;
    Time size;

    friend bool operator==(const Job&, const Job&) = default;
};

// A multiset of jobs on m >= 2 identical machines. The job list is the
// canonical order; arrival orders are kept separately (ArrivalOrder).
class Instance {
public:
    // Throws std::invalid_argument if machines < 2, jobs is empty, a job
    // size is not strictly positive, or two jobs share an id.
    Instance(std::vector<Job> jobs, std::size_t machines);

    // Jobs with ids 1..n in the given order.
    static Instance from_sizes(const std::vector<Time>& sizes, std::size_t machines);

    [[nodiscard]] const std::vector<Job>& jobs() const { return jobs_; }
    [[nodiscard]] std::size_t machines() const { return machines_; }
    [[nodiscard]] std::size_t size() const { return jobs_.size(); }

    [[nodiscard]] bool contains(JobId id) const { return index_.contains(id); }
    // Throws std::out_of_range for an unknown id.
    [[nodiscard]] const Job& job(JobId id) const;
    [[nodiscard]] Time max_size() const;

private:
    std::vector<Job> jobs_;
    std::size_t machines_;
    std::unordered_map<JobId, std::size_t> index_;
};

// A permutation of an instance's job ids: the order in which an online
// algorithm sees the jobs.
class ArrivalOrder {
public:
    // Throws std::invalid_argument unless ids is a bijection onto the
    // instance's job ids.
    ArrivalOrder(const Instance& instance, std::vector<JobId> ids);

    // The instance's canonical order.
    static ArrivalOrder as_listed(const Instance& instance);

    [[nodiscard]] const std::vector<JobId>& ids() const { return ids_; }
    [[nodiscard]] std::size_t size() const { return ids_.size(); }

    friend bool operator==(const ArrivalOrder&, const ArrivalOrder&) = default;

private:
    std::vector<JobId> ids_;
};

// A complete job -> machine assignment with per-machine loads and makespan.
//
// Values are stored as given so that validate() can inspect inconsistent
// schedules; from_assignment() is the way to build a consistent one.
struct Schedule {
    std::map<JobId, MachineIndex> assignment;
    std::vector<Time> loads; // loads[j - 1] is the load of machine j
    Time makespan;

    static Schedule from_assignment(const Instance& instance, std::map<JobId, MachineIndex> assignment);

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Maximum over machines of the load.
Time makespan(const Schedule& schedule);
Time makespan(std::span<const Time> loads);

// Sum of all processing times.
Time total_load(const Instance& instance);

// std::nullopt when the schedule is consistent with the instance, otherwise
// a description of the first violated invariant ("unassigned job 3", ...).
std::optional<std::string> validate(const Instance& instance, const Schedule& schedule);

} // namespace listsched
