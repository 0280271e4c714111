#include "listsched/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "listsched/online.hpp"

namespace listsched {

namespace {

std::vector<Job> jobs_largest_first(const Instance& instance) {
    std::vector<Job> jobs = instance.jobs();
    std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.id < b.id;
    });
    return jobs;
}

class BranchAndBound {
public:
    BranchAndBound(const Instance& instance, const SearchOptions& options)
        : instance_(instance), options_(options), jobs_(jobs_largest_first(instance)),
          loads_(instance.machines()), placement_(jobs_.size()), bound_(lower_bound(instance)) {}

    OptResult run() {
        LptResult lpt = lpt_makespan(instance_);
        incumbent_ = lpt.makespan;
        best_schedule_ = std::move(lpt.schedule);

        if (options_.certify_early && incumbent_ == bound_)
            return {incumbent_, OptKind::certified_by_bound, 0, best_schedule_};

        search(0, 0, Time{});

        if (exhausted_) return {bound_, OptKind::lower_bound_only, nodes_, std::nullopt};
        if (certified_) return {incumbent_, OptKind::certified_by_bound, nodes_, best_schedule_};
        return {incumbent_, OptKind::exact, nodes_, best_schedule_};
    }

private:
    void search(std::size_t depth, std::size_t used, const Time& current_max) {
        if (depth == jobs_.size()) {
            if (current_max < incumbent_) record(current_max);
            return;
        }
        if (++nodes_ > options_.node_budget) {
            exhausted_ = true;
            return;
        }

        const Time& size = jobs_[depth].size;
        Time min_load = *std::min_element(loads_.begin(), loads_.end());
        if (std::max(current_max, min_load + size) >= incumbent_) return;

        const std::size_t m = loads_.size();
        const std::size_t limit = options_.symmetry_pruning ? std::min(used + 1, m) : m;
        for (std::size_t j = 0; j < limit; ++j) {
            if (options_.symmetry_pruning && tried_same_load(j)) continue;
            Time placed = loads_[j] + size;
            if (placed >= incumbent_) continue;

            Time saved = loads_[j];
            loads_[j] = placed;
            placement_[depth] = static_cast<MachineIndex>(j + 1);
            search(depth + 1, std::max(used, j + 1), std::max(current_max, placed));
            loads_[j] = saved;

            if (exhausted_ || certified_) return;
        }
    }

    bool tried_same_load(std::size_t j) const {
        for (std::size_t k = 0; k < j; ++k)
            if (loads_[k] == loads_[j]) return true;
        return false;
    }

    void record(const Time& value) {
        incumbent_ = value;
        std::map<JobId, MachineIndex> assignment;
        for (std::size_t i = 0; i < jobs_.size(); ++i) assignment.emplace(jobs_[i].id, placement_[i]);
        best_schedule_ = Schedule::from_assignment(instance_, std::move(assignment));
        if (options_.certify_early && incumbent_ == bound_) certified_ = true;
    }

    const Instance& instance_;
    SearchOptions options_;
    std::vector<Job> jobs_;
    std::vector<Time> loads_;
    std::vector<MachineIndex> placement_;
    Time bound_;
    Time incumbent_;
    Schedule best_schedule_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool certified_ = false;
};

} // namespace

std::string_view to_string(OptKind kind) {
    switch (kind) {
    case OptKind::exact: return "exact";
    case OptKind::certified_by_bound: return "certified-by-bound";
    case OptKind::analytic_class: return "analytic-class";
    case OptKind::lower_bound_only: return "lower-bound-only";
    }
    return "unknown";
}

Time lower_bound(const Instance& instance) {
    Time average = total_load(instance).scaled(Rational(1, static_cast<std::int64_t>(instance.machines())));
    return std::max(average, instance.max_size());
}

LptResult lpt_makespan(const Instance& instance) {
    std::vector<Time> loads(instance.machines());
    std::map<JobId, MachineIndex> assignment;
    for (const Job& job : jobs_largest_first(instance)) {
        MachineIndex machine = lsa_step(loads, job);
        loads[machine - 1] += job.size;
        assignment.emplace(job.id, machine);
    }
    Schedule schedule{std::move(assignment), loads, makespan(loads)};
    return {schedule.makespan, std::move(schedule)};
}

OptResult opt_exact(const Instance& instance, std::uint64_t node_budget) {
    SearchOptions options;
    options.node_budget = node_budget;
    return opt_exact(instance, options);
}

OptResult opt_exact(const Instance& instance, const SearchOptions& options) {
    return BranchAndBound(instance, options).run();
}

Time opt_structured(StructuredClass cls, std::size_t machines) {
    if (machines < 2) throw std::invalid_argument("structured classes need m >= 2");
    auto m = static_cast<std::int64_t>(machines);
    return cls == StructuredClass::class1 ? Time(m) : Time(m * m);
}

} // namespace listsched
