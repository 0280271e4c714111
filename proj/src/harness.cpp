#include "listsched/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "listsched/instance_io.hpp"
#include "listsched/multiset_permutations.hpp"

namespace listsched {

std::string Ratio::exact() const {
    if (alg.value().is_rational() && opt.value().is_rational()) return value().to_string();
    return "(" + alg.value().to_string() + ")/(" + opt.value().to_string() + ")";
}

Surd graham_bound(std::size_t machines) {
    return Surd(Rational(2) - Rational(1, static_cast<std::int64_t>(machines)));
}

std::string instance_digest(const Instance& instance) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : write_instance(instance)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("inst-") + buf;
}

RatioReport competitive_ratio(const Instance& instance, const ArrivalOrder& order, const OnlinePolicy& policy,
                              std::uint64_t node_budget, std::optional<StructuredClass> structured, std::string label) {
    RatioReport report;
    report.label = label.empty() ? instance_digest(instance) : std::move(label);
    report.policy = std::string(policy.name());
    report.machines = instance.machines();
    report.alg_makespan = run_online(instance, order, policy).schedule.makespan;
    report.opt = opt_exact(instance, node_budget);

    if (structured) {
        Time analytic = opt_structured(*structured, instance.machines());
        if (report.opt.kind == OptKind::lower_bound_only) {
            report.opt = {analytic, OptKind::analytic_class, report.opt.nodes_explored, std::nullopt};
        } else if (report.opt.value != analytic) {
            throw std::logic_error("oracle " + report.opt.value.to_string() + " disagrees with closed form " +
                                   analytic.to_string());
        }
    }

    report.ratio = {report.alg_makespan, report.opt.value};
    report.upper_estimate = report.opt.kind == OptKind::lower_bound_only;
    if (!report.upper_estimate) report.bound_satisfied = report.ratio.value() <= graham_bound(instance.machines());
    return report;
}

RatioReport competitive_ratio(const GeneratedFamily& family, const OnlinePolicy& policy, std::uint64_t node_budget) {
    return competitive_ratio(family.instance, family.worst_order, policy, node_budget, family.structured_class(),
                             std::string(to_string(family.tag)));
}

namespace {

// Jobs grouped by equal size; symbol s is the s-th distinct size in
// canonical order, and members[s] lists its job ids in canonical order.
struct SizeClasses {
    std::vector<std::vector<JobId>> members;

    explicit SizeClasses(const Instance& instance) {
        std::vector<Time> sizes;
        for (const Job& job : instance.jobs()) {
            auto it = std::find(sizes.begin(), sizes.end(), job.size);
            if (it == sizes.end()) {
                sizes.push_back(job.size);
                members.push_back({job.id});
            } else {
                members[static_cast<std::size_t>(it - sizes.begin())].push_back(job.id);
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> counts() const {
        std::vector<std::size_t> out;
        for (const auto& m : members) out.push_back(m.size());
        return out;
    }

    [[nodiscard]] std::vector<JobId> ids_for(const std::vector<std::size_t>& symbols) const {
        std::vector<std::size_t> next(members.size(), 0);
        std::vector<JobId> ids;
        ids.reserve(symbols.size());
        for (std::size_t s : symbols) ids.push_back(members[s][next[s]++]);
        return ids;
    }
};

// Floyd's algorithm: `k` distinct uniform ranks from [0, n).
std::set<BigCount> sample_ranks(const BigCount& n, std::uint64_t k, std::uint64_t seed) {
    boost::random::mt19937_64 rng(seed);
    std::set<BigCount> chosen;
    for (BigCount j = n - k; j < n; ++j) {
        boost::random::uniform_int_distribution<BigCount> dist(0, j);
        BigCount t = dist(rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return chosen;
}

} // namespace

WorstOrderResult worst_order_search(const Instance& instance, const OnlinePolicy& policy,
                                    std::uint64_t enumeration_cap, std::uint64_t seed) {
    if (enumeration_cap == 0) throw std::invalid_argument("enumeration cap must be positive");
    SizeClasses classes(instance);
    MultisetPermutations perms(classes.counts());

    std::optional<std::vector<JobId>> best_ids;
    Time best;
    std::uint64_t examined = 0;
    auto consider = [&](const std::vector<std::size_t>& symbols) {
        std::vector<JobId> ids = classes.ids_for(symbols);
        Time span = online_makespan(instance, ArrivalOrder(instance, ids), policy);
        ++examined;
        if (!best_ids || span > best || (span == best && ids < *best_ids)) {
            best = span;
            best_ids = std::move(ids);
        }
    };

    const bool exhaustive = perms.count() <= enumeration_cap;
    if (exhaustive) {
        std::vector<std::size_t> symbols = perms.unrank(0);
        do {
            consider(symbols);
        } while (std::next_permutation(symbols.begin(), symbols.end()));
    } else {
        for (const BigCount& rank : sample_ranks(perms.count(), enumeration_cap, seed)) consider(perms.unrank(rank));
    }
    return {ArrivalOrder(instance, std::move(*best_ids)), best, examined, exhaustive};
}

std::vector<Table2Row> table2(std::span<const std::size_t> machine_counts) {
    for (std::size_t m : machine_counts)
        if (m < 2) throw std::invalid_argument("table2 needs m >= 2, got " + std::to_string(m));
    const ListScheduling lsa;
    std::vector<Table2Row> rows;
    rows.reserve(machine_counts.size());
    for (std::size_t m : machine_counts)
        rows.push_back({m, competitive_ratio(gen_class1(m), lsa), competitive_ratio(gen_class2(m), lsa)});
    return rows;
}

namespace {

std::string order_line(const std::vector<JobId>& ids) {
    std::string out = "order=";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out;
}

} // namespace

VerifySummary verify_bound(const VerifyOptions& options, const OnlinePolicy& policy) {
    if (options.max_n < 1 || options.max_n > 12) throw std::invalid_argument("max_n must be in [1, 12]");
    if (options.max_m < 2 || options.max_m > 4) throw std::invalid_argument("max_m must be in [2, 4]");
    if (options.min_size < 1 || options.max_size < options.min_size)
        throw std::invalid_argument("size range must satisfy 1 <= min <= max");

    boost::random::mt19937_64 rng(options.seed);
    using dist = boost::random::uniform_int_distribution<std::int64_t>;

    VerifySummary summary;
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        auto n = static_cast<std::size_t>(dist(1, static_cast<std::int64_t>(options.max_n))(rng));
        auto m = static_cast<std::size_t>(dist(2, static_cast<std::int64_t>(options.max_m))(rng));
        std::vector<Time> sizes;
        for (std::size_t i = 0; i < n; ++i) sizes.emplace_back(dist(options.min_size, options.max_size)(rng));
        Instance instance = Instance::from_sizes(sizes, m);

        std::vector<JobId> ids = ArrivalOrder::as_listed(instance).ids();
        for (std::size_t i = ids.size(); i > 1; --i)
            std::swap(ids[i - 1], ids[static_cast<std::size_t>(dist(0, static_cast<std::int64_t>(i - 1))(rng))]);
        ArrivalOrder order(instance, ids);

        RatioReport report = competitive_ratio(instance, order, policy, options.node_budget);
        ++summary.trials;
        if (report.upper_estimate) {
            ++summary.inconclusive;
            continue;
        }
        if (!*report.bound_satisfied) {
            ++summary.violations;
            std::string counterexample = write_instance(instance) + order_line(ids) + "\n";
            throw BoundViolation("ratio " + report.ratio.exact() + " exceeds 2-1/m on trial " + std::to_string(trial) +
                                     " (policy " + report.policy + ")",
                                 counterexample);
        }
        if (!summary.worst || report.ratio.value() > summary.worst->ratio.value()) {
            summary.worst = report;
            summary.worst_instance = write_instance(instance);
            summary.worst_order = ids;
        }
    }
    return summary;
}

VerifySummary verify_bound(const VerifyOptions& options) { return verify_bound(options, ListScheduling{}); }

} // namespace listsched
