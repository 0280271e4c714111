#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "listsched/generators.hpp"
#include "listsched/harness.hpp"
#include "listsched/instance_io.hpp"
#include "listsched/online.hpp"
#include "listsched/report.hpp"

namespace listsched::cli {

namespace {

namespace fs = std::filesystem;

// Thrown for bad flag combinations found after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TargetArgs {
    std::string instance_path;
    std::string family;
    std::size_t machines = 0;
};

struct Target {
    Instance instance;
    std::optional<GeneratedFamily> family;
};

void add_target_options(CLI::App* cmd, TargetArgs& args) {
    auto* inst = cmd->add_option("--instance", args.instance_path, "Instance file (m=<machines> then one size per line)");
    auto* fam = cmd->add_option("--family", args.family,
                                "class1 | class2 | graham_tight | faigle | faigle_m2 | faigle_m3 | faigle_sqrt2");
    cmd->add_option("--m", args.machines, "Machine count for --family");
    inst->excludes(fam);
}

fs::path output_path(const std::string& given) {
    fs::path p(given);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("LISTSCHED_OUTPUT_DIR"); dir && *dir) return fs::path(dir) / p;
    }
    return p;
}

Target load_target(const TargetArgs& args) {
    if (!args.instance_path.empty()) {
        if (!fs::is_regular_file(args.instance_path)) throw UsageError("cannot read instance file " + args.instance_path);
        return {read_instance_file(args.instance_path), std::nullopt};
    }
    if (args.family.empty()) throw UsageError("one of --instance or --family is required");
    if (args.machines == 0) throw UsageError("--family needs --m");
    GeneratedFamily family = [&] {
        if (args.family == "faigle") return gen_faigle(args.machines);
        auto tag = parse_family_tag(args.family);
        if (!tag) throw UsageError("unknown family '" + args.family + "'");
        try {
            return generate(*tag, args.machines);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    Instance instance = family.instance;
    return {std::move(instance), std::move(family)};
}

std::unique_ptr<OnlinePolicy> make_policy(const std::string& name) {
    if (name == "lsa") return std::make_unique<ListScheduling>(ListScheduling::TieBreak::lowest_index);
    if (name == "lsa-high") return std::make_unique<ListScheduling>(ListScheduling::TieBreak::highest_index);
    throw UsageError("unknown policy '" + name + "' (expected lsa or lsa-high)");
}

std::vector<JobId> parse_sequence(const std::string& text) {
    std::vector<JobId> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            ids.push_back(static_cast<JobId>(v));
        } catch (const std::exception&) {
            throw UsageError("malformed --sequence entry '" + item + "'");
        }
    }
    return ids;
}

void write_text_report(std::ostream& out, const RatioReport& r) {
    out << "family: " << r.label << '\n'
        << "m: " << r.machines << '\n'
        << "policy: " << r.policy << '\n'
        << "alg_makespan: " << r.alg_makespan.value() << '\n'
        << "opt: " << r.opt.value.value() << " (" << to_string(r.opt.kind) << ", " << r.opt.nodes_explored
        << " nodes)\n"
        << "ratio: " << r.ratio.exact() << " = " << r.ratio.decimal() << (r.upper_estimate ? " (upper estimate)" : "")
        << '\n'
        << "bound 2-1/m: " << r.bound_decimal();
    if (r.bound_satisfied) out << (*r.bound_satisfied ? " (satisfied)" : " (VIOLATED)");
    out << '\n';
}

// Sends `emit` to --output (atomically via a temporary) or to `out`.
template <class Emit>
void deliver(const std::string& output, std::ostream& out, Emit&& emit) {
    if (output.empty()) {
        emit(out);
        return;
    }
    fs::path dest = output_path(output);
    fs::path tmp = dest;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw ExportError("cannot write " + dest.string());
        emit(file);
        file.flush();
        if (!file) {
            file.close();
            fs::remove(tmp);
            throw ExportError("write failed for " + dest.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ExportError("cannot write " + dest.string());
    }
}

struct RunArgs {
    TargetArgs target;
    std::string order = "as-listed";
    std::string sequence;
    std::string policy = "lsa";
    std::string format = "text";
    std::string output;
    std::string trace;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 0;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
    Target target = load_target(a.target);
    auto policy = make_policy(a.policy);

    ArrivalOrder order = [&] {
        if (a.order == "as-listed") return ArrivalOrder::as_listed(target.instance);
        if (a.order == "worst") {
            if (target.family) return target.family->worst_order;
            return worst_order_search(target.instance, *policy, a.cap, a.seed).best_order;
        }
        if (a.order == "given") {
            if (a.sequence.empty()) throw UsageError("--order given needs --sequence");
            try {
                return ArrivalOrder(target.instance, parse_sequence(a.sequence));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        throw UsageError("unknown --order '" + a.order + "' (expected as-listed, worst or given)");
    }();

    if (!a.trace.empty()) {
        OnlineRun run = run_online(target.instance, order, *policy);
        if (auto violation = validate(target.instance, run.schedule)) throw std::logic_error(*violation);
        deliver(a.trace, out, [&](std::ostream& os) { write_trace_jsonl(os, run.trace); });
    }

    std::optional<StructuredClass> structured;
    std::string label;
    if (target.family) {
        structured = target.family->structured_class();
        label = std::string(to_string(target.family->tag));
    }
    RatioReport report = competitive_ratio(target.instance, order, *policy, a.node_budget, structured, label);

    if (a.format == "text") {
        deliver(a.output, out, [&](std::ostream& os) { write_text_report(os, report); });
    } else if (auto fmt = parse_report_format(a.format)) {
        deliver(a.output, out, [&](std::ostream& os) { write_reports(os, std::span(&report, 1), *fmt); });
    } else {
        throw UsageError("unknown --format '" + a.format + "'");
    }
    return report.bound_satisfied.value_or(true) ? kExitOk : kExitViolation;
}

struct Table2Args {
    std::vector<std::size_t> machines = kTable2Machines;
    std::string format = "csv";
    std::string output;
};

int cmd_table2(const Table2Args& a, std::ostream& out) {
    for (std::size_t m : a.machines)
        if (m < 2) throw UsageError("machine counts must be >= 2, got " + std::to_string(m));
    std::vector<Table2Row> rows = table2(a.machines);
    std::vector<RatioReport> reports;
    for (const Table2Row& row : rows) {
        reports.push_back(row.class1);
        reports.push_back(row.class2);
    }
    if (a.format == "csv") {
        deliver(a.output, out, [&](std::ostream& os) { write_table2_csv(os, rows); });
    } else if (a.format == "long") {
        deliver(a.output, out, [&](std::ostream& os) { write_long_csv(os, reports); });
    } else if (a.format == "reports") {
        deliver(a.output, out, [&](std::ostream& os) { write_reports(os, reports, ReportFormat::csv); });
    } else if (a.format == "json") {
        deliver(a.output, out, [&](std::ostream& os) { write_reports(os, reports, ReportFormat::json); });
    } else {
        throw UsageError("unknown --format '" + a.format + "' (expected csv, long, reports or json)");
    }
    for (const RatioReport& r : reports)
        if (!r.bound_satisfied.value_or(true)) return kExitViolation;
    return kExitOk;
}

struct VerifyArgs {
    VerifyOptions options;
    bool tight = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.options.max_n < 1 || a.options.max_n > 12) throw UsageError("--max-n must be in [1, 12]");
    if (a.options.max_m < 2 || a.options.max_m > 4) throw UsageError("--max-m must be in [2, 4]");
    if (a.options.min_size < 1 || a.options.max_size < a.options.min_size)
        throw UsageError("size range must satisfy 1 <= --min-size <= --max-size");

    if (a.tight) {
        const ListScheduling lsa;
        int code = kExitOk;
        for (std::size_t m = 2; m <= a.options.max_m; ++m) {
            RatioReport r = competitive_ratio(gen_graham_tight(m), lsa, a.options.node_budget);
            const bool tight = r.ratio.value() == graham_bound(m);
            out << "graham_tight m=" << m << ": ratio " << r.ratio.exact() << " = " << r.ratio.decimal() << ", bound "
                << r.bound_decimal() << (tight ? " (tight)" : " (not tight)") << '\n';
            if (!r.bound_satisfied.value_or(true)) code = kExitViolation;
        }
        return code;
    }

    try {
        VerifySummary s = verify_bound(a.options);
        out << "trials: " << s.trials << '\n' << s.violations << " violations\n";
        if (s.inconclusive) out << "inconclusive: " << s.inconclusive << '\n';
        if (s.worst) {
            out << "max ratio: " << s.worst->ratio.exact() << " = " << s.worst->ratio.decimal() << " (m=" << s.worst->machines
                << ", bound " << s.worst->bound_decimal() << ")\n";
        }
        return kExitOk;
    } catch (const BoundViolation& v) {
        err << "bound violation: " << v.what() << '\n' << v.counterexample();
        return kExitViolation;
    }
}

struct WorstArgs {
    TargetArgs target;
    std::string policy = "lsa";
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t seed = 0;
};

int cmd_worst_order(const WorstArgs& a, std::ostream& out) {
    Target target = load_target(a.target);
    auto policy = make_policy(a.policy);
    WorstOrderResult r = worst_order_search(target.instance, *policy, a.cap, a.seed);
    out << "worst_makespan: " << r.worst_makespan.value() << '\n'
        << "orders_examined: " << r.orders_examined << '\n'
        << "exhaustive: " << (r.exhaustive ? "true" : "false") << '\n'
        << "order:";
    for (JobId id : r.best_order.ids()) out << ' ' << id;
    out << '\n';
    if (target.family) {
        bool matches = r.worst_makespan == target.family->predicted_lsa;
        out << "predicted_lsa: " << target.family->predicted_lsa.value() << (matches ? " (confirmed)" : " (differs)")
            << '\n';
    }
    return kExitOk;
}

struct GenerateArgs {
    TargetArgs target;
    std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    if (!a.target.instance_path.empty()) throw UsageError("generate takes --family, not --instance");
    Target target = load_target(a.target);
    if (a.output.empty()) {
        out << write_instance(target.instance);
        return kExitOk;
    }
    deliver(a.output + ".txt", out, [&](std::ostream& os) { os << write_instance(target.instance); });
    deliver(a.output + ".json", out, [&](std::ostream& os) { os << family_sidecar_json(*target.family); });
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Online list scheduling: competitive ratios against an exact optimum", "listsched"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Schedule an instance online and report the competitive ratio");
    add_target_options(run_cmd, run_args.target);
    run_cmd->add_option("--order", run_args.order, "as-listed | worst | given");
    run_cmd->add_option("--sequence", run_args.sequence, "Comma-separated job ids for --order given");
    run_cmd->add_option("--policy", run_args.policy, "lsa | lsa-high");
    run_cmd->add_option("--format", run_args.format, "text | csv | json");
    run_cmd->add_option("--output", run_args.output, "Write the report here instead of stdout");
    run_cmd->add_option("--trace", run_args.trace, "Write the placement trace as JSON lines");
    run_cmd->add_option("--node-budget", run_args.node_budget, "Branch-and-bound node budget");
    run_cmd->add_option("--cap", run_args.cap, "Enumeration cap for --order worst on instance files");
    run_cmd->add_option("--seed", run_args.seed, "Sampling seed for --order worst");

    Table2Args table_args;
    auto* table_cmd = app.add_subcommand("table2", "Class-1 / Class-2 ratios per machine count");
    table_cmd->add_option("--machines", table_args.machines, "Machine counts (default 2 3 4 5 10 50 100)")
        ->delimiter(',');
    table_cmd->add_option("--format", table_args.format, "csv | long | reports | json");
    table_cmd->add_option("--output", table_args.output, "Write here instead of stdout");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check ratio <= 2-1/m on random instances");
    verify_cmd->add_option("--trials", verify_args.options.trials, "Number of random instances");
    verify_cmd->add_option("--seed", verify_args.options.seed, "Random seed");
    verify_cmd->add_option("--max-n", verify_args.options.max_n, "Largest job count (<= 12)");
    verify_cmd->add_option("--max-m", verify_args.options.max_m, "Largest machine count (<= 4)");
    verify_cmd->add_option("--min-size", verify_args.options.min_size, "Smallest job size");
    verify_cmd->add_option("--max-size", verify_args.options.max_size, "Largest job size");
    verify_cmd->add_option("--node-budget", verify_args.options.node_budget, "Branch-and-bound node budget");
    verify_cmd->add_flag("--tight", verify_args.tight, "Run the graham_tight family for m = 2..max-m instead");

    WorstArgs worst_args;
    auto* worst_cmd = app.add_subcommand("worst-order", "Search arrival orders for the largest makespan");
    add_target_options(worst_cmd, worst_args.target);
    worst_cmd->add_option("--policy", worst_args.policy, "lsa | lsa-high");
    worst_cmd->add_option("--cap", worst_args.cap, "Enumerate at most this many orders, sample beyond");
    worst_cmd->add_option("--seed", worst_args.seed, "Sampling seed");

    GenerateArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generate", "Write a family instance (<output>.txt) and sidecar (<output>.json)");
    add_target_options(gen_cmd, gen_args.target);
    gen_cmd->add_option("--output", gen_args.output, "Output prefix; prints the instance when omitted");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run_args, out);
        if (*table_cmd) return cmd_table2(table_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out, err);
        if (*worst_cmd) return cmd_worst_order(worst_args, out);
        if (*gen_cmd) return cmd_generate(gen_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InstanceParseError& e) {
        err << "error: instance " << e.what() << '\n';
        return kExitUsage;
    } catch (const ExportError& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    }
    return kExitUsage;
}

} // namespace listsched::cli
