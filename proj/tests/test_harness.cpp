#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "listsched/harness.hpp"
#include "listsched/multiset_permutations.hpp"
#include "listsched/report.hpp"
#include "oracles.hpp"

using namespace listsched;
namespace fs = std::filesystem;

namespace {

struct AlwaysFirst final : OnlinePolicy {
    std::string_view name() const override { return "first"; }
    MachineIndex choose(std::span<const Time>, const Job&) const override { return 1; }
};

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("listsched_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("competitive_ratio examples") {
    const ListScheduling lsa;
    RatioReport c1 = competitive_ratio(gen_class1(4), lsa);
    CHECK(c1.ratio.value() == Surd(Rational(3, 2)));
    CHECK(c1.ratio.decimal() == "1.5000");
    CHECK(c1.ratio.exact() == "3/2");
    CHECK(c1.label == "class1");
    CHECK(c1.bound_satisfied == true);
    CHECK_FALSE(c1.upper_estimate);

    GeneratedFamily tight = gen_graham_tight(2);
    ArrivalOrder big_first(tight.instance, {3, 1, 2});
    RatioReport one = competitive_ratio(tight.instance, big_first, lsa);
    CHECK(one.ratio.value() == Surd(1));
    CHECK(one.label.starts_with("inst-"));

    RatioReport c2 = competitive_ratio(gen_class2(10), lsa);
    CHECK(c2.ratio.value() == Surd(Rational(109, 100)));
    CHECK(c2.ratio.decimal() == "1.0900");
}

TEST_CASE("ratio is at least 1 against a conclusive oracle") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> n_dist(1, 8), m_dist(2, 4), s_dist(1, 9);
    for (int t = 0; t < 200; ++t) {
        std::vector<Time> sizes;
        int n = n_dist(rng);
        for (int i = 0; i < n; ++i) sizes.emplace_back(s_dist(rng));
        Instance inst = Instance::from_sizes(sizes, static_cast<std::size_t>(m_dist(rng)));
        RatioReport r = competitive_ratio(inst, ArrivalOrder::as_listed(inst), ListScheduling{});
        REQUIRE(r.ratio.value() >= Surd(1));
        REQUIRE(r.bound_satisfied == true);
    }
}

TEST_CASE("an exhausted oracle yields a flagged upper estimate") {
    Instance inst = Instance::from_sizes({9, 8, 7, 7, 6, 5, 5, 4, 3, 3, 2, 1}, 4);
    RatioReport r = competitive_ratio(inst, ArrivalOrder::as_listed(inst), ListScheduling{}, 1);
    CHECK(r.opt.kind == OptKind::lower_bound_only);
    CHECK(r.upper_estimate);
    CHECK_FALSE(r.bound_satisfied.has_value());
}

TEST_CASE("structured closed form backs up an exhausted search") {
    GeneratedFamily f = gen_class1(6);
    RatioReport r = competitive_ratio(f, ListScheduling{}, 0);
    CHECK(r.opt.value == Time(6));
    CHECK((r.opt.kind == OptKind::certified_by_bound || r.opt.kind == OptKind::analytic_class));

    Instance c2 = gen_class2(3).instance;
    CHECK_THROWS_AS(competitive_ratio(c2, ArrivalOrder::as_listed(c2), ListScheduling{}, kDefaultNodeBudget,
                                      StructuredClass::class1),
                    std::logic_error);
}

TEST_CASE("faigle m=4 ratio renders exactly") {
    RatioReport r = competitive_ratio(gen_faigle(4), ListScheduling{});
    CHECK(r.ratio.exact() == "(4+3r2)/(2+2r2)");
    CHECK(r.ratio.value() == Surd(Rational(1), Rational(1, 2)));
    CHECK(r.ratio.decimal() == "1.7071");
}

TEST_CASE("multiset permutation ranking") {
    MultisetPermutations perms({2, 1, 2});
    CHECK(perms.count() == 30);
    std::vector<std::size_t> seq = perms.unrank(0);
    CHECK(seq == std::vector<std::size_t>{0, 0, 1, 2, 2});
    BigCount rank = 0;
    std::set<std::vector<std::size_t>> seen;
    do {
        REQUIRE(perms.unrank(rank) == seq);
        REQUIRE(perms.rank(seq) == rank);
        seen.insert(seq);
        ++rank;
    } while (std::next_permutation(seq.begin(), seq.end()));
    CHECK(rank == perms.count());
    CHECK(seen.size() == 30);
    CHECK_THROWS_AS((void)perms.unrank(30), std::out_of_range);
    CHECK(multinomial({50, 1}) == 51);
    CHECK(multinomial({3, 3, 3}) == 1680);
}

TEST_CASE("worst_order_search examples") {
    const ListScheduling lsa;
    GeneratedFamily c1 = gen_class1(3);
    WorstOrderResult w1 = worst_order_search(c1.instance, lsa);
    CHECK(w1.worst_makespan == Time(4));
    CHECK(w1.exhaustive);
    CHECK(w1.orders_examined == 5);
    CHECK(online_makespan(c1.instance, c1.worst_order, lsa) == w1.worst_makespan);

    GeneratedFamily c2 = gen_class2(2);
    WorstOrderResult w2 = worst_order_search(c2.instance, lsa);
    CHECK(w2.worst_makespan == Time(5));
    CHECK(w2.best_order.ids().back() == 3);
    CHECK(w2.orders_examined == 3);

    Instance one = Instance::from_sizes({Time(4)}, 2);
    WorstOrderResult w3 = worst_order_search(one, lsa);
    CHECK(w3.exhaustive);
    CHECK(w3.orders_examined == 1);
    CHECK(w3.best_order.ids() == std::vector<JobId>{1});
}

TEST_CASE("worst order ties resolve to the smallest id sequence") {
    // Every order of three equal jobs gives the same makespan.
    Instance inst = Instance::from_sizes({2, 2, 2}, 2);
    WorstOrderResult w = worst_order_search(inst, ListScheduling{});
    CHECK(w.orders_examined == 1);
    CHECK(w.best_order.ids() == std::vector<JobId>{1, 2, 3});
    // Faigle m=3: the listed order is worst and has the smallest id sequence.
    GeneratedFamily f = gen_faigle(3);
    WorstOrderResult wf = worst_order_search(f.instance, ListScheduling{});
    CHECK(wf.exhaustive);
    CHECK(wf.orders_examined == 140); // 7! / (3! 3! 1!)
    CHECK(wf.worst_makespan == Time(10));
    CHECK(wf.best_order.ids() == f.worst_order.ids());
}

TEST_CASE("worst order search matches brute force on random multisets") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> n_dist(1, 7), m_dist(2, 3), s_dist(1, 4);
    for (int t = 0; t < 60; ++t) {
        std::vector<std::int64_t> sizes(static_cast<std::size_t>(n_dist(rng)));
        for (auto& s : sizes) s = s_dist(rng);
        const auto m = static_cast<std::size_t>(m_dist(rng));
        std::vector<Time> ts(sizes.begin(), sizes.end());
        Instance inst = Instance::from_sizes(ts, m);
        auto perms = oracles::distinct_permutations(sizes);
        std::int64_t worst = 0;
        for (const auto& p : perms) worst = std::max(worst, oracles::replay_list_scheduling(p, m));
        WorstOrderResult w = worst_order_search(inst, ListScheduling{});
        REQUIRE(w.exhaustive);
        REQUIRE(w.orders_examined == perms.size());
        REQUIRE(w.worst_makespan == Time(worst));
    }
}

TEST_CASE("sampling beyond the cap is flagged and deterministic") {
    GeneratedFamily f = gen_faigle(3); // 140 distinct orders
    WorstOrderResult a = worst_order_search(f.instance, ListScheduling{}, 20, 7);
    WorstOrderResult b = worst_order_search(f.instance, ListScheduling{}, 20, 7);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.orders_examined == 20);
    CHECK(a.best_order == b.best_order);
    CHECK(a.worst_makespan == b.worst_makespan);
    CHECK(a.worst_makespan <= Time(10));

    // Class-1 m=12 has 122 distinct orders; a cap of 121 samples all but one.
    GeneratedFamily c = gen_class1(12);
    WorstOrderResult s = worst_order_search(c.instance, ListScheduling{}, 121, 1);
    CHECK_FALSE(s.exhaustive);
    CHECK(s.orders_examined == 121);
    CHECK(s.worst_makespan <= c.predicted_lsa);
}

TEST_CASE("worst order search confirms the family predictions when exhaustive") {
    const ListScheduling lsa;
    for (std::size_t m = 2; m <= 8; ++m) {
        for (const GeneratedFamily& f : {gen_class1(m), gen_class2(m), gen_graham_tight(m)}) {
            WorstOrderResult w = worst_order_search(f.instance, lsa);
            REQUIRE(w.exhaustive);
            REQUIRE(w.worst_makespan == f.predicted_lsa);
        }
    }
}

TEST_CASE("table2 rows") {
    std::vector<std::size_t> ms{2, 50, 3};
    auto rows = table2(ms);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].class1.ratio.decimal() == "1.0000");
    CHECK(rows[0].class2.ratio.decimal() == "1.2500");
    CHECK(rows[1].class1.ratio.decimal() == "1.9600");
    CHECK(rows[1].class2.ratio.decimal() == "1.0196");
    CHECK(rows[2].class1.ratio.decimal() == "1.3333");
    CHECK(rows[2].class2.ratio.decimal() == "1.2222");
    std::vector<std::size_t> bad{2, 1};
    CHECK_THROWS_AS(table2(bad), std::invalid_argument);
}

TEST_CASE("class ratios are monotone in m") {
    const ListScheduling lsa;
    Surd prev1, prev2;
    for (std::size_t m = 2; m <= 100; ++m) {
        Surd r1 = competitive_ratio(gen_class1(m), lsa).ratio.value();
        Surd r2 = competitive_ratio(gen_class2(m), lsa).ratio.value();
        auto mi = static_cast<std::int64_t>(m);
        REQUIRE(r1 == Surd(Rational(2) - Rational(2, mi)));
        REQUIRE(r2 == Surd(Rational(mi * mi + mi - 1, mi * mi)));
        if (m >= 3) REQUIRE(r1 > prev1);
        if (m >= 3) REQUIRE(r2 < prev2);
        prev1 = r1;
        prev2 = r2;
    }
}

TEST_CASE("verify_bound examples") {
    VerifyOptions opts;
    VerifySummary s = verify_bound(opts);
    CHECK(s.trials == 1000);
    CHECK(s.violations == 0);
    CHECK(s.inconclusive == 0);
    REQUIRE(s.worst.has_value());
    CHECK(s.worst->ratio.value() <= graham_bound(s.worst->machines));

    VerifyOptions single;
    single.trials = 25;
    single.max_n = 1;
    VerifySummary one = verify_bound(single);
    REQUIRE(one.worst.has_value());
    CHECK(one.worst->ratio.value() == Surd(1));

    VerifyOptions too_big;
    too_big.max_n = 13;
    CHECK_THROWS_AS(verify_bound(too_big), std::invalid_argument);
    too_big.max_n = 12;
    too_big.max_m = 5;
    CHECK_THROWS_AS(verify_bound(too_big), std::invalid_argument);
}

TEST_CASE("verify_bound is deterministic per seed") {
    VerifyOptions opts;
    opts.trials = 200;
    opts.seed = 5;
    VerifySummary a = verify_bound(opts);
    VerifySummary b = verify_bound(opts);
    CHECK(a.worst_instance == b.worst_instance);
    CHECK(a.worst_order == b.worst_order);
}

TEST_CASE("verify_bound fails hard with a counterexample for a bad policy") {
    VerifyOptions opts;
    opts.trials = 200;
    try {
        verify_bound(opts, AlwaysFirst{});
        FAIL("expected a bound violation");
    } catch (const BoundViolation& v) {
        CHECK(v.counterexample().starts_with("m="));
        CHECK(v.counterexample().find("order=") != std::string::npos);
    }
}

TEST_CASE("tight family hits 2-1/m exactly") {
    for (std::size_t m = 2; m <= 5; ++m) {
        RatioReport r = competitive_ratio(gen_graham_tight(m), ListScheduling{});
        REQUIRE(r.ratio.value() == graham_bound(m));
        REQUIRE(r.bound_satisfied == true);
    }
}

TEST_CASE("report export") {
    auto rows = table2(kTable2Machines);
    std::vector<RatioReport> reports;
    for (const auto& row : rows) {
        reports.push_back(row.class1);
        reports.push_back(row.class2);
    }
    std::ostringstream csv;
    write_reports(csv, reports, ReportFormat::csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "m,family,alg_makespan,opt,ratio_exact,ratio_4dp,bound,satisfied");
    std::string first;
    std::getline(lines, first);
    CHECK(first == "2,class1,2,2,1,1.0000,1.5000,true");

    std::ostringstream empty;
    write_reports(empty, {}, ReportFormat::csv);
    CHECK(empty.str() == header + "\n");

    RatioReport f4 = competitive_ratio(gen_faigle(4), ListScheduling{});
    std::ostringstream one;
    write_reports(one, std::span(&f4, 1), ReportFormat::csv);
    CHECK(one.str().find("4,faigle_sqrt2,4+3r2,2+2r2,(4+3r2)/(2+2r2),1.7071,1.7500,true") != std::string::npos);

    std::ostringstream js;
    write_reports(js, std::span(&f4, 1), ReportFormat::json);
    auto j = nlohmann::json::parse(js.str());
    CHECK(j[0]["ratio_exact"] == "(4+3r2)/(2+2r2)");
    CHECK(j[0]["opt_kind"] == "certified-by-bound");
    CHECK(j[0]["satisfied"] == true);

    std::ostringstream t2;
    write_table2_csv(t2, rows);
    CHECK(t2.str() == "m,class1_ratio,class2_ratio\n2,1.0000,1.2500\n3,1.3333,1.2222\n4,1.5000,1.1875\n"
                      "5,1.6000,1.1600\n10,1.8000,1.0900\n50,1.9600,1.0196\n100,1.9800,1.0099\n");

    std::ostringstream longf;
    write_long_csv(longf, reports);
    CHECK(longf.str().starts_with("m,family,ratio\n2,class1,1.0000\n2,class2,1.2500\n"));
}

TEST_CASE("export_report writes atomically and reports failures") {
    fs::path dir = scratch_dir();
    RatioReport r = competitive_ratio(gen_class1(4), ListScheduling{});
    fs::path dest = dir / "report.csv";
    export_report(std::span(&r, 1), ReportFormat::csv, dest);
    std::string first = slurp(dest);
    export_report(std::span(&r, 1), ReportFormat::csv, dest);
    CHECK(slurp(dest) == first);
    CHECK_FALSE(fs::exists(dir / "report.csv.tmp"));

    fs::path bad = dir / "missing_dir" / "report.csv";
    CHECK_THROWS_AS(export_report(std::span(&r, 1), ReportFormat::json, bad), ExportError);
    CHECK_FALSE(fs::exists(bad));
    CHECK_FALSE(fs::exists(dir / "missing_dir"));
    fs::remove_all(dir);
}
