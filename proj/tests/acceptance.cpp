// One PASS/FAIL line per acceptance criterion. Each criterion runs the native
// check and the registry (DSL) check where both exist and passes only if every
// route passes within the time limit. Exit status is the number of failures.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <wwords/colored/enumerate.hpp>
#include <wwords/colored/generating.hpp>
#include <wwords/colored/relations.hpp>
#include <wwords/dsl/suite.hpp>
#include <wwords/dsl/table.hpp>
#include <wwords/identities/partition_theorems.hpp>
#include <wwords/identities/sums.hpp>
#include <wwords/identities/verify.hpp>

using namespace wwords;
using namespace wwords::dsl;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void require(const std::vector<IdentityReport> &reports, const std::string &route)
    {
        for (const auto &r : reports) {
            if (!r.passed()) {
                std::string w = route + " " + r.name + " failed";
                if (r.witness) {
                    w += ": " + r.witness->message;
                }
                require(false, w);
            }
        }
    }
};

std::set<std::string> fixture(const std::string &name)
{
    std::ifstream in(std::string(WWORDS_FIXTURE_DIR) + "/" + name);
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            out.insert(line);
        }
    }
    return out;
}

std::set<std::string> as_set(const TableColumn &c)
{
    return {c.entries.begin(), c.entries.end()};
}

// Registry identities by name, with optional overrides.
std::vector<IdentityReport> dsl(const std::vector<std::string> &names, std::optional<long> n_max = std::nullopt)
{
    std::vector<IdentityReport> out;
    for (const auto &name : names) {
        SuiteConfig c;
        c.identity = name;
        c.n_max = n_max;
        const auto r = run_suite(c);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<IdentityReport> pick(const std::vector<IdentityReport> &all, const std::set<std::string> &names)
{
    std::vector<IdentityReport> out;
    for (const auto &r : all) {
        if (names.count(r.name)) {
            out.push_back(r);
        }
    }
    return out;
}

Outcome table_mod2()
{
    Outcome o;
    const auto t = emit_table("thm_Mod2_MM_refinement", 18, 2);
    o.require(t.columns.size() == 2, "expected two columns");
    o.require(t.columns[0].entries.size() == 16 && t.columns[1].entries.size() == 16, "expected 16 rows per column");
    o.require(as_set(t.columns[0]) == fixture("mod2_mm_n18_m2_gap.txt"), "gap column differs from fixture");
    o.require(as_set(t.columns[1]) == fixture("mod2_mm_n18_m2_congruence.txt"),
              "congruence column differs from fixture");
    return o;
}

Outcome table_main_comp()
{
    Outcome o;
    const auto t = emit_table("thm_main_comp", 5, std::nullopt, true);
    o.require(t.columns.size() == 2, "expected two columns");
    o.require(t.columns[0].entries.size() == 12 && t.columns[1].entries.size() == 12, "expected 12 rows per column");
    o.require(as_set(t.columns[0]) == fixture("main_comp_n5_pattern.txt"), "pattern column differs from fixture");
    o.require(as_set(t.columns[1]) == fixture("main_comp_n5_colored.txt"), "colored column differs from fixture");
    return o;
}

Outcome censuses(const std::set<std::string> &names)
{
    Outcome o;
    const auto native = pick(verify_partition_theorems(), names);
    o.require(native.size() == names.size(), "native census check missing");
    o.require(native, "native");
    o.require(dsl({names.begin(), names.end()}), "registry");
    return o;
}

Outcome products()
{
    Outcome o;
    o.require(verify_product_theorems(61), "native");
    o.require(dsl({"Weighted_MM", "Weighted_MM_a0", "Weighted_MM_congruence", "Weighted_R", "Weighted_R2"}),
              "registry");
    return o;
}

Outcome relations()
{
    Outcome o;
    const SystemRegistry systems;
    std::vector<IdentityReport> native;
    std::vector<std::string> names;
    for (const auto &spec : builtin_relations()) {
        native.push_back(check_relation(spec, systems, 1, 10, 40));
        names.push_back(spec.name);
    }
    o.require(native.size() == 11, "expected eleven relations");
    o.require(native, "native");
    o.require(dsl(names), "registry");
    return o;
}

Outcome h_engine()
{
    Outcome o;
    o.require(verify_h_routes(15, 12), "native");
    o.require(verify_substitution_chain(30, 12), "native");
    SuiteConfig c;
    c.suite = "h";
    o.require(run_suite(c), "registry");
    return o;
}

Outcome sums()
{
    Outcome o;
    o.require(verify_sum_identities(25), "native");
    o.require(dsl({"eq_sum1", "eq_sum2", "eq_sum3"}), "registry");
    return o;
}

Outcome oracle()
{
    Outcome o;
    constexpr std::size_t order = 19;
    for (const TransitionSystem *ts : {&system_M(), &system_R(), &system_Rprime()}) {
        for (std::size_t color = 0; color < ts->num_colors(); ++color) {
            for (long level = 1; level <= 8; ++level) {
                const Symbol s{color, level};
                const QSeries dp = series_bounded(*ts, s, order);
                const QSeries brute = census(*ts, enumerate_bounded(*ts, s, order - 1), order);
                o.require(dp == brute, "native " + ts->name() + " " + to_string(*ts, {s}) + " differs");
            }
        }
    }
    SuiteConfig c;
    c.suite = "oracle";
    o.require(run_suite(c), "registry");
    return o;
}

Outcome determinism()
{
    Outcome o;
    std::ostringstream first;
    std::ostringstream second;
    write_jsonl(first, run_suite(SuiteConfig{}));
    write_jsonl(second, run_suite(SuiteConfig{}));
    o.require(!first.str().empty(), "empty report");
    o.require(first.str() == second.str(), "reports differ between runs");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string title;
        double limit_s;
        std::function<Outcome()> run;
    };
    constexpr double none = 0;
    const std::vector<Criterion> criteria{
        {1, "odd-part refinement table n=18 m=2 matches fixtures", 1, table_mod2},
        {2, "overpartition companion table n=5 matches fixtures", 1, table_main_comp},
        {3, "MacMahon triple census n<=40", 30,
         [] { return censuses({"MacMahon_gap_vs_frequency", "MacMahon_gap_vs_congruence"}); }},
        {4, "odd-part refinement census n<=30", 30, [] { return censuses({"Mod2_MM_refinement"}); }},
        {5, "Russell census n<=40 and (m,k) refinement n<=25", none,
         [] { return censuses({"Russell", "Russell_refinement"}); }},
        {6, "mod-3 refinement census n<=25", none, [] { return censuses({"Mod3_MM_refinement"}); }},
        {7, "companion census n<=30 and product census n<=25", none,
         [] { return censuses({"main_comp", "AU_product"}); }},
        {8, "product theorems to q^60", 60, products},
        {9, "recurrence and shift suite n=1..10 at q^40", none, relations},
        {10, "h routes n<=15, h' routes n<=12, substitution chain n<=12 at q^30", none, h_engine},
        {11, "finite sum identities 1<=n<=25", 60, sums},
        {12, "DP series equals brute force for level<=8 to q^18", none, oracle},
        {13, "two full-suite runs give byte-identical reports", none, determinism},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0) {
            std::ostringstream lim;
            lim << "took " << secs << " s, limit " << c.limit_s << " s";
            o.require(secs < c.limit_s, lim.str());
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << std::fixed
                  << std::setprecision(3) << secs << " s)";
        if (!o.ok) {
            std::cout << "  " << o.detail;
        }
        std::cout << std::endl;
    }
    return failures;
}
