// Command-line front end: verify identities, enumerate partition families,
// print witness tables and list the registry.
//
// Exit status: 0 when every selected identity passes, 1 when one fails,
// 2 for usage and configuration errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <wwords/dsl/suite.hpp>
#include <wwords/dsl/table.hpp>

namespace
{

constexpr int exit_usage = 2;

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw wwords::ConfigError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string range_text(const std::vector<wwords::dsl::IndexRange> &ranges)
{
    std::string s;
    for (const auto &r : ranges) {
        s += (s.empty() ? "" : " ") + r.name + "=" + std::to_string(r.lo) + ".." + std::to_string(r.hi);
    }
    return s.empty() ? "-" : s;
}

std::string stats_text(const wwords::Partition &p)
{
    const auto s = wwords::PartitionStats::of(p);
    std::ostringstream os;
    os << "size=" << s.size << " parts=" << s.parts << " odd=" << s.odd << " mod3=" << s.mod3[0] << "/" << s.mod3[1]
       << "/" << s.mod3[2] << " mod6=";
    for (std::size_t i = 0; i < 6; ++i) {
        os << (i ? "/" : "") << s.mod6[i];
    }
    return os.str();
}

} // namespace

int main(int argc, char **argv)
{
    using namespace wwords;
    using namespace wwords::dsl;

    CLI::App app{"Weighted-words partition identity checker"};
    app.require_subcommand(1);

    std::string systems_file;
    std::string identities_file;
    app.add_option("--systems", systems_file, "Extra transition systems to load");
    app.add_option("--identities", identities_file, "Identity stanzas to use instead of the built-in registry");

    SuiteConfig config;
    std::size_t order = 0;
    long n_max = -1;
    std::string format = "jsonl";
    std::string output;
    auto *verify = app.add_subcommand("verify", "Check identities and report one record per identity");
    auto *sel = verify->add_option_group("selection");
    sel->add_option("--suite", config.suite, "Suite tag or theorem id (default: everything)");
    sel->add_option("--identity", config.identity, "A single identity by name");
    sel->require_option(0, 1);
    verify->add_option("--N", order, "Truncation order for non-exact identities");
    verify->add_option("--nmax", n_max, "Upper end of every n range");
    verify->add_option("--format", format, "jsonl or text")->check(CLI::IsMember({"jsonl", "text"}));
    verify->add_option("--output", output, "Write the report here instead of standard output");
    verify->add_flag("--timings", config.with_timing, "Include wall time per identity");

    std::string family;
    long size = 0;
    bool stats = false;
    auto *enumerate = app.add_subcommand("enumerate", "List the partitions of a family");
    enumerate->add_option("family", family, "Family name (see list)")->required();
    enumerate->add_option("--n", size, "Size")->required();
    enumerate->add_flag("--stats", stats, "Print statistics per partition");

    std::string theorem;
    long m = -1;
    bool ascii = false;
    std::string table_format = "text";
    auto *table = app.add_subcommand("table", "Print the witness lists of a theorem");
    table->add_option("theorem", theorem, "Theorem id")->required();
    table->add_option("--n", size, "Size")->required();
    table->add_option("--m", m, "Odd-part count for the refinement");
    table->add_flag("--ascii", ascii, "Mark overlines with an apostrophe");
    table->add_option("--format", table_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto *list = app.add_subcommand("list", "Show the identity registry, families and tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : exit_usage;
    }

    try {
        SystemRegistry systems;
        if (!systems_file.empty()) {
            systems.load(read_file(systems_file));
        }
        const std::vector<IdentityEntry> registry =
            identities_file.empty() ? builtin_identities() : parse_identities(read_file(identities_file));

        if (*verify) {
            if (verify->count("--N") > 0) {
                config.order = order;
            }
            if (verify->count("--nmax") > 0) {
                config.n_max = n_max;
            }
            const auto reports = run_suite(config, registry, systems);
            std::ofstream file;
            if (!output.empty()) {
                file.open(output);
                if (!file) {
                    throw ConfigError("cannot write " + output);
                }
            }
            std::ostream &os = output.empty() ? std::cout : file;
            if (format == "jsonl") {
                write_jsonl(os, reports, config.with_timing);
            } else {
                write_summary(os, reports, config.with_timing);
            }
            return all_passed(reports) ? 0 : 1;
        }
        if (*enumerate) {
            const Family *f = find_family(family);
            if (f == nullptr) {
                throw ConfigError("unknown family '" + family + "'");
            }
            if (size < 0) {
                throw ConfigError("n must be non-negative");
            }
            std::size_t count = 0;
            if (f->partitions) {
                for (const auto &p : f->partitions(size)) {
                    std::cout << to_string(p);
                    if (stats) {
                        std::cout << "  " << stats_text(p);
                    }
                    std::cout << '\n';
                    ++count;
                }
            } else {
                for (const auto &p : f->overpartitions(size)) {
                    std::cout << to_string(p);
                    if (stats) {
                        std::cout << "  " << stats_text(p.parts) << " overlined=" << p.overlined.size();
                    }
                    std::cout << '\n';
                    ++count;
                }
            }
            std::cout << "# count " << count << '\n';
            return 0;
        }
        if (*table) {
            const auto t = emit_table(theorem, size, m >= 0 ? std::optional<long>(m) : std::nullopt,
                                      ascii || table_format == "json");
            if (table_format == "json") {
                std::cout << to_json(t).dump() << '\n';
            } else {
                write_table_text(std::cout, t);
            }
            return 0;
        }
        if (*list) {
            std::cout << "identities\n";
            for (const auto &e : registry) {
                std::string suites;
                for (const auto &s : e.suites) {
                    suites += (suites.empty() ? "" : ",") + s;
                }
                std::cout << "  " << e.name << "  theorem=" << e.theorem << "  suites=" << (suites.empty() ? "-" : suites)
                          << "  N="
                          << (e.truncation == QSeries::exact ? std::string("exact") : std::to_string(e.truncation))
                          << "  " << range_text(e.ranges) << '\n';
            }
            std::cout << "families\n";
            for (const auto &f : families()) {
                std::cout << "  " << f.name << '\n';
            }
            std::cout << "tables\n";
            for (const auto &t : tabulated_theorems()) {
                std::cout << "  " << t << '\n';
            }
            std::cout << "systems\n";
            for (const auto &s : systems.names()) {
                std::cout << "  " << s << '\n';
            }
            return 0;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
