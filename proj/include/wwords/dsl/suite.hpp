#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <wwords/dsl/evaluator.hpp>
#include <wwords/dsl/registry.hpp>
#include <wwords/identities/compare.hpp>
#include <wwords/report.hpp>

namespace wwords::dsl
{

struct SuiteConfig {
    // Overrides the truncation of every non-exact identity.
    std::optional<std::size_t> order;
    // Overrides the upper end of every range named n.
    std::optional<long> n_max;
    // "default" or "all" selects everything; otherwise a suite tag or theorem id.
    std::string suite = "default";
    // When set, only the identity of this name runs.
    std::string identity;
    bool with_timing = false;
};

inline void validate(const SuiteConfig &c)
{
    if (c.order && (*c.order < 1 || *c.order == QSeries::exact)) {
        throw ConfigError("truncation order N must be at least 1");
    }
    if (c.n_max && *c.n_max < 0) {
        throw ConfigError("n_max must be non-negative");
    }
}

inline bool selected(const IdentityEntry &e, const SuiteConfig &c)
{
    if (!c.identity.empty()) {
        return e.name == c.identity;
    }
    if (c.suite == "default" || c.suite == "all") {
        return true;
    }
    return e.theorem == c.suite || std::find(e.suites.begin(), e.suites.end(), c.suite) != e.suites.end();
}

inline IdentityReport run_identity(const IdentityEntry &e, Evaluator &ev, const SuiteConfig &c = {})
{
    IdentityReport r;
    r.name = e.name;
    r.theorem = e.theorem;
    const std::size_t order = e.truncation == QSeries::exact ? QSeries::exact : c.order.value_or(e.truncation);
    if (order != QSeries::exact) {
        r.truncation = order;
    }
    std::vector<IndexRange> ranges = e.ranges;
    for (auto &ir : ranges) {
        if (ir.name == "n" && c.n_max) {
            ir.hi = *c.n_max;
        }
        if (ir.hi < ir.lo) {
            throw ConfigError("identity " + e.name + ": range " + ir.name + " " + std::to_string(ir.lo) + ".."
                              + std::to_string(ir.hi) + " is empty");
        }
        r.parameters.emplace_back(ir.name, std::to_string(ir.lo) + ".." + std::to_string(ir.hi));
    }
    ReportTimer timer(r);
    guarded(r, [&] {
        std::vector<long> point;
        for (const auto &ir : ranges) {
            point.push_back(ir.lo);
        }
        while (true) {
            Bindings b;
            std::vector<std::pair<std::string, long>> shown;
            for (std::size_t i = 0; i < ranges.size(); ++i) {
                b[ranges[i].name] = point[i];
                shown.emplace_back(ranges[i].name, point[i]);
            }
            const QSeries lhs = ev.series(*e.lhs, b, order);
            const QSeries rhs = ev.series(*e.rhs, b, order);
            if (!compare_into(r, lhs, rhs, shown)) {
                return;
            }
            // advance the last index fastest
            std::size_t i = ranges.size();
            while (i > 0) {
                --i;
                if (point[i] < ranges[i].hi) {
                    ++point[i];
                    break;
                }
                point[i] = ranges[i].lo;
                if (i == 0) {
                    return;
                }
            }
            if (ranges.empty()) {
                return;
            }
        }
    });
    return r;
}

// Runs the selected identities in name order. Reports come back sorted by
// name whatever the registry order.
inline std::vector<IdentityReport> run_suite(const SuiteConfig &config,
                                             const std::vector<IdentityEntry> &registry = builtin_identities(),
                                             const SystemRegistry &systems = Evaluator::default_systems())
{
    validate(config);
    std::vector<const IdentityEntry *> chosen;
    for (const auto &e : registry) {
        if (selected(e, config)) {
            chosen.push_back(&e);
        }
    }
    if (chosen.empty()) {
        throw ConfigError(config.identity.empty() ? "no identity matches suite '" + config.suite + "'"
                                                  : "no identity named '" + config.identity + "'");
    }
    std::sort(chosen.begin(), chosen.end(), [](const auto *x, const auto *y) { return x->name < y->name; });
    Evaluator ev(systems);
    std::vector<IdentityReport> out;
    for (const auto *e : chosen) {
        out.push_back(run_identity(*e, ev, config));
    }
    return out;
}

inline bool all_passed(const std::vector<IdentityReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
}

// One JSON object per line, keys in a fixed order.
inline void write_jsonl(std::ostream &os, const std::vector<IdentityReport> &reports, bool with_timing = false)
{
    for (const auto &r : reports) {
        os << to_json(r, with_timing).dump() << '\n';
    }
}

// Aligned plain-text summary, one line per identity plus a witness line for
// each failure.
inline void write_summary(std::ostream &os, const std::vector<IdentityReport> &reports, bool with_timing = false)
{
    std::size_t name_w = 8;
    std::size_t thm_w = 7;
    for (const auto &r : reports) {
        name_w = std::max(name_w, r.name.size());
        thm_w = std::max(thm_w, r.theorem.size());
    }
    for (const auto &r : reports) {
        std::ostringstream params;
        for (const auto &[k, v] : r.parameters) {
            params << k << "=" << v << " ";
        }
        params << "N=" << (r.truncation ? std::to_string(*r.truncation) : "exact");
        os << std::left << std::setw(static_cast<int>(name_w)) << r.name << "  " << std::setw(static_cast<int>(thm_w))
           << r.theorem << "  " << verdict_name(r.verdict) << "  " << params.str();
        if (with_timing) {
            os << "  " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
        }
        os << '\n';
        if (r.witness) {
            os << "    witness:";
            for (const auto &[k, v] : r.witness->bindings) {
                os << " " << k << "=" << v;
            }
            if (r.witness->q_power) {
                os << " q^" << *r.witness->q_power << " lhs=" << r.witness->lhs << " rhs=" << r.witness->rhs;
            }
            os << " (" << r.witness->message << ")\n";
        }
    }
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
    os << passed << "/" << reports.size() << " identities passed\n";
}

} // namespace wwords::dsl
