#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include <wwords/errors.hpp>
#include <wwords/partitions/enumerate.hpp>

namespace wwords::dsl
{

struct TableColumn {
    std::string title;
    std::vector<std::string> entries;
};

// Side-by-side witness lists of a partition theorem at one size.
struct WitnessTable {
    std::string theorem;
    long n = 0;
    std::optional<long> m;
    std::vector<TableColumn> columns;
};

namespace detail
{

// Overlined sizes marked with a trailing apostrophe.
inline std::string ascii_string(const Overpartition &p)
{
    std::string s = "(";
    long last_overlined = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const long x = p.parts[i];
        s += (i ? "," : "") + std::to_string(x);
        if (p.is_overlined(x) && last_overlined != x) {
            s += "'";
            last_overlined = x;
        }
    }
    return s + ")";
}

inline std::vector<std::string> render(const std::vector<Partition> &ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(to_string(p));
    }
    return out;
}

inline std::vector<Partition> with_odd_count(std::vector<Partition> ps, long m)
{
    std::erase_if(ps, [m](const Partition &p) { return count_parts(p, 1, 2) != m; });
    return ps;
}

} // namespace detail

inline const std::vector<std::string> &tabulated_theorems()
{
    static const std::vector<std::string> names{"thm_MacMahon", "thm_Mod2_MM_refinement", "thm_Russell",
                                                "thm_main_comp"};
    return names;
}

// Witness lists for the theorems that have one. `m` is the odd-part count of
// the refinement and is required there only. Overlines are printed as U+0305
// unless `ascii`, which uses a trailing apostrophe.
inline WitnessTable emit_table(const std::string &theorem, long n, std::optional<long> m = std::nullopt,
                               bool ascii = false)
{
    const auto &known = tabulated_theorems();
    if (std::find(known.begin(), known.end(), theorem) == known.end()) {
        throw NoWitnessForm("theorem '" + theorem + "' has no witness-list form");
    }
    if (n < 0) {
        throw ConfigError("n must be non-negative");
    }
    WitnessTable t{theorem, n, std::nullopt, {}};
    if (theorem == "thm_MacMahon") {
        t.columns = {{"gap conditions", detail::render(enum_macmahon_gap(n))},
                     {"frequency conditions", detail::render(enum_frequency(n))},
                     {"congruence conditions", detail::render(enum_congruence(n, {0, 2, 3, 4}, 6))}};
    } else if (theorem == "thm_Mod2_MM_refinement") {
        if (!m) {
            throw ConfigError("thm_Mod2_MM_refinement needs the odd-part count m");
        }
        t.m = m;
        t.columns = {{"gap conditions", detail::render(detail::with_odd_count(enum_macmahon_gap(n), *m))},
                     {"congruence conditions",
                      detail::render(detail::with_odd_count(enum_congruence(n, {0, 2, 3, 4}, 6), *m))}};
    } else if (theorem == "thm_Russell") {
        t.columns = {{"gap conditions", detail::render(enum_russell_gap(n))},
                     {"congruence conditions", detail::render(enum_congruence(n, {0, 1, 3, 5}, 6))}};
    } else {
        auto over = enum_overpartition_companion(n);
        std::stable_sort(over.begin(), over.end(), [](const Overpartition &x, const Overpartition &y) {
            return x.parts != y.parts ? x.parts > y.parts : x.overlined > y.overlined;
        });
        auto colored = list_two_color(n, 2, 3);
        auto greens = [](const TwoColorPartition &p) {
            std::vector<bool> g;
            for (const auto &c : p) {
                g.push_back(c.green);
            }
            return g;
        };
        auto values = [](const TwoColorPartition &p) {
            std::vector<long> v;
            for (const auto &c : p) {
                v.push_back(c.value);
            }
            return v;
        };
        std::stable_sort(colored.begin(), colored.end(), [&](const auto &x, const auto &y) {
            const auto vx = values(x);
            const auto vy = values(y);
            if (vx != vy) {
                return vx > vy;
            }
            const auto gx = greens(x);
            const auto gy = greens(y);
            const auto cx = std::count(gx.begin(), gx.end(), true);
            const auto cy = std::count(gy.begin(), gy.end(), true);
            return cx != cy ? cx < cy : gx > gy;
        });
        TableColumn left{"pattern conditions", {}};
        for (const auto &o : over) {
            left.entries.push_back(ascii ? detail::ascii_string(o) : to_string(o));
        }
        TableColumn right{"colored conditions", {}};
        for (const auto &c : colored) {
            right.entries.push_back(to_string(c));
        }
        t.columns = {std::move(left), std::move(right)};
    }
    return t;
}

// Display width of a UTF-8 string, not counting combining overlines.
inline std::size_t display_width(const std::string &s)
{
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (c == 0xCC && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x85) {
            ++i;
            continue;
        }
        if ((c & 0xC0) != 0x80) {
            ++w;
        }
    }
    return w;
}

inline void write_table_text(std::ostream &os, const WitnessTable &t)
{
    os << t.theorem << "  n=" << t.n;
    if (t.m) {
        os << "  m=" << *t.m;
    }
    os << '\n';
    std::vector<std::size_t> widths;
    std::size_t rows = 0;
    for (const auto &c : t.columns) {
        std::size_t w = display_width(c.title + " (" + std::to_string(c.entries.size()) + ")");
        for (const auto &e : c.entries) {
            w = std::max(w, display_width(e));
        }
        widths.push_back(w);
        rows = std::max(rows, c.entries.size());
    }
    auto cell = [&](const std::string &s, std::size_t col, bool last) {
        os << s;
        if (!last) {
            os << std::string(widths[col] - display_width(s) + 3, ' ');
        }
    };
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        const auto &col = t.columns[c];
        cell(col.title + " (" + std::to_string(col.entries.size()) + ")", c, c + 1 == t.columns.size());
    }
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            const auto &col = t.columns[c];
            cell(r < col.entries.size() ? col.entries[r] : "", c, c + 1 == t.columns.size());
        }
        os << '\n';
    }
}

inline nlohmann::ordered_json to_json(const WitnessTable &t)
{
    nlohmann::ordered_json j;
    j["theorem"] = t.theorem;
    j["n"] = t.n;
    if (t.m) {
        j["m"] = *t.m;
    }
    j["columns"] = nlohmann::ordered_json::array();
    for (const auto &c : t.columns) {
        j["columns"].push_back({{"title", c.title}, {"count", c.entries.size()}, {"entries", c.entries}});
    }
    return j;
}

} // namespace wwords::dsl
