#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <wwords/colored/transition_system.hpp>
#include <wwords/qseries/series.hpp>

namespace wwords
{

// Parts listed largest first.
using ColoredPartition = std::vector<Symbol>;

inline long weight(const ColoredPartition &p)
{
    long w = 0;
    for (const auto &s : p) {
        w += s.level;
    }
    return w;
}

inline Monomial marker_degree(const TransitionSystem &ts, const ColoredPartition &p)
{
    Monomial m;
    for (const auto &s : p) {
        m *= Monomial::of(ts.marker(s.color));
    }
    return m;
}

inline bool is_valid(const TransitionSystem &ts, const ColoredPartition &parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].color >= ts.num_colors()) {
            throw UnknownColor("color index " + std::to_string(parts[i].color) + " is not part of system "
                               + ts.name());
        }
        if (parts[i].level < 1) {
            throw std::invalid_argument("part levels must be positive");
        }
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw std::invalid_argument("parts must be listed in weakly decreasing symbol order");
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (ts.is_excluded(parts[i])) {
            return false;
        }
        if (i > 0) {
            const auto &x = parts[i - 1];
            const auto &y = parts[i];
            if (y.level > x.level - ts.descent(x.color, y.color)) {
                return false;
            }
        }
    }
    return true;
}

// Every valid partition with parts <= bound and weight <= max_weight,
// including the empty one. Exhaustive search; this is the oracle for the
// generating-series recursion.
inline std::vector<ColoredPartition> enumerate_bounded(const TransitionSystem &ts, const Symbol &bound,
                                                       long max_weight)
{
    std::vector<ColoredPartition> out;
    ColoredPartition cur;
    // Extends `cur` by parts <= top (and legal after cur.back()).
    std::function<void(const Symbol &, long)> extend = [&](const Symbol &top, long room) {
        out.push_back(cur);
        for (long level = std::min(top.level, room); level >= 1; --level) {
            for (std::size_t c = ts.num_colors(); c-- > 0;) {
                const Symbol s{c, level};
                if (top < s || ts.is_excluded(s)) {
                    continue;
                }
                if (!cur.empty()) {
                    const auto &x = cur.back();
                    if (level > x.level - ts.descent(x.color, c)) {
                        continue;
                    }
                }
                cur.push_back(s);
                extend(s, room - level);
                cur.pop_back();
            }
        }
    };
    extend(bound, max_weight);
    return out;
}

// Weight/marker census of a list of partitions, truncated at q^order.
inline QSeries census(const TransitionSystem &ts, const std::vector<ColoredPartition> &parts, std::size_t order)
{
    QSeries s = QSeries::constant(0, order);
    for (const auto &p : parts) {
        const auto w = static_cast<std::size_t>(weight(p));
        if (w < order) {
            s.add_to(w, MarkerPoly(marker_degree(ts, p), 1));
        }
    }
    return s;
}

inline std::string to_string(const TransitionSystem &ts, const ColoredPartition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += ts.symbol_name(p[i]);
    }
    return s + ")";
}

// Whitespace or comma separated symbols, e.g. "b2, a1"; parentheses are ignored.
inline ColoredPartition parse_colored_partition(const TransitionSystem &ts, std::string_view text)
{
    std::string cleaned(text);
    for (auto &ch : cleaned) {
        if (ch == ',' || ch == '(' || ch == ')') {
            ch = ' ';
        }
    }
    std::istringstream in(cleaned);
    ColoredPartition p;
    std::string tok;
    while (in >> tok) {
        p.push_back(ts.symbol(tok));
    }
    return p;
}

} // namespace wwords
