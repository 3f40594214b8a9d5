#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wwords/errors.hpp>
#include <wwords/qseries/monomial.hpp>

namespace wwords
{

// A part x_level. `color` indexes the owning system's color list.
struct Symbol {
    std::size_t color = 0;
    long level = 0;

    friend bool operator==(const Symbol &, const Symbol &) = default;
    // level-major, color-minor
    friend std::strong_ordering operator<=>(const Symbol &x, const Symbol &y)
    {
        if (auto c = x.level <=> y.level; c != 0) {
            return c;
        }
        return x.color <=> y.color;
    }
};

// Colors, descent matrix and excluded symbols. Each color is one of the
// markers a, b, c and a part x_i weighs x q^i.
class TransitionSystem
{
public:
    TransitionSystem(std::string name, std::vector<Marker> colors, std::vector<std::vector<long>> matrix,
                     std::vector<Symbol> excluded = {}, bool validated = false)
        : name_(std::move(name)), colors_(std::move(colors)), matrix_(std::move(matrix)),
          excluded_(std::move(excluded)), validated_(validated)
    {
        const auto k = colors_.size();
        if (k == 0) {
            throw SystemFormatError("system " + name_ + " has no colors");
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                if (colors_[i] == colors_[j]) {
                    throw SystemFormatError(std::string("color ") + marker_name(colors_[i]) + " listed twice");
                }
            }
        }
        if (matrix_.size() != k) {
            throw SystemFormatError("matrix of " + name_ + " must have " + std::to_string(k) + " rows");
        }
        for (const auto &row : matrix_) {
            if (row.size() != k) {
                throw SystemFormatError("matrix of " + name_ + " must have " + std::to_string(k) + " columns");
            }
            for (long v : row) {
                if (v < 0) {
                    throw SystemFormatError("matrix entries must be non-negative");
                }
            }
        }
        for (const auto &s : excluded_) {
            if (s.color >= k || s.level < 1) {
                throw SystemFormatError("excluded symbol out of range");
            }
        }
        std::sort(excluded_.begin(), excluded_.end());
        excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
    }

    const std::string &name() const { return name_; }
    std::size_t num_colors() const { return colors_.size(); }
    const std::vector<Marker> &colors() const { return colors_; }
    Marker marker(std::size_t color) const { return colors_.at(color); }
    const std::vector<std::vector<long>> &matrix() const { return matrix_; }
    const std::vector<Symbol> &excluded_symbols() const { return excluded_; }

    // Minimum level drop from a part of color `from` to the next part of color `to`.
    long descent(std::size_t from, std::size_t to) const { return matrix_[from][to]; }

    long max_descent() const
    {
        long m = 0;
        for (const auto &row : matrix_) {
            for (long v : row) {
                m = std::max(m, v);
            }
        }
        return m;
    }

    bool is_excluded(const Symbol &s) const { return std::binary_search(excluded_.begin(), excluded_.end(), s); }

    // True for the shipped systems whose adjacency reading has been checked
    // against every printed initial value and recurrence.
    bool validated() const { return validated_; }

    std::size_t color_index(Marker m) const
    {
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (colors_[i] == m) {
                return i;
            }
        }
        throw UnknownColor(std::string("color ") + marker_name(m) + " is not part of system " + name_);
    }

    std::size_t color_index(char ch) const
    {
        const auto m = marker_from_name(ch);
        if (!m) {
            throw UnknownColor(std::string("color ") + ch + " is not part of system " + name_);
        }
        return color_index(*m);
    }

    // "a3" or "a_3"
    Symbol symbol(std::string_view text) const
    {
        if (text.size() < 2) {
            throw SystemFormatError("bad symbol '" + std::string(text) + "'");
        }
        const std::size_t color = color_index(text[0]);
        std::string_view digits = text.substr(text[1] == '_' ? 2 : 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
            throw SystemFormatError("bad symbol '" + std::string(text) + "'");
        }
        return Symbol{color, std::stol(std::string(digits))};
    }

    std::string symbol_name(const Symbol &s) const
    {
        return std::string(1, marker_name(colors_.at(s.color))) + "_" + std::to_string(s.level);
    }

    // The largest symbol of the given level.
    Symbol top_of_level(long level) const { return Symbol{colors_.size() - 1, level}; }

private:
    std::string name_;
    std::vector<Marker> colors_;
    std::vector<std::vector<long>> matrix_;
    std::vector<Symbol> excluded_;
    bool validated_ = false;
};

inline const TransitionSystem &system_M()
{
    static const TransitionSystem ts("M", {Marker::a, Marker::b}, {{0, 2}, {1, 0}}, {Symbol{0, 1}}, true);
    return ts;
}

inline const TransitionSystem &system_R()
{
    static const TransitionSystem ts("R", {Marker::a, Marker::b, Marker::c}, {{0, 1, 1}, {1, 0, 2}, {1, 0, 0}},
                                     {Symbol{1, 1}}, true);
    return ts;
}

inline const TransitionSystem &system_Rprime()
{
    static const TransitionSystem ts("Rprime", {Marker::a, Marker::b, Marker::c}, {{0, 1, 2}, {1, 0, 1}, {0, 1, 0}},
                                     {Symbol{0, 1}}, true);
    return ts;
}

} // namespace wwords
