#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wwords
{

// Parts in weakly decreasing order.
using Partition = std::vector<long>;

inline long size_of(const Partition &p)
{
    long s = 0;
    for (long x : p) {
        s += x;
    }
    return s;
}

inline long count_parts(const Partition &p, long residue, long modulus)
{
    return static_cast<long>(
        std::count_if(p.begin(), p.end(), [&](long x) { return ((x % modulus) + modulus) % modulus == residue; }));
}

struct PartitionStats {
    long size = 0;
    long parts = 0;
    long odd = 0;
    std::array<long, 3> mod3{};
    std::array<long, 6> mod6{};

    static PartitionStats of(const Partition &p)
    {
        PartitionStats s;
        for (long x : p) {
            s.size += x;
            ++s.parts;
            s.odd += x % 2;
            ++s.mod3[static_cast<std::size_t>(x % 3)];
            ++s.mod6[static_cast<std::size_t>(x % 6)];
        }
        return s;
    }
};

// A partition plus the set of overlined sizes; each size carries at most
// one overline, placed on its first occurrence.
struct Overpartition {
    Partition parts;
    std::vector<long> overlined; // decreasing, each a member of parts

    bool is_overlined(long k) const { return std::find(overlined.begin(), overlined.end(), k) != overlined.end(); }
    bool contains(long k) const { return std::find(parts.begin(), parts.end(), k) != parts.end(); }

    friend bool operator==(const Overpartition &, const Overpartition &) = default;
    friend auto operator<=>(const Overpartition &, const Overpartition &) = default;
};

inline long size_of(const Overpartition &p)
{
    return size_of(p.parts);
}

// A part of a two-colored partition. Green sorts before red at equal size.
struct ColoredPart {
    long value = 0;
    bool green = false;

    friend bool operator==(const ColoredPart &, const ColoredPart &) = default;
    friend auto operator<=>(const ColoredPart &, const ColoredPart &) = default;
};

using TwoColorPartition = std::vector<ColoredPart>;

inline std::string to_string(const Partition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s + ")";
}

// Overlines are a combining U+0305 after every digit.
inline std::string to_string(const Overpartition &p)
{
    std::string s = "(";
    long last_overlined = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const long x = p.parts[i];
        if (i) {
            s += ",";
        }
        if (p.is_overlined(x) && last_overlined != x) {
            for (char d : std::to_string(x)) {
                s += d;
                s += "̅";
            }
            last_overlined = x;
        } else {
            s += std::to_string(x);
        }
    }
    return s + ")";
}

inline std::string to_string(const TwoColorPartition &p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p[i].value) + (p[i].green ? "_g" : "_r");
    }
    return s + ")";
}

namespace detail
{

// Splits "(x,y,z)" into its comma separated fields; "()" has none.
inline std::vector<std::string> tuple_fields(std::string_view text)
{
    std::string t;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') {
            t += ch;
        }
    }
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
        throw std::invalid_argument("expected a parenthesized list, got '" + std::string(text) + "'");
    }
    t = t.substr(1, t.size() - 2);
    std::vector<std::string> fields;
    if (t.empty()) {
        return fields;
    }
    std::size_t start = 0;
    for (;;) {
        const auto comma = t.find(',', start);
        fields.push_back(t.substr(start, comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

inline long positive_part(const std::string &digits, std::string_view context)
{
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad part '" + digits + "' in '" + std::string(context) + "'");
    }
    const long v = std::stol(digits);
    if (v < 1) {
        throw std::invalid_argument("parts must be positive in '" + std::string(context) + "'");
    }
    return v;
}

inline void require_decreasing(const Partition &p, std::string_view context)
{
    if (!std::is_sorted(p.rbegin(), p.rend())) {
        throw std::invalid_argument("parts must be weakly decreasing in '" + std::string(context) + "'");
    }
}

} // namespace detail

// "(15,3)"
inline Partition parse_partition(std::string_view text)
{
    Partition p;
    for (const auto &f : detail::tuple_fields(text)) {
        p.push_back(detail::positive_part(f, text));
    }
    detail::require_decreasing(p, text);
    return p;
}

// "(3',2,1')", or with a combining overline after the digits.
inline Overpartition parse_overpartition(std::string_view text)
{
    static const std::string combining = "̅";
    Overpartition o;
    for (auto f : detail::tuple_fields(text)) {
        bool over = false;
        if (!f.empty() && f.back() == '\'') {
            over = true;
            f.pop_back();
        }
        for (auto pos = f.find(combining); pos != std::string::npos; pos = f.find(combining)) {
            over = true;
            f.erase(pos, combining.size());
        }
        const long v = detail::positive_part(f, text);
        if (over) {
            if (o.is_overlined(v)) {
                throw std::invalid_argument("size " + f + " overlined twice in '" + std::string(text) + "'");
            }
            o.overlined.push_back(v);
        }
        o.parts.push_back(v);
    }
    detail::require_decreasing(o.parts, text);
    return o;
}

// "(3_r,2_g)"
inline TwoColorPartition parse_two_color(std::string_view text)
{
    TwoColorPartition p;
    for (const auto &f : detail::tuple_fields(text)) {
        if (f.size() < 3 || f[f.size() - 2] != '_' || (f.back() != 'r' && f.back() != 'g')) {
            throw std::invalid_argument("bad colored part '" + f + "' in '" + std::string(text) + "'");
        }
        p.push_back({detail::positive_part(f.substr(0, f.size() - 2), text), f.back() == 'g'});
    }
    return p;
}

} // namespace wwords
