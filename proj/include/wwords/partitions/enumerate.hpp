#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <wwords/partitions/partition.hpp>
#include <wwords/qseries/marker_poly.hpp>

namespace wwords
{

namespace detail
{

// Depth-first generation of partitions of n, largest part first. `extend`
// decides whether `next` may follow the current prefix; `accept` filters
// complete partitions.
template <class Extend, class Accept>
void descend(long n, const Extend &extend, const Accept &accept, std::vector<Partition> &out)
{
    if (n < 0) {
        throw std::invalid_argument("partition size must be non-negative");
    }
    Partition cur;
    std::function<void(long, long)> rec = [&](long room, long cap) {
        if (room == 0) {
            if (accept(cur)) {
                out.push_back(cur);
            }
            return;
        }
        for (long next = std::min(room, cap); next >= 1; --next) {
            if (!extend(cur, next)) {
                continue;
            }
            cur.push_back(next);
            rec(room - next, next);
            cur.pop_back();
        }
    };
    rec(n, n);
}

inline bool always(const Partition &) { return true; }

} // namespace detail

inline std::vector<Partition> enum_all(long n)
{
    std::vector<Partition> out;
    detail::descend(n, [](const Partition &, long) { return true; }, detail::always, out);
    return out;
}

// No two parts x and x + 1, all parts >= 2.
inline std::vector<Partition> enum_macmahon_gap(long n)
{
    std::vector<Partition> out;
    detail::descend(
        n,
        [](const Partition &cur, long next) {
            return next >= 2 && (cur.empty() || next == cur.back() || next <= cur.back() - 2);
        },
        detail::always, out);
    return out;
}

// Every occurring size has multiplicity >= 2.
inline std::vector<Partition> enum_frequency(long n)
{
    auto last_repeated = [](const Partition &p) { return p.size() >= 2 && p[p.size() - 2] == p.back(); };
    std::vector<Partition> out;
    detail::descend(
        n,
        [&](const Partition &cur, long next) { return cur.empty() || next == cur.back() || last_repeated(cur); },
        [&](const Partition &p) { return p.empty() || last_repeated(p); }, out);
    return out;
}

// Every part is congruent to one of `residues` modulo `modulus`.
inline std::vector<Partition> enum_congruence(long n, const std::vector<long> &residues, long modulus)
{
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    for (long r : residues) {
        if (r < 0 || r >= modulus) {
            throw std::invalid_argument("residues must lie in 0..modulus-1");
        }
    }
    std::vector<Partition> out;
    detail::descend(
        n,
        [&](const Partition &, long next) {
            return std::find(residues.begin(), residues.end(), next % modulus) != residues.end();
        },
        detail::always, out);
    return out;
}

// No 2s; adjacent parts differing by 1 have sum not divisible by 3, adjacent
// parts differing by 2 have sum divisible by 3.
inline std::vector<Partition> enum_russell_gap(long n)
{
    std::vector<Partition> out;
    detail::descend(
        n,
        [](const Partition &cur, long next) {
            if (next == 2) {
                return false;
            }
            if (cur.empty()) {
                return true;
            }
            const long d = cur.back() - next;
            const long s = cur.back() + next;
            if (d == 1) {
                return s % 3 != 0;
            }
            if (d == 2) {
                return s % 3 == 0;
            }
            return true;
        },
        detail::always, out);
    return out;
}

namespace detail
{

// Every overpartition of n satisfying `keep`.
template <class Keep>
std::vector<Overpartition> overpartitions(long n, const Keep &keep)
{
    std::vector<Overpartition> out;
    for (const auto &p : enum_all(n)) {
        std::vector<long> sizes;
        for (long x : p) {
            if (sizes.empty() || sizes.back() != x) {
                sizes.push_back(x);
            }
        }
        const std::uint64_t subsets = std::uint64_t{1} << sizes.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            Overpartition o{p, {}};
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (mask >> i & 1U) {
                    o.overlined.push_back(sizes[i]);
                }
            }
            if (keep(o)) {
                out.push_back(std::move(o));
            }
        }
    }
    return out;
}

} // namespace detail

inline std::vector<Overpartition> enum_all_overpartitions(long n)
{
    return detail::overpartitions(n, [](const Overpartition &) { return true; });
}

// A 1, if present, is overlined; an overlined k with k + 1 present forces
// k + 1 to be overlined.
inline bool is_companion_overpartition(const Overpartition &o)
{
    if (o.contains(1) && !o.is_overlined(1)) {
        return false;
    }
    for (long k : o.overlined) {
        if (o.contains(k + 1) && !o.is_overlined(k + 1)) {
            return false;
        }
    }
    return true;
}

inline std::vector<Overpartition> enum_overpartition_companion(long n)
{
    return detail::overpartitions(n, is_companion_overpartition);
}

// The two short patterns: overlined k with overlined k + 1, and overlined k
// with k + 1 present and k + 2 overlined.
inline bool avoids_short_au_patterns(const Overpartition &o)
{
    for (long k : o.overlined) {
        if (o.is_overlined(k + 1)) {
            return false;
        }
        if (o.contains(k + 1) && o.is_overlined(k + 2)) {
            return false;
        }
    }
    return true;
}

// No pattern (overlined k + j, k + j - 1, ..., k + 1, overlined k) for any
// j >= 1: between two overlined sizes some size must be missing. The j = 1
// and j = 2 cases are the short patterns above.
inline bool is_au_overpartition(const Overpartition &o)
{
    // o.overlined is decreasing
    for (std::size_t i = 0; i + 1 < o.overlined.size(); ++i) {
        const long hi = o.overlined[i];
        const long lo = o.overlined[i + 1];
        bool gap = false;
        for (long k = lo + 1; k < hi && !gap; ++k) {
            gap = !o.contains(k);
        }
        if (!gap) {
            return false;
        }
    }
    return true;
}

inline std::vector<Overpartition> enum_overpartition_au(long n)
{
    return detail::overpartitions(n, is_au_overpartition);
}

// Number of partitions of n into red parts and green parts, the green parts
// congruent to green_residue modulo green_modulus. Computed as the q^n
// coefficient of 1/((q;q)_inf (q^r;q^m)_inf), one factor at a time.
inline BigInt enum_two_color(long n, long green_residue, long green_modulus)
{
    if (n < 0) {
        throw std::invalid_argument("partition size must be non-negative");
    }
    if (green_modulus < 1 || green_residue < 0 || green_residue >= green_modulus) {
        throw std::invalid_argument("green residue must lie in 0..modulus-1");
    }
    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<BigInt> c(len, BigInt(0));
    c[0] = 1;
    auto absorb = [&](long part) {
        for (auto i = static_cast<std::size_t>(part); i < len; ++i) {
            c[i] += c[i - static_cast<std::size_t>(part)];
        }
    };
    for (long part = 1; part <= n; ++part) {
        absorb(part);
        if (part % green_modulus == green_residue) {
            absorb(part);
        }
    }
    return c[static_cast<std::size_t>(n)];
}

// The witness list behind enum_two_color. Parts are listed by decreasing
// size, green before red at equal size.
inline std::vector<TwoColorPartition> list_two_color(long n, long green_residue, long green_modulus)
{
    if (green_modulus < 1 || green_residue < 0 || green_residue >= green_modulus) {
        throw std::invalid_argument("green residue must lie in 0..modulus-1");
    }
    std::vector<TwoColorPartition> out;
    for (long g = 0; g <= n; ++g) {
        std::vector<long> green_res{green_residue};
        for (const auto &greens : enum_congruence(g, green_res, green_modulus)) {
            for (const auto &reds : enum_all(n - g)) {
                TwoColorPartition p;
                for (long x : greens) {
                    p.push_back({x, true});
                }
                for (long x : reds) {
                    p.push_back({x, false});
                }
                std::sort(p.begin(), p.end(), [](const ColoredPart &x, const ColoredPart &y) {
                    return x.value != y.value ? x.value > y.value : x.green && !y.green;
                });
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

} // namespace wwords
