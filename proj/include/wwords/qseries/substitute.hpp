#pragma once

#include <array>
#include <optional>
#include <string>

#include <wwords/qseries/series.hpp>

namespace wwords
{

// Image of one marker under a substitution: either 0, or monomial * q^q_shift
// where the shift is measured in the target q (after q -> q^k).
struct MarkerImage {
    bool zero = false;
    Monomial monomial{};
    long q_shift = 0;

    static MarkerImage identity(Marker m) { return {false, Monomial::of(m), 0}; }
    static MarkerImage one() { return {}; }
    static MarkerImage vanish() { return {true, {}, 0}; }
    static MarkerImage of(const Monomial &m, long shift = 0) { return {false, m, shift}; }

    friend bool operator==(const MarkerImage &, const MarkerImage &) = default;
};

// (a, b, c, q) -> (image_a, image_b, image_c, q^q_power).
//
// `valuation[x]` is the least power of q that accompanies every occurrence of
// marker x in the input (1 for colored generating functions, where a part
// x_i weighs x q^i). It lets the substitution bound which input coefficients
// can still reach the output when some marker carries a negative q-shift.
struct Substitution {
    std::array<MarkerImage, 3> images{MarkerImage::identity(Marker::a), MarkerImage::identity(Marker::b),
                                      MarkerImage::identity(Marker::c)};
    long q_power = 1;
    std::array<long, 3> valuation{1, 1, 1};

    Substitution &map(Marker m, const MarkerImage &img)
    {
        images[static_cast<int>(m)] = img;
        return *this;
    }

    const MarkerImage &image(Marker m) const { return images[static_cast<int>(m)]; }

    bool is_identity() const
    {
        return q_power == 1 && images[0] == MarkerImage::identity(Marker::a)
               && images[1] == MarkerImage::identity(Marker::b) && images[2] == MarkerImage::identity(Marker::c);
    }

    bool has_negative_shift() const
    {
        for (const auto &img : images) {
            if (!img.zero && img.q_shift < 0) {
                return true;
            }
        }
        return false;
    }

    // Worst-case exponent contraction, as the fraction num/den with
    // t >= (num/den) * e for every input term of q-degree e.
    std::pair<long, long> contraction() const
    {
        if (q_power < 1) {
            throw NegativeExponent("q must map to a positive power of q");
        }
        long p = 0;
        long v = 1;
        for (std::size_t x = 0; x < 3; ++x) {
            const auto &img = images[x];
            if (img.zero || img.q_shift >= 0) {
                continue;
            }
            if (valuation[x] < 1) {
                throw InsufficientTruncation("marker valuation must be positive");
            }
            // keep the larger of p/v and (-shift)/valuation
            if (-img.q_shift * v > p * valuation[x]) {
                p = -img.q_shift;
                v = valuation[x];
            }
        }
        const long num = q_power * v - p;
        if (num <= 0) {
            throw NegativeExponent("substitution does not map truncated series to power series");
        }
        return {num, v};
    }

    std::size_t required_input_order(std::size_t n_out) const
    {
        const auto [num, den] = contraction();
        return static_cast<std::size_t>((static_cast<long>(n_out) * den + num - 1) / num);
    }

    std::size_t max_output_order(std::size_t n_in) const
    {
        if (n_in == QSeries::exact) {
            return QSeries::exact;
        }
        const auto [num, den] = contraction();
        return static_cast<std::size_t>(static_cast<long>(n_in) * num / den);
    }
};

// Rewrites every term a^i b^j c^k q^e of s under sub. Truncated inputs must be
// long enough that no lost coefficient could land below the output order;
// this is checked rather than assumed.
inline QSeries substitute(const QSeries &s, const Substitution &sub, std::optional<std::size_t> n_out = std::nullopt)
{
    std::size_t out_order = QSeries::exact;
    if (!s.is_exact()) {
        const std::size_t best = sub.max_output_order(s.order());
        if (n_out) {
            const std::size_t need = sub.required_input_order(*n_out);
            if (s.order() < need) {
                throw InsufficientTruncation("output order " + std::to_string(*n_out) + " needs input order "
                                             + std::to_string(need) + ", have " + std::to_string(s.order()));
            }
            out_order = *n_out;
        } else {
            out_order = best;
        }
    } else if (n_out) {
        out_order = *n_out;
    }

    const bool check_valuation = sub.has_negative_shift() && !s.is_exact();
    std::vector<std::vector<MarkerPoly::term_type>> buckets;
    for (std::size_t e = 0; e < s.stored_size(); ++e) {
        for (const auto &[mono, coef] : s[e].terms()) {
            long t = sub.q_power * static_cast<long>(e);
            long weight = 0;
            Monomial image{};
            bool vanishes = false;
            for (auto x : all_markers) {
                const auto k = static_cast<long>(mono.exponent(x));
                if (k == 0) {
                    continue;
                }
                const auto &img = sub.image(x);
                if (img.zero) {
                    vanishes = true;
                    break;
                }
                image *= img.monomial.pow(static_cast<std::uint64_t>(k));
                t += img.q_shift * k;
                weight += sub.valuation[static_cast<int>(x)] * k;
            }
            if (check_valuation && weight > static_cast<long>(e)) {
                throw InsufficientTruncation("term " + mono.to_string() + "*q^" + std::to_string(e)
                                             + " violates the declared marker valuation");
            }
            if (vanishes) {
                continue;
            }
            if (t < 0) {
                throw NegativeExponent("term " + mono.to_string() + "*q^" + std::to_string(e) + " maps to q^"
                                       + std::to_string(t));
            }
            const auto ut = static_cast<std::size_t>(t);
            if (ut >= out_order) {
                continue;
            }
            if (ut >= buckets.size()) {
                buckets.resize(ut + 1);
            }
            buckets[ut].emplace_back(image, coef);
        }
    }
    std::vector<MarkerPoly> coeffs;
    coeffs.reserve(buckets.size());
    for (auto &b : buckets) {
        coeffs.push_back(MarkerPoly::from_terms(std::move(b)));
    }
    return QSeries::from_coefficients(std::move(coeffs), out_order);
}

} // namespace wwords
