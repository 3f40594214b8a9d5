#pragma once

#include <array>
#include <vector>

#include <wwords/colored/transition_system.hpp>
#include <wwords/qseries/series.hpp>
#include <wwords/qseries/substitute.hpp>

namespace wwords
{

// Per-color part weights: a part of color x and level i weighs
// weights[x].monomial * q^(i + weights[x].q_shift), or nothing if zero.
using ColorWeights = std::vector<MarkerImage>;

inline ColorWeights default_weights(const TransitionSystem &ts)
{
    ColorWeights w;
    for (auto m : ts.colors()) {
        w.push_back(MarkerImage::identity(m));
    }
    return w;
}

// Weights obtained by substituting images for the markers a, b, c (q fixed).
inline ColorWeights weights_under(const TransitionSystem &ts, const std::array<MarkerImage, 3> &images)
{
    ColorWeights w;
    for (auto m : ts.colors()) {
        w.push_back(images[static_cast<int>(m)]);
    }
    return w;
}

// Generating series of valid partitions with every part <= bound, truncated
// at q^order.
//
// F(y_m) is the series of partitions whose largest part is exactly y_m. A
// successor z_j of y_m satisfies j <= m - matrix[y][z] and z_j <= y_m, so the
// admissible j of each color form a prefix 1..lim_z and
//   F(y_m) = r * (1 + sum_z P_z[lim_z]),   P_z[j] = F(z_1) + ... + F(z_j),
// with r = w/(1-w) when y may repeat (matrix[y][y] = 0) and r = w otherwise.
// Only the last max_descent + 1 prefix levels are kept alive.
inline QSeries series_bounded(const TransitionSystem &ts, const Symbol &bound, std::size_t order,
                              const ColorWeights &weights)
{
    const std::size_t k = ts.num_colors();
    if (weights.size() != k) {
        throw std::invalid_argument("one weight per color is required");
    }
    for (const auto &w : weights) {
        if (!w.zero && w.q_shift < 0) {
            throw NegativeExponent("part weights must not lower the q-exponent");
        }
    }
    if (bound.color >= k) {
        throw UnknownColor("bound symbol color is not part of system " + ts.name());
    }

    const QSeries one = QSeries::constant(1, order);
    if (bound.level < 1) {
        return one;
    }
    const auto levels = static_cast<std::size_t>(bound.level);
    const auto keep = static_cast<std::size_t>(ts.max_descent()) + 2;

    // prefix[z][j] = P_z[j]; entry 0 is the zero series.
    std::vector<std::vector<QSeries>> prefix(k, std::vector<QSeries>(levels + 1, QSeries(order)));
    for (std::size_t m = 1; m <= levels; ++m) {
        for (std::size_t y = 0; y < k; ++y) {
            const Symbol sym{y, static_cast<long>(m)};
            if (bound < sym) {
                break;
            }
            const auto &w = weights[y];
            const long e = static_cast<long>(m) + w.q_shift;
            QSeries f(order);
            if (!w.zero && !ts.is_excluded(sym) && static_cast<std::size_t>(e) < order) {
                QSeries s = one;
                for (std::size_t z = 0; z < k; ++z) {
                    long lim = static_cast<long>(m) - ts.descent(y, z);
                    lim = std::min(lim, z < y ? static_cast<long>(m) : static_cast<long>(m) - 1);
                    if (lim >= 1) {
                        s += prefix[z][static_cast<std::size_t>(lim)];
                    }
                }
                const QTerm t{1, w.monomial, e};
                f = s.times(t);
                if (ts.descent(y, y) == 0) {
                    f.div_one_minus(t);
                }
            }
            prefix[y][m] = prefix[y][m - 1] + f;
        }
        if (m > keep) {
            for (std::size_t z = 0; z < k; ++z) {
                prefix[z][m - keep] = QSeries(order);
            }
        }
    }

    QSeries g = one;
    for (std::size_t z = 0; z < k; ++z) {
        const std::size_t last = z <= bound.color ? levels : levels - 1;
        g += prefix[z][last];
    }
    return g;
}

inline QSeries series_bounded(const TransitionSystem &ts, const Symbol &bound, std::size_t order)
{
    return series_bounded(ts, bound, order, default_weights(ts));
}

// The limit of the bounded series; parts of level > N cannot reach q^N.
inline QSeries series_limit(const TransitionSystem &ts, std::size_t order, const ColorWeights &weights)
{
    if (order == QSeries::exact) {
        throw ExactModeUnsupported("the limit series needs a truncation order");
    }
    return series_bounded(ts, ts.top_of_level(static_cast<long>(order)), order, weights);
}

inline QSeries series_limit(const TransitionSystem &ts, std::size_t order)
{
    return series_limit(ts, order, default_weights(ts));
}

} // namespace wwords
