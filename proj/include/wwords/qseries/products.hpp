#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include <wwords/qseries/qpolynomial.hpp>
#include <wwords/qseries/series.hpp>

namespace wwords
{

// 1 / (1 - w q^m), truncated at order n.
inline QSeries geometric(const Monomial &w, long m, std::size_t n)
{
    if (m <= 0) {
        throw ZeroValuation("geometric series 1/(1 - w q^" + std::to_string(m) + ") has no power series expansion");
    }
    QSeries s = QSeries::constant(1, n);
    s.div_one_minus(QTerm{1, w, m});
    return s;
}

// (z; q^step)_count, or its reciprocal when `inverse` is set. An empty
// `count` means the infinite product; its factors of q-valuation >= n are
// dropped since they cannot reach the coefficients below q^n.
inline QSeries pochhammer(const QTerm &z, long step, std::optional<long> count, std::size_t n, bool inverse = false)
{
    if (step <= 0) {
        throw ZeroValuation("Pochhammer step must be positive, got " + std::to_string(step));
    }
    if (count && *count < 0) {
        throw std::invalid_argument("Pochhammer count must be non-negative");
    }
    if (z.q_exp < 0) {
        throw NegativeExponent("Pochhammer base carries q^" + std::to_string(z.q_exp));
    }
    if (!count && z.q_exp == 0 && z.coeff != 0) {
        throw DivergentProduct("infinite product with a base of q-valuation 0");
    }
    if (inverse && z.q_exp == 0 && z.coeff != 0 && (!count || *count > 0)) {
        throw ZeroValuation("reciprocal Pochhammer symbol needs a base of positive q-valuation");
    }
    if ((!count || inverse) && n == QSeries::exact) {
        throw ExactModeUnsupported("infinite or reciprocal Pochhammer symbols need a truncation order");
    }

    QSeries s = QSeries::constant(1, n);
    if (z.coeff == 0) {
        return s;
    }
    for (long i = 0; !count || i < *count; ++i) {
        const long e = z.q_exp + step * i;
        if (n != QSeries::exact && static_cast<std::size_t>(e) >= n) {
            break;
        }
        const QTerm factor{z.coeff, z.marker, e};
        if (inverse) {
            s.div_one_minus(factor);
        } else {
            s.mul_one_minus(factor);
        }
    }
    return s;
}

// (c q^e0; q^step)_count as an integer polynomial.
inline QPolynomial pochhammer_poly(const BigInt &c, long e0, long step, long count)
{
    if (e0 < 0 || step <= 0 || count < 0) {
        throw std::invalid_argument("pochhammer_poly: bad arguments");
    }
    QPolynomial p(1);
    for (long i = 0; i < count; ++i) {
        p.mul_one_minus(static_cast<std::size_t>(e0 + step * i), c);
    }
    return p;
}

// The Gaussian binomial [top_minus_bottom + bottom over bottom] in q^step;
// zero when either argument is negative.
inline QPolynomial qbinom(long top_minus_bottom, long bottom, long step = 1)
{
    if (step <= 0) {
        throw std::invalid_argument("qbinom: step must be positive");
    }
    if (top_minus_bottom < 0 || bottom < 0) {
        return {};
    }
    const long small = std::min(top_minus_bottom, bottom);
    const long big = std::max(top_minus_bottom, bottom);
    // After step i the accumulator is [big + i over i]_q.
    QPolynomial p(1);
    for (long i = 1; i <= small; ++i) {
        p.mul_one_minus(static_cast<std::size_t>(big + i));
        p.div_one_minus_exact(static_cast<std::size_t>(i));
    }
    return p.dilated(static_cast<std::size_t>(step));
}

// [top over bottom]_{q^step} in the usual top/bottom notation.
inline QPolynomial qbinom_tb(long top, long bottom, long step = 1)
{
    return qbinom(top - bottom, bottom, step);
}

} // namespace wwords
