#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include <wwords/colored/generating.hpp>
#include <wwords/qseries.hpp>

namespace wwords
{

// Polynomials in a and q are exact QSeries with coefficients in Z[a].
using HPoly = QSeries;

enum class HMode {
    // (1 - b q^(n-1)) h_n = (1 - a b q^(2n-1)) h_(n-1) - a b q^(2n-2) (1 - a q^n) h_(n-2)
    general_b,
    // h_n = (1 + a q^n) h_(n-1) - a^2 q^(2n-1) h_(n-2)
    b_eq_aq,
    // the general recurrence at b = a q, divided exactly by (1 - a q^n)
    raw_b_eq_aq,
};

namespace detail
{

inline const Monomial mono_a = Monomial::of(Marker::a);
inline const Monomial mono_b = Monomial::of(Marker::b);

inline HPoly one_minus(const Monomial &m, long e, std::size_t order = QSeries::exact)
{
    HPoly p = QSeries::constant(1, order);
    p.mul_one_minus(QTerm{1, m, e});
    return p;
}

inline HPoly term(long c, const Monomial &m, long e, std::size_t order = QSeries::exact)
{
    return QSeries::term(QTerm{c, m, e}, order);
}

} // namespace detail

// h_n with h_0 = 0 and h_1 = 1. In general_b mode the values are power series
// in q (the division by 1 - b q^(n-1) does not terminate), so `order` must be
// finite; with order = exact the division is attempted exactly and throws
// InexactDivision. The other modes are exact polynomials in a and q.
inline HPoly h_via_recurrence(long n, HMode mode, std::size_t order = QSeries::exact)
{
    using detail::mono_a;
    using detail::mono_b;
    using detail::one_minus;
    using detail::term;
    if (n < 0) {
        throw std::invalid_argument("h_n needs n >= 0");
    }
    const std::size_t ord = mode == HMode::general_b ? order : QSeries::exact;
    HPoly prev2 = QSeries::constant(0, ord); // h_(k-2)
    HPoly prev1 = QSeries::constant(1, ord); // h_(k-1)
    if (n == 0) {
        return prev2;
    }
    const Monomial a2 = mono_a.pow(2);
    for (long k = 2; k <= n; ++k) {
        HPoly next;
        switch (mode) {
        case HMode::b_eq_aq:
            next = prev1 + prev1.times(QTerm{1, mono_a, k}) - prev2.times(QTerm{1, a2, 2 * k - 1});
            break;
        case HMode::raw_b_eq_aq: {
            // b = a q: 1 - a b q^(2k-1) = 1 - a^2 q^(2k), a b q^(2k-2) = a^2 q^(2k-1)
            const HPoly rhs = one_minus(a2, 2 * k) * prev1 - (term(1, a2, 2 * k - 1) * one_minus(mono_a, k)) * prev2;
            next = divide_exact(rhs, one_minus(mono_a, k));
            break;
        }
        case HMode::general_b: {
            const Monomial ab = mono_a * mono_b;
            HPoly rhs = one_minus(ab, 2 * k - 1, ord) * prev1
                        - (term(1, ab, 2 * k - 2, ord) * one_minus(mono_a, k, ord)) * prev2;
            if (ord == QSeries::exact) {
                next = divide_exact(rhs, one_minus(mono_b, k - 1));
            } else {
                rhs.div_one_minus(QTerm{1, mono_b, k - 1});
                next = std::move(rhs);
            }
            break;
        }
        }
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

// The (n-1) x (n-1) tridiagonal matrix with diagonal 1 + a q^(i+1),
// superdiagonal a^2 q^(2i+3) and subdiagonal 1 (i = 1 .. n-1).
struct Tridiagonal {
    std::vector<HPoly> diag;
    std::vector<HPoly> super; // super[i] sits at (i, i+1)
    std::vector<HPoly> sub;   // sub[i] sits at (i+1, i)
};

inline Tridiagonal h_matrix(long n)
{
    if (n < 2) {
        throw std::invalid_argument("the determinant form needs n >= 2");
    }
    Tridiagonal t;
    const Monomial a = Monomial::of(Marker::a);
    for (long i = 1; i <= n - 1; ++i) {
        t.diag.push_back(QSeries::constant(1) + QSeries::term(QTerm{1, a, i + 1}));
        if (i < n - 1) {
            t.super.push_back(QSeries::term(QTerm{1, a.pow(2), 2 * i + 3}));
            t.sub.push_back(QSeries::constant(1));
        }
    }
    return t;
}

// Continuant: D_k = d_k D_(k-1) - s_(k-1) u_(k-1) D_(k-2).
inline HPoly continuant(const Tridiagonal &t)
{
    HPoly prev2 = QSeries::constant(1);
    HPoly prev1 = t.diag.empty() ? QSeries::constant(1) : t.diag[0];
    for (std::size_t k = 1; k < t.diag.size(); ++k) {
        HPoly next = t.diag[k] * prev1 - (t.super[k - 1] * t.sub[k - 1]) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

inline HPoly h_via_determinant(long n)
{
    return continuant(h_matrix(n));
}

// Terms (-1)^j a^(i+3j) q^(e(i,j)) [n-i-3j-s over i]_q [n-i-2j-1-s over j]_(q^3),
// summed over all i, j >= 0. Each binomial vanishes once its bottom exceeds
// its top, which happens for i > n or j > n, so that box covers every
// nonzero term.
inline HPoly fermionic_sum(long n, long s, const std::function<long(long, long)> &e, bool with_a)
{
    HPoly total = QSeries::constant(0);
    for (long j = 0; j <= n; ++j) {
        for (long i = 0; i <= n; ++i) {
            const QPolynomial b1 = qbinom_tb(n - i - 3 * j - s, i, 1);
            if (b1.is_zero()) {
                continue;
            }
            const QPolynomial b2 = qbinom_tb(n - i - 2 * j - 1 - s, j, 3);
            if (b2.is_zero()) {
                continue;
            }
            const Monomial m = with_a ? Monomial::of(Marker::a, static_cast<std::uint64_t>(i + 3 * j)) : Monomial{};
            total += (b1 * b2).to_series().times(QTerm{j % 2 == 0 ? 1 : -1, m, e(i, j)});
        }
    }
    return total;
}

inline HPoly h_via_double_sum(long n)
{
    if (n < 0) {
        throw std::invalid_argument("h_n needs n >= 0");
    }
    return fermionic_sum(
        n, 0, [](long i, long j) { return i * (i + 1) + 3 * i * j + 9 * j * (j + 1) / 2; }, true);
}

// p(a, q) -> p(a q^k, q)
inline HPoly shift_a(const HPoly &p, long k)
{
    Substitution s;
    s.map(Marker::a, MarkerImage::of(Monomial::of(Marker::a), k));
    return substitute(p, s);
}

// p(a, q) -> p(q^k, q)
inline HPoly set_a_to_q_power(const HPoly &p, long k)
{
    Substitution s;
    s.map(Marker::a, MarkerImage::of({}, k));
    return substitute(p, s);
}

// A priori q-degree bound for a solution of h_n = (1 + a q^n) h_(n-1) - a^2 q^(2n-1) h_(n-2)
// with q-degrees d0 and d1 at n = 0 and 1.
inline long recurrence_degree_bound(long n, long d0, long d1)
{
    if (n == 0) {
        return d0;
    }
    long x = d0;
    long y = d1;
    for (long k = 2; k <= n; ++k) {
        const long z = std::max(y + k, x + 2 * k - 1);
        x = y;
        y = z;
    }
    return y;
}

enum class HPrimeRoute { colored, relation };

// h'_n(a;q) with h'_0 = h'_1 = 1.
//
// colored:  (a q; q)_n g^M_(b_n)(a, a; q), expanded to q^order. h'_n satisfies
//           the same recurrence as h_n, so its q-degree is at most
//           recurrence_degree_bound(n, 0, 0); the expansion must reach past it
//           and every coefficient beyond it must vanish.
// relation: h_n(a;q) - a^2 q^3 h_(n-1)(a q; q).
inline HPoly hprime(long n, HPrimeRoute route, std::size_t order = 0)
{
    if (n < 0) {
        throw std::invalid_argument("h'_n needs n >= 0");
    }
    if (route == HPrimeRoute::relation) {
        if (n == 0) {
            return QSeries::constant(1);
        }
        const HPoly tail = shift_a(h_via_recurrence(n - 1, HMode::b_eq_aq), 1);
        return h_via_recurrence(n, HMode::b_eq_aq) - tail.times(QTerm{1, Monomial::of(Marker::a, 2), 3});
    }

    const auto bound = static_cast<std::size_t>(recurrence_degree_bound(n, 0, 0));
    if (order == 0) {
        order = bound + 8;
    }
    if (order == QSeries::exact || order <= bound + 1) {
        throw TruncationTooLow("h'_" + std::to_string(n) + " has q-degree up to " + std::to_string(bound)
                               + "; the colored route needs order > " + std::to_string(bound + 1));
    }
    const auto &m = system_M();
    const MarkerImage a = MarkerImage::identity(Marker::a);
    const QSeries g = n == 0 ? QSeries::constant(1, order) : series_bounded(m, Symbol{1, n}, order, {a, a});
    const QSeries pre = pochhammer(QTerm{1, Monomial::of(Marker::a), 1}, 1, n, QSeries::exact);
    const QSeries prod = pre * g;
    for (std::size_t i = bound + 1; i < order; ++i) {
        if (!prod[i].is_zero()) {
            throw TruncationTooLow("colored route for h'_" + std::to_string(n)
                                   + " does not terminate below q^" + std::to_string(order));
        }
    }
    std::vector<MarkerPoly> coeffs;
    for (std::size_t i = 0; i <= bound; ++i) {
        coeffs.push_back(prod[i]);
    }
    return QSeries::from_coefficients(std::move(coeffs));
}

} // namespace wwords
