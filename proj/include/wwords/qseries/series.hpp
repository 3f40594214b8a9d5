#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wwords/errors.hpp>
#include <wwords/qseries/marker_poly.hpp>

namespace wwords
{

// A single term c * m * q^e. Used as the base of Pochhammer symbols, as the
// ratio of geometric factors and as marker images in substitutions.
struct QTerm {
    BigInt coeff = 1;
    Monomial marker{};
    long q_exp = 0;

    friend bool operator==(const QTerm &, const QTerm &) = default;
};

// Truncated formal power series in q with MarkerPoly coefficients.
//
// A series of order N knows the coefficients of q^0 .. q^(N-1). The special
// order `exact` marks a polynomial: every coefficient is known and those past
// the stored range are zero. Arithmetic results take the minimum order of the
// operands, so an exact polynomial never lowers the precision of a series.
class QSeries
{
public:
    static constexpr std::size_t exact = std::numeric_limits<std::size_t>::max();

    QSeries() = default;

    explicit QSeries(std::size_t order) : order_(order) {}

    static QSeries constant(const MarkerPoly &c, std::size_t order = exact)
    {
        QSeries s(order);
        if (order > 0 && !c.is_zero()) {
            s.coeffs_.push_back(c);
        }
        return s;
    }

    static QSeries term(const QTerm &t, std::size_t order = exact)
    {
        if (t.q_exp < 0) {
            throw NegativeExponent("q^" + std::to_string(t.q_exp) + " is not a power series");
        }
        QSeries s(order);
        s.add_to(static_cast<std::size_t>(t.q_exp), MarkerPoly(t.marker, t.coeff));
        return s;
    }

    static QSeries from_coefficients(std::vector<MarkerPoly> coeffs, std::size_t order = exact)
    {
        QSeries s(order);
        if (coeffs.size() > order) {
            coeffs.resize(order);
        }
        s.coeffs_ = std::move(coeffs);
        s.trim();
        return s;
    }

    std::size_t order() const { return order_; }
    bool is_exact() const { return order_ == exact; }

    // One past the highest stored nonzero coefficient.
    std::size_t stored_size() const { return coeffs_.size(); }

    std::optional<std::size_t> degree() const
    {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const MarkerPoly &operator[](std::size_t i) const
    {
        static const MarkerPoly zero;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    // Adds p to the coefficient of q^i; silently dropped past the order.
    void add_to(std::size_t i, const MarkerPoly &p)
    {
        if (i >= order_ || p.is_zero()) {
            return;
        }
        if (i >= coeffs_.size()) {
            coeffs_.resize(i + 1);
        }
        coeffs_[i] += p;
        trim();
    }

    QSeries truncated(std::size_t n) const
    {
        QSeries r(std::min(order_, n));
        r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(coeffs_.size(), r.order_)));
        r.trim();
        return r;
    }

    bool has_constant_coefficients() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MarkerPoly &p) { return p.is_constant(); });
    }

    QSeries &operator+=(const QSeries &o) { return accumulate(o, false); }
    QSeries &operator-=(const QSeries &o) { return accumulate(o, true); }

    friend QSeries operator+(QSeries x, const QSeries &y) { return x += y; }
    friend QSeries operator-(QSeries x, const QSeries &y) { return x -= y; }

    QSeries operator-() const
    {
        QSeries r = *this;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    // Multiplication by c * m * q^e.
    QSeries times(const QTerm &t) const
    {
        if (t.q_exp < 0) {
            throw NegativeExponent("cannot multiply a series by q^" + std::to_string(t.q_exp));
        }
        const auto e = static_cast<std::size_t>(t.q_exp);
        QSeries r(order_);
        if (t.coeff == 0 || coeffs_.empty() || e >= order_) {
            return r;
        }
        const std::size_t n = std::min(order_ - e, coeffs_.size());
        r.coeffs_.resize(n + e);
        for (std::size_t i = 0; i < n; ++i) {
            r.coeffs_[i + e] = coeffs_[i].times(t.marker, t.coeff);
        }
        r.trim();
        return r;
    }

    friend QSeries operator*(const QSeries &x, const QSeries &y)
    {
        const std::size_t order = std::min(x.order_, y.order_);
        QSeries r(order);
        if (x.coeffs_.empty() || y.coeffs_.empty() || order == 0) {
            return r;
        }
        const std::size_t len = std::min(order, x.coeffs_.size() + y.coeffs_.size() - 1);
        if (x.has_constant_coefficients() && y.has_constant_coefficients()) {
            std::vector<BigInt> acc(len);
            for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
                const BigInt xi = x.coeffs_[i].constant_term();
                if (xi == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j) {
                    if (!y.coeffs_[j].is_zero()) {
                        acc[i + j] += xi * y.coeffs_[j].constant_term();
                    }
                }
            }
            r.coeffs_.reserve(len);
            for (auto &v : acc) {
                r.coeffs_.emplace_back(v);
            }
            r.trim();
            return r;
        }
        r.coeffs_.resize(len);
        for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
            if (x.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j) {
                if (!y.coeffs_[j].is_zero()) {
                    r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
                }
            }
        }
        r.trim();
        return r;
    }

    QSeries &operator*=(const QSeries &o)
    {
        *this = *this * o;
        return *this;
    }

    // In place multiplication by (1 - w).
    QSeries &mul_one_minus(const QTerm &w)
    {
        if (w.q_exp < 0) {
            throw NegativeExponent("factor (1 - w) with negative q-exponent");
        }
        const auto e = static_cast<std::size_t>(w.q_exp);
        if (coeffs_.empty() || e >= order_ || w.coeff == 0) {
            return *this;
        }
        const std::size_t old = coeffs_.size();
        const std::size_t len = std::min(order_, old + e);
        coeffs_.resize(len);
        for (std::size_t i = len; i-- > e;) {
            if (i - e < old && !coeffs_[i - e].is_zero()) {
                coeffs_[i] -= coeffs_[i - e].times(w.marker, w.coeff);
            }
        }
        trim();
        return *this;
    }

    // In place multiplication by 1/(1 - w); w must carry a positive power of q.
    QSeries &div_one_minus(const QTerm &w)
    {
        if (w.q_exp <= 0) {
            throw ZeroValuation("1/(1 - w) needs w of positive q-valuation");
        }
        if (is_exact()) {
            throw ExactModeUnsupported("1/(1 - w) is not a polynomial; give a truncation order");
        }
        const auto e = static_cast<std::size_t>(w.q_exp);
        if (coeffs_.empty() || e >= order_ || w.coeff == 0) {
            return *this;
        }
        coeffs_.resize(order_);
        for (std::size_t i = e; i < order_; ++i) {
            if (!coeffs_[i - e].is_zero()) {
                coeffs_[i] += coeffs_[i - e].times(w.marker, w.coeff);
            }
        }
        trim();
        return *this;
    }

    // Unit test for division: constant coefficient must be exactly +1 or -1.
    bool is_unit() const
    {
        if (coeffs_.empty() || !coeffs_[0].is_constant()) {
            return false;
        }
        const BigInt c = coeffs_[0].constant_term();
        return c == 1 || c == -1;
    }

    friend bool operator==(const QSeries &, const QSeries &) = default;

    std::string to_string(std::size_t max_terms = 16) const
    {
        std::string out;
        std::size_t shown = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) {
                continue;
            }
            if (shown == max_terms) {
                out += " + ...";
                break;
            }
            if (!out.empty()) {
                out += " + ";
            }
            const std::string c = coeffs_[i].to_string();
            const bool compound = coeffs_[i].size() > 1;
            if (i == 0) {
                out += c;
            } else {
                if (c != "1") {
                    out += compound ? "(" + c + ")*" : c + "*";
                }
                out += i == 1 ? "q" : "q^" + std::to_string(i);
            }
            ++shown;
        }
        if (out.empty()) {
            out = "0";
        }
        if (!is_exact()) {
            out += " + O(q^" + std::to_string(order_) + ")";
        }
        return out;
    }

private:
    QSeries &accumulate(const QSeries &o, bool negate)
    {
        order_ = std::min(order_, o.order_);
        if (coeffs_.size() > order_) {
            coeffs_.resize(order_);
        }
        const std::size_t n = std::min(order_, o.coeffs_.size());
        if (coeffs_.size() < n) {
            coeffs_.resize(n);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (negate) {
                coeffs_[i] -= o.coeffs_[i];
            } else {
                coeffs_[i] += o.coeffs_[i];
            }
        }
        trim();
        return *this;
    }

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<MarkerPoly> coeffs_;
    std::size_t order_ = exact;
};

// Index of the first coefficient below the common order where x and y
// differ, or nullopt when they agree on the whole common range.
inline std::optional<std::size_t> first_difference(const QSeries &x, const QSeries &y)
{
    const std::size_t order = std::min(x.order(), y.order());
    const std::size_t n = std::min(order, std::max(x.stored_size(), y.stored_size()));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] == y[i])) {
            return i;
        }
    }
    return std::nullopt;
}

inline bool agree(const QSeries &x, const QSeries &y)
{
    return !first_difference(x, y).has_value();
}

// Exact polynomial division; throws InexactDivision unless den divides num.
inline QSeries divide_exact(const QSeries &num, const QSeries &den)
{
    if (!num.is_exact() || !den.is_exact()) {
        throw ExactModeUnsupported("divide_exact expects polynomials");
    }
    if (!den.is_unit()) {
        throw NotAUnit("divisor constant term must be +1 or -1");
    }
    if (num.is_zero()) {
        return num;
    }
    const std::size_t dn = *num.degree();
    const std::size_t dd = *den.degree();
    if (dd > dn) {
        throw InexactDivision("divisor degree exceeds dividend degree");
    }
    const BigInt lead = den[0].constant_term();
    std::vector<MarkerPoly> quot(dn - dd + 1);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        MarkerPoly acc = num[i];
        for (std::size_t j = 1; j <= std::min(i, dd); ++j) {
            if (!den[j].is_zero() && !quot[i - j].is_zero()) {
                acc -= den[j] * quot[i - j];
            }
        }
        quot[i] = lead == 1 ? acc : -acc;
    }
    QSeries q = QSeries::from_coefficients(std::move(quot));
    if (!(q * den == num)) {
        throw InexactDivision("nonzero remainder");
    }
    return q;
}

// num / den as power series; den must have constant term +-1. Two exact
// operands require an exact quotient.
inline QSeries operator/(const QSeries &num, const QSeries &den)
{
    if (!den.is_unit()) {
        throw NotAUnit("series division needs a divisor with constant term +1 or -1");
    }
    if (num.is_exact() && den.is_exact()) {
        return divide_exact(num, den);
    }
    const std::size_t order = std::min(num.order(), den.order());
    const BigInt lead = den[0].constant_term();
    std::vector<std::size_t> support;
    for (std::size_t j = 1; j < den.stored_size() && j < order; ++j) {
        if (!den[j].is_zero()) {
            support.push_back(j);
        }
    }
    std::vector<MarkerPoly> quot(order);
    for (std::size_t i = 0; i < order; ++i) {
        MarkerPoly acc = num[i];
        for (std::size_t j : support) {
            if (j > i) {
                break;
            }
            if (!quot[i - j].is_zero()) {
                acc -= den[j] * quot[i - j];
            }
        }
        quot[i] = lead == 1 ? std::move(acc) : -acc;
    }
    return QSeries::from_coefficients(std::move(quot), order);
}

} // namespace wwords
