#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wwords/qseries/series.hpp>

namespace wwords
{

// Dense polynomial in q with integer coefficients. This is the marker-free
// case used by q-binomials and the finite sum identities, where dense BigInt
// convolution is much cheaper than going through MarkerPoly.
class QPolynomial
{
public:
    QPolynomial() = default;

    QPolynomial(const BigInt &c) // NOLINT(google-explicit-constructor)
    {
        if (c != 0) {
            c_.push_back(c);
        }
    }

    QPolynomial(int c) : QPolynomial(BigInt(c)) {} // NOLINT(google-explicit-constructor)

    explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    // c * q^e
    static QPolynomial monomial(std::size_t e, const BigInt &c = 1)
    {
        QPolynomial p;
        if (c != 0) {
            p.c_.assign(e + 1, BigInt(0));
            p.c_[e] = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const
    {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.size() - 1;
    }
    const std::vector<BigInt> &coefficients() const { return c_; }

    BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    BigInt value_at_one() const
    {
        BigInt s = 0;
        for (const auto &v : c_) {
            s += v;
        }
        return s;
    }

    QPolynomial &operator+=(const QPolynomial &o)
    {
        if (c_.size() < o.c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }

    QPolynomial &operator-=(const QPolynomial &o)
    {
        if (c_.size() < o.c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial x, const QPolynomial &y) { return x += y; }
    friend QPolynomial operator-(QPolynomial x, const QPolynomial &y) { return x -= y; }

    QPolynomial operator-() const
    {
        QPolynomial r = *this;
        for (auto &v : r.c_) {
            v = -v;
        }
        return r;
    }

    friend QPolynomial operator*(const QPolynomial &x, const QPolynomial &y)
    {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        std::vector<BigInt> r(x.c_.size() + y.c_.size() - 1);
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                if (y.c_[j] != 0) {
                    r[i + j] += x.c_[i] * y.c_[j];
                }
            }
        }
        return QPolynomial(std::move(r));
    }

    QPolynomial &operator*=(const QPolynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    // Multiplication by q^e.
    QPolynomial shifted(std::size_t e) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<BigInt> r(e, BigInt(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return QPolynomial(std::move(r));
    }

    // p(q) -> p(q^k)
    QPolynomial dilated(std::size_t k) const
    {
        if (k == 1 || is_zero()) {
            return *this;
        }
        std::vector<BigInt> r((c_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i * k] = c_[i];
        }
        return QPolynomial(std::move(r));
    }

    // In place multiplication by (1 - c q^e).
    QPolynomial &mul_one_minus(std::size_t e, const BigInt &c = 1)
    {
        if (is_zero() || c == 0) {
            return *this;
        }
        const std::size_t old = c_.size();
        c_.resize(old + e);
        for (std::size_t i = c_.size(); i-- > e;) {
            if (i - e < old) {
                c_[i] -= c * c_[i - e];
            }
        }
        trim();
        return *this;
    }

    // Exact division by (1 - q^e), e >= 1; throws InexactDivision otherwise.
    QPolynomial &div_one_minus_exact(std::size_t e)
    {
        if (e == 0) {
            throw ZeroValuation("division by 1 - q^0");
        }
        if (is_zero()) {
            return *this;
        }
        if (c_.size() <= e) {
            throw InexactDivision("1 - q^" + std::to_string(e) + " does not divide the polynomial");
        }
        // Quotient coefficients satisfy Q_i = A_i + Q_{i-e}.
        const std::size_t qlen = c_.size() - e;
        std::vector<BigInt> quot(qlen);
        for (std::size_t i = 0; i < qlen; ++i) {
            quot[i] = c_[i] + (i >= e ? quot[i - e] : BigInt(0));
        }
        QPolynomial q(std::move(quot));
        QPolynomial check = q;
        check.mul_one_minus(e);
        if (check.c_ != c_) {
            throw InexactDivision("1 - q^" + std::to_string(e) + " does not divide the polynomial");
        }
        *this = std::move(q);
        return *this;
    }

    QSeries to_series(std::size_t order = QSeries::exact) const
    {
        std::vector<MarkerPoly> coeffs;
        coeffs.reserve(c_.size());
        for (const auto &v : c_) {
            coeffs.emplace_back(v);
        }
        return QSeries::from_coefficients(std::move(coeffs), order);
    }

    friend bool operator==(const QPolynomial &, const QPolynomial &) = default;

    std::string to_string() const { return to_series().to_string(); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<BigInt> c_;
};

} // namespace wwords
