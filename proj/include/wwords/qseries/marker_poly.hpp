#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <wwords/qseries/monomial.hpp>

namespace wwords
{

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in the markers a, b, c with exact integer coefficients.
// Terms are kept sorted by monomial and zero coefficients are never stored,
// so structural equality is mathematical equality.
class MarkerPoly
{
public:
    using term_type = std::pair<Monomial, BigInt>;

    MarkerPoly() = default;

    MarkerPoly(const BigInt &c) // NOLINT(google-explicit-constructor)
    {
        if (c != 0) {
            terms_.emplace_back(Monomial{}, c);
        }
    }

    MarkerPoly(int c) : MarkerPoly(BigInt(c)) {} // NOLINT(google-explicit-constructor)

    MarkerPoly(const Monomial &m, const BigInt &c = 1)
    {
        if (c != 0) {
            terms_.emplace_back(m, c);
        }
    }

    // Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    static MarkerPoly from_terms(std::vector<term_type> terms)
    {
        MarkerPoly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one()); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<term_type> &terms() const { return terms_; }

    BigInt constant_term() const
    {
        if (!terms_.empty() && terms_.front().first.is_one()) {
            return terms_.front().second;
        }
        return 0;
    }

    BigInt coefficient(const Monomial &m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const term_type &t, const Monomial &x) { return t.first < x; });
        if (it != terms_.end() && it->first == m) {
            return it->second;
        }
        return 0;
    }

    // Sum of all coefficients, i.e. the value at a = b = c = 1.
    BigInt value_at_ones() const
    {
        BigInt s = 0;
        for (const auto &[m, c] : terms_) {
            s += c;
        }
        return s;
    }

    bool has_nonnegative_coefficients() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const term_type &t) { return t.second > 0; });
    }

    MarkerPoly &operator+=(const MarkerPoly &o)
    {
        if (o.terms_.empty()) {
            return *this;
        }
        if (terms_.empty()) {
            terms_ = o.terms_;
            return *this;
        }
        merge(o, 1);
        return *this;
    }

    MarkerPoly &operator-=(const MarkerPoly &o)
    {
        if (o.terms_.empty()) {
            return *this;
        }
        merge(o, -1);
        return *this;
    }

    friend MarkerPoly operator+(MarkerPoly x, const MarkerPoly &y) { return x += y; }
    friend MarkerPoly operator-(MarkerPoly x, const MarkerPoly &y) { return x -= y; }

    MarkerPoly operator-() const
    {
        MarkerPoly r = *this;
        for (auto &t : r.terms_) {
            t.second = -t.second;
        }
        return r;
    }

    // Multiplication by c * m. Monomial shifts preserve the term order.
    MarkerPoly times(const Monomial &m, const BigInt &c = 1) const
    {
        MarkerPoly r;
        if (c == 0) {
            return r;
        }
        r.terms_.reserve(terms_.size());
        for (const auto &[mono, coef] : terms_) {
            r.terms_.emplace_back(mono * m, coef * c);
        }
        return r;
    }

    // this += c * m * o, without materializing the product.
    void add_times(const MarkerPoly &o, const Monomial &m, const BigInt &c = 1)
    {
        if (o.terms_.empty() || c == 0) {
            return;
        }
        if (m.is_one() && c == 1) {
            *this += o;
            return;
        }
        *this += o.times(m, c);
    }

    friend MarkerPoly operator*(const MarkerPoly &x, const MarkerPoly &y)
    {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        if (y.terms_.size() == 1) {
            return x.times(y.terms_.front().first, y.terms_.front().second);
        }
        if (x.terms_.size() == 1) {
            return y.times(x.terms_.front().first, x.terms_.front().second);
        }
        std::vector<term_type> prod;
        prod.reserve(x.terms_.size() * y.terms_.size());
        for (const auto &[mx, cx] : x.terms_) {
            for (const auto &[my, cy] : y.terms_) {
                prod.emplace_back(mx * my, cx * cy);
            }
        }
        return from_terms(std::move(prod));
    }

    MarkerPoly &operator*=(const MarkerPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend bool operator==(const MarkerPoly &, const MarkerPoly &) = default;

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        // Highest monomial first reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto &[m, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty()) {
                if (c < 0) {
                    out += '-';
                }
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                out += mag.str();
            } else if (mag == 1) {
                out += m.to_string();
            } else {
                out += mag.str() + "*" + m.to_string();
            }
        }
        return out;
    }

private:
    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const term_type &x, const term_type &y) { return x.first < y.first; });
        std::vector<term_type> out;
        out.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second += t.second;
            } else {
                if (!out.empty() && out.back().second == 0) {
                    out.pop_back();
                }
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().second == 0) {
            out.pop_back();
        }
        terms_ = std::move(out);
    }

    void merge(const MarkerPoly &o, int sign)
    {
        std::vector<term_type> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                out.push_back(std::move(*i++));
            } else if (i == terms_.end() || j->first < i->first) {
                out.emplace_back(j->first, sign > 0 ? j->second : BigInt(-j->second));
                ++j;
            } else {
                BigInt c = sign > 0 ? BigInt(i->second + j->second) : BigInt(i->second - j->second);
                if (c != 0) {
                    out.emplace_back(i->first, std::move(c));
                }
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
    }

    std::vector<term_type> terms_;
};

} // namespace wwords
