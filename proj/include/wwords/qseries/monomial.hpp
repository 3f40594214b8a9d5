#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wwords
{

// The three color markers that can be attached to a part.
enum class Marker : std::uint8_t { a = 0, b = 1, c = 2 };

inline constexpr std::array<Marker, 3> all_markers{Marker::a, Marker::b, Marker::c};

inline char marker_name(Marker m)
{
    return static_cast<char>('a' + static_cast<int>(m));
}

inline std::optional<Marker> marker_from_name(char ch)
{
    if (ch >= 'a' && ch <= 'c') {
        return static_cast<Marker>(ch - 'a');
    }
    return std::nullopt;
}

// a^i b^j c^k, packed into one word so that monomial multiplication is an
// integer add and the lexicographic order on (i, j, k) is the integer order.
class Monomial
{
public:
    static constexpr unsigned field_bits = 21;
    static constexpr std::uint64_t max_exponent = (std::uint64_t{1} << field_bits) - 1;

    constexpr Monomial() = default;

    constexpr Monomial(std::uint64_t ea, std::uint64_t eb, std::uint64_t ec)
    {
        if (ea > max_exponent || eb > max_exponent || ec > max_exponent) {
            throw std::overflow_error("Monomial: marker exponent out of range");
        }
        key_ = (ea << (2 * field_bits)) | (eb << field_bits) | ec;
    }

    static constexpr Monomial of(Marker m, std::uint64_t e = 1)
    {
        switch (m) {
            case Marker::a:
                return {e, 0, 0};
            case Marker::b:
                return {0, e, 0};
            case Marker::c:
                break;
        }
        return {0, 0, e};
    }

    constexpr std::uint64_t exponent(Marker m) const
    {
        const unsigned shift = (2 - static_cast<unsigned>(m)) * field_bits;
        return (key_ >> shift) & max_exponent;
    }

    constexpr std::uint64_t total_degree() const
    {
        return exponent(Marker::a) + exponent(Marker::b) + exponent(Marker::c);
    }

    constexpr bool is_one() const { return key_ == 0; }
    constexpr std::uint64_t key() const { return key_; }

    constexpr Monomial &operator*=(const Monomial &o)
    {
        *this = Monomial(exponent(Marker::a) + o.exponent(Marker::a), exponent(Marker::b) + o.exponent(Marker::b),
                         exponent(Marker::c) + o.exponent(Marker::c));
        return *this;
    }

    friend constexpr Monomial operator*(Monomial x, const Monomial &y)
    {
        x *= y;
        return x;
    }

    constexpr Monomial pow(std::uint64_t k) const
    {
        return {exponent(Marker::a) * k, exponent(Marker::b) * k, exponent(Marker::c) * k};
    }

    // True iff every exponent of *this is at least the matching one of d.
    constexpr bool divisible_by(const Monomial &d) const
    {
        for (auto m : all_markers) {
            if (exponent(m) < d.exponent(m)) {
                return false;
            }
        }
        return true;
    }

    constexpr Monomial divided_by(const Monomial &d) const
    {
        if (!divisible_by(d)) {
            throw std::domain_error("Monomial: not divisible");
        }
        return Monomial::from_key(key_ - d.key_);
    }

    friend constexpr auto operator<=>(const Monomial &, const Monomial &) = default;

    std::string to_string() const
    {
        if (is_one()) {
            return "1";
        }
        std::string out;
        for (auto m : all_markers) {
            const auto e = exponent(m);
            if (e == 0) {
                continue;
            }
            if (!out.empty()) {
                out += '*';
            }
            out += marker_name(m);
            if (e > 1) {
                out += '^' + std::to_string(e);
            }
        }
        return out;
    }

private:
    static constexpr Monomial from_key(std::uint64_t k)
    {
        Monomial m;
        m.key_ = k;
        return m;
    }

    std::uint64_t key_ = 0;
};

} // namespace wwords
