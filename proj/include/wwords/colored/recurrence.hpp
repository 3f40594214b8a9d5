#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <wwords/colored/generating.hpp>
#include <wwords/colored/system_io.hpp>
#include <wwords/report.hpp>

namespace wwords
{

// c * m * q^(q0 + qn * n)
struct CoeffTerm {
    BigInt c = 1;
    Monomial m{};
    long q0 = 0;
    long qn = 0;
};

// A polynomial in a, b, c, q whose q-exponents depend affinely on n.
class RelationCoeff
{
public:
    RelationCoeff() = default;
    RelationCoeff(int c) : terms_{CoeffTerm{c, {}, 0, 0}} {} // NOLINT(google-explicit-constructor)

    static RelationCoeff term(const BigInt &c, const Monomial &m, long q0, long qn = 0)
    {
        RelationCoeff r;
        r.terms_.push_back(CoeffTerm{c, m, q0, qn});
        return r;
    }

    // 1 - m q^(q0 + qn n)
    static RelationCoeff one_minus(const Monomial &m, long q0, long qn = 0)
    {
        RelationCoeff r = 1;
        r.terms_.push_back(CoeffTerm{-1, m, q0, qn});
        return r;
    }

    const std::vector<CoeffTerm> &terms() const { return terms_; }

    friend RelationCoeff operator+(RelationCoeff x, const RelationCoeff &y)
    {
        x.terms_.insert(x.terms_.end(), y.terms_.begin(), y.terms_.end());
        return x;
    }

    RelationCoeff operator-() const
    {
        RelationCoeff r = *this;
        for (auto &t : r.terms_) {
            t.c = -t.c;
        }
        return r;
    }

    friend RelationCoeff operator-(const RelationCoeff &x, const RelationCoeff &y) { return x + (-y); }

    friend RelationCoeff operator*(const RelationCoeff &x, const RelationCoeff &y)
    {
        RelationCoeff r;
        for (const auto &s : x.terms_) {
            for (const auto &t : y.terms_) {
                r.terms_.push_back(CoeffTerm{s.c * t.c, s.m * t.m, s.q0 + t.q0, s.qn + t.qn});
            }
        }
        return r;
    }

    // The exact polynomial at index n.
    QSeries at(long n) const
    {
        QSeries s = QSeries::constant(0);
        for (const auto &t : terms_) {
            s += QSeries::term(QTerm{t.c, t.m, t.q0 + t.qn * n});
        }
        return s;
    }

private:
    std::vector<CoeffTerm> terms_;
};

// g^{system}_{color_level}(images(a), images(b), images(c); q)
struct SequenceRef {
    std::string system;
    char color = 'a';
    std::array<MarkerImage, 3> images{MarkerImage::identity(Marker::a), MarkerImage::identity(Marker::b),
                                      MarkerImage::identity(Marker::c)};
};

// coeff(n) * g_{color_{n + offset}}
struct RelationTerm {
    RelationCoeff coeff;
    SequenceRef seq;
    long offset = 0;
};

// sum of terms = 0, for n_lo <= n <= n_hi
struct RecurrenceSpec {
    std::string name;
    std::string theorem;
    std::vector<RelationTerm> terms;
    long n_lo = 1;
    long n_hi = 10;
};

// Evaluates the relation for each n in [n_lo, n_hi] as a series truncated at
// q^order and requires it to vanish. The first nonzero coefficient found is
// reported as the witness.
inline IdentityReport check_relation(const RecurrenceSpec &spec, const SystemRegistry &registry, long n_lo,
                                     long n_hi, std::size_t order)
{
    if (spec.terms.size() < 2) {
        throw std::invalid_argument("relation " + spec.name + " needs at least two terms");
    }
    IdentityReport report;
    report.name = spec.name;
    report.theorem = spec.theorem;
    report.truncation = order;
    report.parameters = {{"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)}};
    ReportTimer timer(report);

    struct Resolved {
        const TransitionSystem *ts;
        std::size_t color;
        ColorWeights weights;
    };
    std::vector<Resolved> resolved;
    for (const auto &t : spec.terms) {
        if (!registry.contains(t.seq.system)) {
            throw UnresolvedSequenceTag("relation " + spec.name + " refers to unknown system '" + t.seq.system
                                        + "'");
        }
        const auto &ts = registry.get(t.seq.system);
        std::size_t color = 0;
        try {
            color = ts.color_index(t.seq.color);
        } catch (const UnknownColor &) {
            throw UnresolvedSequenceTag("relation " + spec.name + " refers to g^" + t.seq.system + "_"
                                        + std::string(1, t.seq.color) + " which does not exist");
        }
        resolved.push_back(Resolved{&ts, color, weights_under(ts, t.seq.images)});
    }

    // Bounded series are reused across n.
    std::map<std::tuple<std::size_t, long>, QSeries> cache;
    auto sequence = [&](std::size_t i, long level) -> const QSeries & {
        auto key = std::make_tuple(i, level);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const auto &r = resolved[i];
            it = cache.emplace(key, series_bounded(*r.ts, Symbol{r.color, level}, order, r.weights)).first;
        }
        return it->second;
    };

    for (long n = n_lo; n <= n_hi; ++n) {
        QSeries total = QSeries::constant(0, order);
        for (std::size_t i = 0; i < spec.terms.size(); ++i) {
            const auto &t = spec.terms[i];
            total += t.coeff.at(n) * sequence(i, n + t.offset);
        }
        if (!total.is_zero()) {
            const auto q = first_difference(total, QSeries::constant(0, order));
            report.fail(Witness{{{"n", n}},
                                q,
                                total[*q].to_string(),
                                "0",
                                "relation does not vanish at n = " + std::to_string(n)});
            return report;
        }
    }
    return report;
}

inline IdentityReport check_relation(const RecurrenceSpec &spec, const SystemRegistry &registry, std::size_t order)
{
    return check_relation(spec, registry, spec.n_lo, spec.n_hi, order);
}

} // namespace wwords
