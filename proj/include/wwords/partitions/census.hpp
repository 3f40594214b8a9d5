#pragma once

#include <functional>
#include <string>
#include <vector>

#include <wwords/partitions/enumerate.hpp>
#include <wwords/qseries/series.hpp>

namespace wwords
{

// Parts congruent to `residue` modulo `modulus` are counted by `marker`.
struct Mark {
    Marker marker = Marker::a;
    long residue = 0;
    long modulus = 1;
};

inline Monomial mark_monomial(const Partition &p, const std::vector<Mark> &marks)
{
    Monomial m;
    for (const auto &mk : marks) {
        const long k = count_parts(p, mk.residue, mk.modulus);
        if (k > 0) {
            m *= Monomial::of(mk.marker, static_cast<std::uint64_t>(k));
        }
    }
    return m;
}

// sum over sizes n < order of sum over partitions of n of q^n * marks.
inline QSeries census_series(const std::function<std::vector<Partition>(long)> &family, std::size_t order,
                             const std::vector<Mark> &marks = {})
{
    if (order == QSeries::exact) {
        throw ExactModeUnsupported("a partition census needs a truncation order");
    }
    std::vector<MarkerPoly> coeffs;
    for (std::size_t n = 0; n < order; ++n) {
        std::vector<MarkerPoly::term_type> terms;
        for (const auto &p : family(static_cast<long>(n))) {
            terms.emplace_back(mark_monomial(p, marks), 1);
        }
        coeffs.push_back(MarkerPoly::from_terms(std::move(terms)));
    }
    return QSeries::from_coefficients(std::move(coeffs), order);
}

inline QSeries overpartition_census(const std::function<std::vector<Overpartition>(long)> &family,
                                    std::size_t order)
{
    if (order == QSeries::exact) {
        throw ExactModeUnsupported("a partition census needs a truncation order");
    }
    std::vector<MarkerPoly> coeffs;
    for (std::size_t n = 0; n < order; ++n) {
        coeffs.emplace_back(BigInt(family(static_cast<long>(n)).size()));
    }
    return QSeries::from_coefficients(std::move(coeffs), order);
}

// Named partition families as used by the identity registry and the CLI.
struct Family {
    std::string name;
    std::function<std::vector<Partition>(long)> partitions; // empty for overpartition families
    std::function<std::vector<Overpartition>(long)> overpartitions;
};

inline const std::vector<Family> &families()
{
    static const std::vector<Family> f{
        {"all", enum_all, {}},
        {"macmahon_gap", enum_macmahon_gap, {}},
        {"frequency", enum_frequency, {}},
        {"congruence_0234_mod6", [](long n) { return enum_congruence(n, {0, 2, 3, 4}, 6); }, {}},
        {"congruence_0135_mod6", [](long n) { return enum_congruence(n, {0, 1, 3, 5}, 6); }, {}},
        {"russell_gap", enum_russell_gap, {}},
        {"overpartition_companion", {}, enum_overpartition_companion},
        {"overpartition_au", {}, enum_overpartition_au},
    };
    return f;
}

inline const Family *find_family(const std::string &name)
{
    for (const auto &f : families()) {
        if (f.name == name) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace wwords
