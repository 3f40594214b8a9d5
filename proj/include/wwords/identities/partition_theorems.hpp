#pragma once

#include <vector>

#include <wwords/colored/generating.hpp>
#include <wwords/identities/verify.hpp>
#include <wwords/partitions/census.hpp>

namespace wwords
{

// Size series of enum_two_color, one count per coefficient.
inline QSeries two_color_series(long green_residue, long green_modulus, std::size_t order)
{
    if (order == QSeries::exact) {
        throw ExactModeUnsupported("a partition census needs a truncation order");
    }
    std::vector<MarkerPoly> coeffs;
    for (std::size_t n = 0; n < order; ++n) {
        coeffs.emplace_back(enum_two_color(static_cast<long>(n), green_residue, green_modulus));
    }
    return QSeries::from_coefficients(std::move(coeffs), order);
}

// Largest size compared by each census check.
struct CensusRanges {
    long macmahon = 40;
    long mod2 = 30;
    long mod3 = 25;
    long russell = 40;
    long russell_refined = 25;
    long companion = 30;
    long au = 25;
    long bridge = 30;
};

// Census equalities between partition families and their product or colored
// counterparts.
inline std::vector<IdentityReport> verify_partition_theorems(const CensusRanges &ranges = {})
{
    std::vector<IdentityReport> out;
    auto run = [&](const char *name, const char *theorem, long max_n, auto lhs, auto rhs) {
        if (max_n < 0) {
            throw std::invalid_argument("sizes must be non-negative");
        }
        const auto ord = static_cast<std::size_t>(max_n) + 1;
        auto r = detail::start_report(name, theorem, {{"n", detail::range_text(0, max_n)}}, ord);
        {
            ReportTimer timer(r);
            guarded(r, [&] { compare_into(r, lhs(ord), rhs(ord)); });
        }
        out.push_back(std::move(r));
    };
    auto census = [](const char *name, std::vector<Mark> marks = {}) {
        return [name, marks](std::size_t ord) { return census_series(find_family(name)->partitions, ord, marks); };
    };
    auto over_census = [](const char *name) {
        return [name](std::size_t ord) { return overpartition_census(find_family(name)->overpartitions, ord); };
    };
    const Monomial one{};

    run("MacMahon_gap_vs_frequency", "thm_MacMahon", ranges.macmahon, census("macmahon_gap"), census("frequency"));
    run("MacMahon_gap_vs_congruence", "thm_MacMahon", ranges.macmahon, census("macmahon_gap"),
        census("congruence_0234_mod6"));
    run("Mod2_MM_refinement", "thm_Mod2_MM_refinement", ranges.mod2, census("macmahon_gap", {{Marker::a, 1, 2}}),
        census("congruence_0234_mod6", {{Marker::a, 1, 2}}));
    run("Mod3_MM_refinement", "thm_Mod3_MM_refinement", ranges.mod3,
        census("macmahon_gap", {{Marker::a, 1, 3}, {Marker::b, 2, 3}}),
        census("congruence_0234_mod6", {{Marker::a, 4, 6}, {Marker::b, 2, 6}}));
    run("Russell", "thm_Russell", ranges.russell, census("russell_gap"), census("congruence_0135_mod6"));
    run("Russell_refinement", "thm_Russell_refinement", ranges.russell_refined,
        census("russell_gap", {{Marker::a, 1, 3}, {Marker::b, 2, 3}}),
        census("congruence_0135_mod6", {{Marker::a, 1, 6}, {Marker::b, 5, 6}}));
    run("main_comp", "thm_main_comp", ranges.companion, over_census("overpartition_companion"),
        [](std::size_t ord) { return two_color_series(2, 3, ord); });
    run("AU_product", "AU_product", ranges.au, over_census("overpartition_au"),
        [&](std::size_t ord) { return detail::inv_poch(one, 1, 1, ord) * detail::inv_poch(one, 1, 3, ord); });
    run(
        "MacMahon_colored_bridge", "thm_MacMahon", ranges.bridge,
        [](std::size_t ord) {
            const auto &m = system_M();
            Substitution s;
            s.map(Marker::a, MarkerImage::of({}, -1)).map(Marker::b, MarkerImage::one());
            s.q_power = 2;
            const QSeries g = series_limit(
                m, s.required_input_order(ord),
                weights_under(m, {MarkerImage::identity(Marker::a), MarkerImage::one(), MarkerImage::one()}));
            return substitute(g, s, ord);
        },
        census("macmahon_gap"));
    return out;
}

} // namespace wwords
