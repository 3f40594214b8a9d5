#pragma once

#include <string>
#include <vector>

#include <wwords/colored/generating.hpp>
#include <wwords/identities/compare.hpp>
#include <wwords/identities/hsequence.hpp>
#include <wwords/partitions/census.hpp>

namespace wwords
{

namespace detail
{

inline QSeries inv_poch(const Monomial &m, long e0, long step, std::size_t order)
{
    return pochhammer(QTerm{1, m, e0}, step, std::nullopt, order, true);
}

inline IdentityReport start_report(std::string name, std::string theorem,
                                   std::vector<std::pair<std::string, std::string>> params,
                                   std::optional<std::size_t> truncation)
{
    IdentityReport r;
    r.name = std::move(name);
    r.theorem = std::move(theorem);
    r.parameters = std::move(params);
    r.truncation = truncation;
    return r;
}

inline std::string range_text(long lo, long hi)
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

} // namespace detail

// Limits of M, R and Rprime against their product forms, with markers kept
// symbolic except the one set to 1, plus the a = 0 collapse and the congruence
// form of the M product.
inline std::vector<IdentityReport> verify_product_theorems(std::size_t order)
{
    if (order < 1 || order == QSeries::exact) {
        throw std::invalid_argument("product checks need a finite order >= 1");
    }
    using detail::inv_poch;
    const Monomial a = Monomial::of(Marker::a);
    const Monomial b = Monomial::of(Marker::b);
    const Monomial one{};
    const MarkerImage id_a = MarkerImage::identity(Marker::a);
    const MarkerImage id_b = MarkerImage::identity(Marker::b);
    const MarkerImage unit = MarkerImage::one();
    std::vector<IdentityReport> out;
    auto run = [&](const char *name, const char *theorem, auto lhs, auto rhs) {
        auto r = detail::start_report(name, theorem, {}, order);
        {
            ReportTimer timer(r);
            guarded(r, [&] { compare_into(r, lhs(), rhs()); });
        }
        out.push_back(std::move(r));
    };
    const auto &m = system_M();
    run(
        "Weighted_MM", "Weighted_MM", [&] { return series_limit(m, order, weights_under(m, {id_a, unit, unit})); },
        [&] { return inv_poch(a, 2, 3, order) * inv_poch(one, 1, 1, order); });
    run(
        "Weighted_MM_a0", "Weighted_MM",
        [&] { return series_limit(m, order, weights_under(m, {MarkerImage::vanish(), unit, unit})); },
        [&] { return inv_poch(one, 1, 1, order); });
    run(
        "Weighted_MM_congruence", "Weighted_MM",
        [&] {
            Substitution s;
            s.map(Marker::a, MarkerImage::of({}, -1)).map(Marker::b, unit);
            s.q_power = 2;
            const QSeries g = series_limit(m, s.required_input_order(order), weights_under(m, {id_a, unit, unit}));
            return substitute(g, s, order);
        },
        [&] {
            return inv_poch(one, 2, 6, order) * inv_poch(one, 3, 6, order) * inv_poch(one, 4, 6, order)
                   * inv_poch(one, 6, 6, order);
        });
    const auto &rr = system_R();
    run(
        "Weighted_R", "Weighted_R", [&] { return series_limit(rr, order, weights_under(rr, {id_a, id_b, unit})); },
        [&] { return inv_poch(one, 1, 1, order) * inv_poch(a, 1, 2, order) * inv_poch(b, 2, 2, order); });
    const auto &rp = system_Rprime();
    run(
        "Weighted_R2", "Weighted_R2", [&] { return series_limit(rp, order, weights_under(rp, {id_a, id_b, unit})); },
        [&] { return inv_poch(one, 1, 1, order) * inv_poch(a, 2, 2, order) * inv_poch(b, 1, 2, order); });
    return out;
}

// g^M_(a_n)(a, b; q) = h_n(a, b; q) / (a q^2; q)_(n-1) for 1 <= n <= n_max, at
// b = a q with the polynomial h_n and at general b with the series h_n.
inline std::vector<IdentityReport> verify_substitution_chain(std::size_t order, long n_max)
{
    if (order < 1 || order == QSeries::exact) {
        throw std::invalid_argument("the substitution chain needs a finite order >= 1");
    }
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const auto &m = system_M();
    const std::size_t a_color = m.color_index('a');
    const Monomial a = Monomial::of(Marker::a);
    std::vector<IdentityReport> out;
    for (bool general : {false, true}) {
        auto r = detail::start_report(general ? "substitution_chain_general_b" : "substitution_chain", "h_substitution",
                                      {{"n", detail::range_text(1, n_max)}}, order);
        {
            ReportTimer timer(r);
            guarded(r, [&] {
                for (long n = 1; n <= n_max; ++n) {
                    const QSeries den = pochhammer(QTerm{1, a, 2}, 1, n - 1, order);
                    QSeries lhs;
                    QSeries h;
                    if (general) {
                        lhs = series_bounded(m, Symbol{a_color, n}, order);
                        h = h_via_recurrence(n, HMode::general_b, order);
                    } else {
                        lhs = series_bounded(m, Symbol{a_color, n}, order,
                                             weights_under(m, {MarkerImage::identity(Marker::a),
                                                               MarkerImage::of(a, 1), MarkerImage::one()}));
                        h = h_via_recurrence(n, HMode::b_eq_aq).truncated(order);
                    }
                    if (!compare_into(r, lhs, h / den, {{"n", n}})) {
                        return;
                    }
                }
            });
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Recurrence, determinant and double sum agree for 0 <= n <= n_max (the
// determinant from n = 2); the exact-division form of the recurrence agrees
// with the simplified one; both h' routes agree for 0 <= n <= nprime_max.
inline std::vector<IdentityReport> verify_h_routes(long n_max, long nprime_max)
{
    std::vector<IdentityReport> out;
    auto run = [&](const char *name, long lo, long hi, auto lhs, auto rhs) {
        auto r = detail::start_report(name, "h_routes", {{"n", detail::range_text(lo, hi)}}, std::nullopt);
        {
            ReportTimer timer(r);
            guarded(r, [&] {
                for (long n = lo; n <= hi; ++n) {
                    if (!compare_into(r, lhs(n), rhs(n), {{"n", n}})) {
                        return;
                    }
                }
            });
        }
        out.push_back(std::move(r));
    };
    auto rec = [](long n) { return h_via_recurrence(n, HMode::b_eq_aq); };
    run("h_recurrence_vs_determinant", 2, n_max, rec, h_via_determinant);
    run("h_recurrence_vs_double_sum", 0, n_max, rec, h_via_double_sum);
    run("h_recurrence_vs_exact_division", 0, n_max, rec, [](long n) { return h_via_recurrence(n, HMode::raw_b_eq_aq); });
    run("hprime_routes", 0, nprime_max, [](long n) { return hprime(n, HPrimeRoute::colored); },
        [](long n) { return hprime(n, HPrimeRoute::relation); });
    return out;
}

} // namespace wwords
