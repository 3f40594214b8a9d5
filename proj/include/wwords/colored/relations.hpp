#pragma once

#include <vector>

#include <wwords/colored/recurrence.hpp>

namespace wwords
{

// The coupled, uncoupled and shift relations satisfied by the bounded
// generating series of M, R and Rprime, with denominators cleared.
//
// The coupled relations are indexed so that the smallest level involved is n;
// they tie level n + 1 to level n for every n >= 1.
inline std::vector<RecurrenceSpec> builtin_relations()
{
    const Monomial a = Monomial::of(Marker::a);
    const Monomial b = Monomial::of(Marker::b);
    const Monomial c = Monomial::of(Marker::c);
    const Monomial one{};
    using RC = RelationCoeff;
    auto om = [](const Monomial &m, long q0, long qn) { return RC::one_minus(m, q0, qn); };
    auto t = [](long coef, const Monomial &m, long q0, long qn) { return RC::term(coef, m, q0, qn); };

    auto g = [](const char *sys, char color) { return SequenceRef{sys, color}; };
    auto g_sub = [](const char *sys, char color, MarkerImage ia, MarkerImage ib, MarkerImage ic) {
        return SequenceRef{sys, color, {ia, ib, ic}};
    };
    const MarkerImage id_a = MarkerImage::identity(Marker::a);
    const MarkerImage id_b = MarkerImage::identity(Marker::b);
    const MarkerImage id_c = MarkerImage::identity(Marker::c);
    const MarkerImage unit = MarkerImage::one();

    std::vector<RecurrenceSpec> r;

    // M, coupled
    r.push_back({"M_coupled_a",
                 "M_coupled",
                 {{om(a, 1, 1), g("M", 'a'), 1}, {-t(1, a, 1, 1), g("M", 'a'), 0}, {-om(a, 1, 1), g("M", 'b'), 0}},
                 1,
                 10});
    r.push_back({"M_coupled_b",
                 "M_coupled",
                 {{om(b, 1, 1), g("M", 'b'), 1}, {-om(b, 1, 1), g("M", 'a'), 1}, {-t(1, b, 1, 1), g("M", 'b'), 0}},
                 1,
                 10});

    // M, uncoupled three-term relations
    r.push_back({"M_uncoupled_a",
                 "M_uncoupled",
                 {{om(a, 1, 1) * om(b, 1, 1) * om(a, 2, 1), g("M", 'a'), 2},
                  {-(om(a, 1, 1) * om(a * b, 3, 2)), g("M", 'a'), 1},
                  {t(1, a * b, 2, 2) * om(a, 2, 1), g("M", 'a'), 0}},
                 1,
                 10});
    r.push_back({"M_uncoupled_b",
                 "M_uncoupled",
                 {{om(b, 1, 1) * om(a, 2, 1) * om(b, 2, 1), g("M", 'b'), 2},
                  {-(om(b, 1, 1) * om(a * b, 4, 2)), g("M", 'b'), 1},
                  {t(1, a * b, 3, 2) * om(b, 2, 1), g("M", 'b'), 0}},
                 1,
                 10});

    // R, coupled
    r.push_back({"R_coupled_a", "R_coupled", {{om(a, 1, 1), g("R", 'a'), 1}, {-RC(1), g("R", 'c'), 0}}, 1, 10});
    r.push_back({"R_coupled_b",
                 "R_coupled",
                 {{om(b, 1, 1), g("R", 'b'), 1}, {-om(b, 1, 1), g("R", 'a'), 1}, {-t(1, b, 1, 1), g("R", 'b'), 0}},
                 1,
                 10});
    r.push_back({"R_coupled_c",
                 "R_coupled",
                 {{om(b, 1, 1) * om(c, 1, 1), g("R", 'c'), 1},
                  {-(om(b, 1, 1) * om(c, 1, 1)), g("R", 'b'), 1},
                  {-t(1, b * c, 2, 2), g("R", 'b'), 0},
                  {-(t(1, c, 1, 1) * om(b, 1, 1)), g("R", 'c'), 0}},
                 1,
                 10});

    // R, uncoupled recurrence for the a-bounded series
    const RC middle = RC(1) - t(1, b * c, 1, 2) - t(1, a * b, 2, 2) - t(1, a * c, 2, 2) + t(1, a * b * c, 2, 3)
                      + t(1, a * b * c, 3, 3);
    r.push_back({"R_an_rec",
                 "R_uncoupled",
                 {{om(b, 1, 1) * om(c, 1, 1) * om(a, 2, 1), g("R", 'a'), 2},
                  {-middle, g("R", 'a'), 1},
                  {-t(1, a * b * c, 1, 3), g("R", 'a'), 0}},
                 1,
                 10});

    // Shift equations
    r.push_back({"MacMahon_shift",
                 "M_shift",
                 {{om(one, 1, 1) * om(a, 2, 0), g_sub("M", 'a', id_a, unit, id_c), 2},
                  {-om(a, 3, 1), g_sub("M", 'b', MarkerImage::of(a, 3), unit, id_c), 0}},
                 1,
                 10});
    r.push_back({"Russell_shift",
                 "R_shift",
                 {{om(b, 2, 0) * om(a, 1, 1), g_sub("R", 'b', id_a, id_b, unit), 1},
                  {-om(b, 2, 1), g_sub("R", 'c', id_a, MarkerImage::of(b, 2), unit), 0}},
                 1,
                 10});
    r.push_back({"Rprime_shift",
                 "Rprime_shift",
                 {{om(one, 0, 1) * om(b, 1, 0), g_sub("Rprime", 'c', id_a, id_b, unit), 0},
                  {-om(b, 1, 1), g_sub("Rprime", 'a', id_a, MarkerImage::of(b, 2), unit), 0}},
                 1,
                 10});
    return r;
}

} // namespace wwords
