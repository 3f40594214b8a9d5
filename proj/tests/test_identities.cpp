#include <functional>
#include <random>

#include <gtest/gtest.h>

#include <wwords/colored/enumerate.hpp>
#include <wwords/identities/partition_theorems.hpp>
#include <wwords/identities/sums.hpp>
#include <wwords/identities/verify.hpp>

using namespace wwords;

namespace
{

const Monomial A = Monomial::of(Marker::a);
const Monomial A2 = Monomial::of(Marker::a, 2);

QSeries poly(std::initializer_list<QTerm> terms)
{
    QSeries s = QSeries::constant(0);
    for (const auto &t : terms) {
        s += QSeries::term(t);
    }
    return s;
}

// Cofactor expansion along the first row of a dense square matrix.
QSeries laplace(const std::vector<std::vector<QSeries>> &m)
{
    const std::size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    QSeries total = QSeries::constant(0);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) {
            continue;
        }
        std::vector<std::vector<QSeries>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<QSeries> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(m[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        const QSeries term = m[0][col] * laplace(minor);
        total = col % 2 == 0 ? total + term : total - term;
    }
    return total;
}

// The dense matrix spelled out entry by entry from its definition.
std::vector<std::vector<QSeries>> dense_h_matrix(long n)
{
    const auto d = static_cast<std::size_t>(n - 1);
    std::vector<std::vector<QSeries>> m(d, std::vector<QSeries>(d, QSeries::constant(0)));
    for (std::size_t i = 0; i < d; ++i) {
        const auto row = static_cast<long>(i) + 1;
        m[i][i] = poly({{1, {}, 0}, {1, A, row + 1}});
        if (i + 1 < d) {
            m[i][i + 1] = poly({{1, A2, 2 * row + 3}});
            m[i + 1][i] = QSeries::constant(1);
        }
    }
    return m;
}

// h_n(q^k; q) computed in Z[q] from the start.
QPolynomial h_at_a_power(long n, long k)
{
    if (n == 0) {
        return {};
    }
    QPolynomial prev2;
    QPolynomial prev1(1);
    for (long j = 2; j <= n; ++j) {
        QPolynomial next = prev1 + prev1.shifted(static_cast<std::size_t>(k + j))
                           - prev2.shifted(static_cast<std::size_t>(2 * k + 2 * j - 1));
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

void expect_all_pass(const std::vector<IdentityReport> &reports)
{
    for (const auto &r : reports) {
        EXPECT_TRUE(r.passed()) << to_json(r).dump();
    }
}

} // namespace

TEST(HSequence, InitialValuesAndSmallCases)
{
    for (auto mode : {HMode::b_eq_aq, HMode::raw_b_eq_aq}) {
        EXPECT_TRUE(h_via_recurrence(0, mode).is_zero());
        EXPECT_EQ(h_via_recurrence(1, mode), QSeries::constant(1));
        EXPECT_EQ(h_via_recurrence(2, mode), poly({{1, {}, 0}, {1, A, 2}}));
    }
    const QSeries h3 = poly({{1, {}, 0}, {1, A, 2}}) * poly({{1, {}, 0}, {1, A, 3}}) - poly({{1, A2, 5}});
    EXPECT_EQ(h_via_recurrence(3, HMode::b_eq_aq), h3);
    EXPECT_EQ(h_via_determinant(2), poly({{1, {}, 0}, {1, A, 2}}));
    EXPECT_EQ(h_via_determinant(3), h3);
    EXPECT_EQ(h_via_double_sum(1), QSeries::constant(1));
    EXPECT_EQ(h_via_double_sum(2), poly({{1, {}, 0}, {1, A, 2}}));
}

TEST(HSequence, ErrorsAndDomain)
{
    EXPECT_THROW(h_via_recurrence(-1, HMode::b_eq_aq), std::invalid_argument);
    EXPECT_THROW(h_via_determinant(1), std::invalid_argument);
    EXPECT_THROW(h_via_double_sum(-1), std::invalid_argument);
    EXPECT_THROW(hprime(-1, HPrimeRoute::relation), std::invalid_argument);
    // At general b the quotient by 1 - b q^(n-1) is not a polynomial.
    EXPECT_THROW(h_via_recurrence(2, HMode::general_b), InexactDivision);
    EXPECT_THROW(hprime(4, HPrimeRoute::colored, 10), TruncationTooLow);
}

TEST(HSequence, DeterminantMatchesCofactorExpansion)
{
    for (long n = 2; n <= 7; ++n) {
        EXPECT_EQ(h_via_determinant(n), laplace(dense_h_matrix(n))) << "n=" << n;
    }
}

TEST(HSequence, ThreeRoutesAgree)
{
    for (long n = 2; n <= 15; ++n) {
        const QSeries rec = h_via_recurrence(n, HMode::b_eq_aq);
        EXPECT_EQ(rec, h_via_determinant(n)) << "n=" << n;
        EXPECT_EQ(rec, h_via_double_sum(n)) << "n=" << n;
        EXPECT_EQ(rec, h_via_recurrence(n, HMode::raw_b_eq_aq)) << "n=" << n;
    }
}

TEST(HSequence, GeneralModeSpecializesToSimplifiedMode)
{
    constexpr std::size_t order = 40;
    Substitution s;
    s.map(Marker::b, MarkerImage::of(A, 1));
    for (long n = 0; n <= 8; ++n) {
        const QSeries general = h_via_recurrence(n, HMode::general_b, order);
        EXPECT_TRUE(agree(substitute(general, s, order), h_via_recurrence(n, HMode::b_eq_aq).truncated(order)))
            << "n=" << n;
    }
}

TEST(HSequence, SpecializingBeforeAndAfterAgree)
{
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> pick_n(0, 14);
    std::uniform_int_distribution<long> pick_k(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const long n = pick_n(rng);
        const long k = pick_k(rng);
        EXPECT_EQ(set_a_to_q_power(h_via_double_sum(n), k), h_at_a_power(n, k).to_series())
            << "n=" << n << " k=" << k;
    }
}

TEST(HPrime, ExamplesAndRoutes)
{
    EXPECT_EQ(hprime(0, HPrimeRoute::relation), QSeries::constant(1));
    EXPECT_EQ(hprime(1, HPrimeRoute::relation), QSeries::constant(1));
    EXPECT_EQ(hprime(0, HPrimeRoute::colored), QSeries::constant(1));
    EXPECT_EQ(hprime(1, HPrimeRoute::colored), QSeries::constant(1));
    const QSeries h2 = poly({{1, {}, 0}, {1, A, 2}, {-1, A2, 3}});
    EXPECT_EQ(hprime(2, HPrimeRoute::relation), h2);
    EXPECT_EQ(hprime(2, HPrimeRoute::colored), h2);
    for (long n = 0; n <= 12; ++n) {
        EXPECT_EQ(hprime(n, HPrimeRoute::colored), hprime(n, HPrimeRoute::relation)) << "n=" << n;
    }
}

TEST(HPrime, ColoredRouteMatchesBruteForceEnumeration)
{
    const auto &m = system_M();
    constexpr std::size_t order = 16;
    Substitution b_to_a;
    b_to_a.map(Marker::b, MarkerImage::identity(Marker::a));
    for (long n = 1; n <= 5; ++n) {
        const Symbol bound{m.color_index('b'), n};
        const QSeries g = substitute(census(m, enumerate_bounded(m, bound, order - 1), order), b_to_a, order);
        const QSeries brute = pochhammer(QTerm{1, A, 1}, 1, n, QSeries::exact) * g;
        EXPECT_TRUE(agree(brute, hprime(n, HPrimeRoute::colored).truncated(order))) << "n=" << n;
    }
}

TEST(HPrime, SatisfiesTheSimplifiedRecurrence)
{
    for (long n = 2; n <= 12; ++n) {
        const QSeries lhs = hprime(n, HPrimeRoute::colored);
        const QSeries p1 = hprime(n - 1, HPrimeRoute::colored);
        const QSeries p2 = hprime(n - 2, HPrimeRoute::colored);
        EXPECT_EQ(lhs, p1 + p1.times(QTerm{1, A, n}) - p2.times(QTerm{1, A2, 2 * n - 1})) << "n=" << n;
    }
}

TEST(Sums, SmallValues)
{
    for (auto s : {SumIdentity::eq_sum1, SumIdentity::eq_sum2, SumIdentity::eq_sum3}) {
        EXPECT_EQ(sum_lhs(s, 1), QSeries::constant(1)) << sum_identity_name(s);
        EXPECT_EQ(sum_rhs(s, 1), QSeries::constant(1)) << sum_identity_name(s);
    }
    // [2 over 1] = 1 + q on the right of eq_sum1 at n = 2; the left has (0,0) and (1,0).
    EXPECT_EQ(sum_rhs(SumIdentity::eq_sum1, 2), poly({{1, {}, 0}, {1, {}, 1}}));
    EXPECT_EQ(sum_lhs(SumIdentity::eq_sum1, 2), poly({{1, {}, 0}, {1, {}, 1}}));
}

TEST(Sums, IdentitiesHoldExactly)
{
    expect_all_pass(verify_sum_identities(14));
    EXPECT_THROW(verify_sum_identities(0), std::invalid_argument);
}

TEST(Sums, LeftSidesAreHSpecializations)
{
    for (auto s : {SumIdentity::eq_sum1, SumIdentity::eq_sum2, SumIdentity::eq_sum3}) {
        const auto r = verify_sum_h_bridge(s, 1, 14);
        EXPECT_TRUE(r.passed()) << to_json(r).dump();
    }
}

TEST(Sums, BrokenRightSideYieldsWitness)
{
    // eq_sum2's right side against eq_sum1's left side must fail with a witness.
    for (long n = 2; n <= 6; ++n) {
        const auto diff = first_difference(sum_lhs(SumIdentity::eq_sum1, n), sum_rhs(SumIdentity::eq_sum2, n));
        EXPECT_TRUE(diff.has_value()) << "n=" << n;
    }
}

TEST(Sums, LeftSideStabilizesAsNGrows)
{
    constexpr std::size_t top = 20;
    const QSeries reference = sum_lhs(SumIdentity::eq_sum1, 2 * static_cast<long>(top));
    for (long n = 2; n < 2 * static_cast<long>(top); ++n) {
        const QSeries s = sum_lhs(SumIdentity::eq_sum1, n);
        for (std::size_t m = 0; m <= top && 2 * static_cast<long>(m) <= n; ++m) {
            EXPECT_EQ(s[m], reference[m]) << "n=" << n << " m=" << m;
        }
    }
}

TEST(Products, TheoremsHoldToModerateOrder)
{
    const auto reports = verify_product_theorems(30);
    EXPECT_EQ(reports.size(), 5U);
    expect_all_pass(reports);
    EXPECT_THROW(verify_product_theorems(0), std::invalid_argument);
}

TEST(Products, WrongProductIsCaught)
{
    const auto &m = system_M();
    IdentityReport r;
    const QSeries lhs = series_limit(
        m, 20, weights_under(m, {MarkerImage::identity(Marker::a), MarkerImage::one(), MarkerImage::one()}));
    const QSeries rhs = detail::inv_poch(A, 1, 3, 20) * detail::inv_poch({}, 1, 1, 20);
    EXPECT_FALSE(compare_into(r, lhs, rhs));
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->q_power, std::optional<std::size_t>(1));
}

TEST(SubstitutionChain, HoldsAtBothSpecializations)
{
    const auto reports = verify_substitution_chain(20, 8);
    ASSERT_EQ(reports.size(), 2U);
    expect_all_pass(reports);
}

TEST(SubstitutionChain, SecondLevelAgainstHandExpansion)
{
    // (1 + a q^2) / (1 - a q^2) = 1 + 2 a q^2 + 2 a^2 q^4 + ...
    const auto &m = system_M();
    const QSeries g = series_bounded(
        m, Symbol{m.color_index('a'), 2}, 20,
        weights_under(m, {MarkerImage::identity(Marker::a), MarkerImage::of(A, 1), MarkerImage::one()}));
    QSeries expected = QSeries::constant(1, 20);
    for (long k = 1; 2 * k < 20; ++k) {
        expected += QSeries::term(QTerm{2, Monomial::of(Marker::a, static_cast<std::uint64_t>(k)), 2 * k}, 20);
    }
    EXPECT_TRUE(agree(g, expected));
}

TEST(HRoutes, ReportsPass)
{
    const auto reports = verify_h_routes(10, 8);
    ASSERT_EQ(reports.size(), 4U);
    expect_all_pass(reports);
}

TEST(PartitionTheorems, SmallRangesPass)
{
    CensusRanges small{18, 18, 15, 18, 15, 18, 15, 18};
    const auto reports = verify_partition_theorems(small);
    EXPECT_EQ(reports.size(), 9U);
    expect_all_pass(reports);
}

TEST(PartitionTheorems, TwoColorSeriesMatchesProduct)
{
    const QSeries s = two_color_series(1, 3, 25);
    EXPECT_TRUE(agree(s, detail::inv_poch({}, 1, 1, 25) * detail::inv_poch({}, 1, 3, 25)));
    EXPECT_THROW(two_color_series(1, 3, QSeries::exact), ExactModeUnsupported);
}
