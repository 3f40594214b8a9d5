#include <functional>
#include <random>

#include <gtest/gtest.h>

#include <wwords/qseries.hpp>

using namespace wwords;

namespace
{

const Monomial A = Monomial::of(Marker::a);
const Monomial B = Monomial::of(Marker::b);

QSeries poly(std::initializer_list<MarkerPoly> coeffs, std::size_t order = QSeries::exact)
{
    return QSeries::from_coefficients(std::vector<MarkerPoly>(coeffs), order);
}

// Independent count of partitions of n with parts <= max_part.
long count_partitions(int n, int max_part)
{
    if (n == 0) {
        return 1;
    }
    long total = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        total += count_partitions(n - p, p);
    }
    return total;
}

// Number of partitions of n fitting in a rows x cols box (parts <= cols, at most rows parts).
long count_box(int n, int rows, int cols)
{
    if (n == 0) {
        return 1;
    }
    if (rows == 0) {
        return 0;
    }
    long total = 0;
    for (int p = std::min(n, cols); p >= 1; --p) {
        total += count_box(n - p, rows - 1, p);
    }
    return total;
}

QSeries random_series(std::mt19937 &rng, std::size_t order)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> len(0, static_cast<int>(order));
    std::vector<MarkerPoly> c(static_cast<std::size_t>(len(rng)));
    for (auto &p : c) {
        for (int t = 0; t < 2; ++t) {
            p += MarkerPoly(Monomial(expo(rng), expo(rng), 0), coef(rng));
        }
    }
    return QSeries::from_coefficients(std::move(c), order);
}

} // namespace

TEST(MarkerPoly, ArithmeticIsExactAndNormalized)
{
    MarkerPoly p = MarkerPoly(A) + MarkerPoly(B);
    MarkerPoly sq = p * p;
    EXPECT_EQ(sq.coefficient(A * B), 2);
    EXPECT_EQ(sq.coefficient(A.pow(2)), 1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((MarkerPoly(A) - MarkerPoly(A)).size(), 0u);
    BigInt big = BigInt(1) << 200;
    MarkerPoly huge(A, big);
    EXPECT_EQ((huge * huge).coefficient(A.pow(2)), big * big);
}

TEST(QSeries, AddExamples)
{
    EXPECT_EQ(poly({1, 1}) + poly({0, 1, 1}), poly({1, 2, 1}));
    const auto s = poly({1, MarkerPoly(A), 3}, 6);
    EXPECT_EQ(s + QSeries(6), s);
    const auto inv = pochhammer(QTerm{1, {}, 1}, 1, std::nullopt, 5, true);
    EXPECT_TRUE((inv + (-inv)).is_zero());
    EXPECT_EQ((inv - inv).order(), 5u);
}

TEST(QSeries, AddTruncatesToMinimumOrder)
{
    auto s = poly({1, 1, 1, 1}, 4) + poly({1, 1}, 2);
    EXPECT_EQ(s.order(), 2u);
    EXPECT_EQ(s, poly({2, 2}, 2));
}

TEST(QSeries, MulExamples)
{
    const auto geo = poly({1, 1, 1, 1, 1, 1}, 6);
    EXPECT_EQ(poly({1, -1}) * geo, QSeries::constant(1, 6));

    const auto x = poly({1, MarkerPoly(A)});
    const auto y = poly({1, MarkerPoly(B)});
    EXPECT_EQ(x * y, poly({1, MarkerPoly(A) + MarkerPoly(B), MarkerPoly(A * B)}));

    for (std::size_t n : {1u, 4u, 9u}) {
        const auto p3 = pochhammer(QTerm{1, {}, 1}, 1, 3, n);
        const auto ip3 = pochhammer(QTerm{1, {}, 1}, 1, 3, n, true);
        EXPECT_EQ(p3 * ip3, QSeries::constant(1, n));
    }
}

TEST(QSeries, UnitDivision)
{
    const auto den = poly({1, MarkerPoly(B, -1)});
    const auto q = QSeries::constant(1, 5) / den;
    EXPECT_EQ(q, geometric(B, 1, 5));
    EXPECT_THROW(QSeries::constant(1, 5) / poly({2, 1}), NotAUnit);
    EXPECT_THROW(QSeries::constant(1, 5) / poly({MarkerPoly(A), 1}), NotAUnit);
    // exact operands demand an exact quotient
    const auto num = poly({1, 0, -1});
    EXPECT_EQ(num / poly({1, -1}), poly({1, 1}));
    EXPECT_THROW(poly({1}) / poly({1, -1}), InexactDivision);
}

TEST(Geometric, Examples)
{
    EXPECT_EQ(geometric(B, 1, 4), poly({1, MarkerPoly(B), MarkerPoly(B.pow(2)), MarkerPoly(B.pow(3))}, 4));
    EXPECT_EQ(geometric({}, 1, 4), poly({1, 1, 1, 1}, 4));
    EXPECT_EQ(geometric(A, 2, 3), poly({1, 0, MarkerPoly(A)}, 3));
    EXPECT_THROW(geometric(A, 0, 3), ZeroValuation);
}

TEST(Pochhammer, InfiniteReciprocalCountsPartitions)
{
    const auto s = pochhammer(QTerm{1, {}, 1}, 1, std::nullopt, 5, true);
    for (int n = 0; n < 5; ++n) {
        EXPECT_EQ(s[static_cast<std::size_t>(n)], MarkerPoly(BigInt(count_partitions(n, n)))) << n;
    }
    const auto s30 = pochhammer(QTerm{1, {}, 1}, 1, std::nullopt, 31, true);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(s30[static_cast<std::size_t>(n)].constant_term(), count_partitions(n, n)) << n;
    }
}

TEST(Pochhammer, FiniteAndEmpty)
{
    // (a q^2; q^3)_2 = (1 - a q^2)(1 - a q^5)
    const auto p = pochhammer(QTerm{1, A, 2}, 3, 2, QSeries::exact);
    const auto expect = poly({1, 0, MarkerPoly(A, -1)}) * poly({1, 0, 0, 0, 0, MarkerPoly(A, -1)});
    EXPECT_EQ(p, expect);
    EXPECT_EQ(pochhammer(QTerm{1, A, 2}, 7, 0, 10), QSeries::constant(1, 10));
    EXPECT_EQ(pochhammer(QTerm{1, A, 0}, 2, 0, 10, true), QSeries::constant(1, 10));
}

TEST(Pochhammer, Errors)
{
    EXPECT_THROW(pochhammer(QTerm{1, A, 0}, 1, std::nullopt, 10), DivergentProduct);
    EXPECT_THROW(pochhammer(QTerm{1, A, 0}, 1, 3, 10, true), ZeroValuation);
    EXPECT_THROW(pochhammer(QTerm{1, A, 1}, 0, 3, 10), ZeroValuation);
    EXPECT_THROW(pochhammer(QTerm{1, A, 1}, 1, std::nullopt, QSeries::exact), ExactModeUnsupported);
}

TEST(Pochhammer, InverseRoundTrip)
{
    for (long n = 0; n <= 12; ++n) {
        for (long step : {1L, 2L, 3L}) {
            const QTerm z{1, A, 2};
            const auto fwd = pochhammer(z, step, n, 40);
            const auto inv = pochhammer(z, step, n, 40, true);
            EXPECT_EQ(fwd * inv, QSeries::constant(1, 40)) << n << " " << step;
        }
    }
}

TEST(QBinom, Examples)
{
    EXPECT_EQ(qbinom(2, 1), QPolynomial(std::vector<BigInt>{1, 1, 1}));
    for (long n = 0; n < 6; ++n) {
        EXPECT_EQ(qbinom(n, 0), QPolynomial(1));
    }
    EXPECT_TRUE(qbinom(-1, 2).is_zero());
    EXPECT_TRUE(qbinom(3, -1).is_zero());
    // step dilates q
    EXPECT_EQ(qbinom(2, 1, 3), QPolynomial(std::vector<BigInt>{1, 0, 0, 1, 0, 0, 1}));
}

TEST(QBinom, MatchesPochhammerQuotient)
{
    // [3 over 1] = (q;q)_3 / ((q;q)_1 (q;q)_2)
    const auto num = pochhammer(QTerm{1, {}, 1}, 1, 3, QSeries::exact);
    const auto den = pochhammer(QTerm{1, {}, 1}, 1, 1, QSeries::exact) * pochhammer(QTerm{1, {}, 1}, 1, 2, QSeries::exact);
    EXPECT_EQ(divide_exact(num, den), qbinom(2, 1).to_series());
}

TEST(QBinom, PascalRecurrences)
{
    for (long a = 1; a <= 10; ++a) {
        for (long b = 1; b <= 10; ++b) {
            const auto lhs = qbinom(a, b);
            EXPECT_EQ(lhs, qbinom(a, b - 1) + qbinom(a - 1, b).shifted(static_cast<std::size_t>(b))) << a << "," << b;
            EXPECT_EQ(lhs, qbinom(a, b - 1).shifted(static_cast<std::size_t>(a)) + qbinom(a - 1, b)) << a << "," << b;
        }
    }
}

TEST(QBinom, AtQEqualsOneIsBinomial)
{
    for (long a = 0; a <= 10; ++a) {
        BigInt binom = 1;
        for (long b = 0; b <= 10; ++b) {
            if (b > 0) {
                binom = binom * (a + b) / b;
            }
            EXPECT_EQ(qbinom(a, b).value_at_one(), binom) << a << "," << b;
        }
    }
}

TEST(QBinom, CoefficientsCountBoxPartitions)
{
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            const auto p = qbinom(a, b);
            for (int n = 0; n <= a * b + 1; ++n) {
                EXPECT_EQ(p[static_cast<std::size_t>(n)], count_box(n, b, a)) << a << "," << b << "," << n;
            }
        }
    }
}

TEST(Substitute, Examples)
{
    // a q^2 + q  with a -> a q^-1, q -> q^2  gives  a q^3 + q^2
    const auto s = poly({0, 1, MarkerPoly(A)});
    Substitution sub;
    sub.map(Marker::a, MarkerImage::of(A, -1));
    sub.q_power = 2;
    EXPECT_EQ(substitute(s, sub), poly({0, 0, 1, MarkerPoly(A)}));

    std::mt19937 rng(7);
    const auto t = random_series(rng, 12);
    EXPECT_EQ(substitute(t, Substitution{}), t);
}

TEST(Substitute, ChecksInputTruncation)
{
    // a -> q^-1 with q -> q^2 contracts exponents: input order n gives output order n.
    Substitution sub;
    sub.map(Marker::a, MarkerImage::of({}, -1));
    sub.q_power = 2;
    EXPECT_EQ(sub.required_input_order(10), 10u);
    const auto g = geometric(A, 1, 10);
    EXPECT_THROW(substitute(g, sub, 11), InsufficientTruncation);
    const auto out = substitute(g, sub, 10);
    EXPECT_EQ(out, geometric({}, 1, 10));

    // a -> q^-2 with q -> q^3 contracts by 1/3 per a-occurrence.
    Substitution russell;
    russell.map(Marker::a, MarkerImage::of({}, -2));
    russell.q_power = 3;
    EXPECT_EQ(russell.required_input_order(30), 30u);
    Substitution steep;
    steep.map(Marker::a, MarkerImage::of({}, -2));
    steep.q_power = 2;
    EXPECT_THROW((void)steep.required_input_order(10), NegativeExponent);
}

TEST(Substitute, RejectsNegativeExponentsAndBadValuations)
{
    Substitution sub;
    sub.map(Marker::a, MarkerImage::of({}, -2));
    EXPECT_THROW(substitute(poly({MarkerPoly(A)}), sub), NegativeExponent);

    Substitution mild;
    mild.map(Marker::a, MarkerImage::of({}, -1));
    mild.q_power = 2;
    // a^3 q does not respect valuation 1 for a
    EXPECT_THROW(substitute(poly({0, MarkerPoly(A.pow(3))}, 8), mild), InsufficientTruncation);
}

TEST(Substitute, ZeroImagesDropTerms)
{
    Substitution sub;
    sub.map(Marker::a, MarkerImage::vanish());
    const auto g = geometric(A, 1, 6) * geometric(B, 1, 6);
    EXPECT_EQ(substitute(g, sub), geometric(B, 1, 6));
}

TEST(QSeriesProperties, RingAxiomsOnRandomSeries)
{
    std::mt19937 rng(20241018);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const auto x = random_series(rng, n);
        const auto y = random_series(rng, n);
        const auto z = random_series(rng, n);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
    }
}
