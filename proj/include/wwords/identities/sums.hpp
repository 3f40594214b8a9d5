#pragma once

#include <vector>

#include <wwords/identities/compare.hpp>
#include <wwords/identities/hsequence.hpp>

namespace wwords
{

namespace detail
{

// sum_j q^(e(j)) (q^z0; q^3)_j [n over 3j + d]_q
inline HPoly single_sum(long n, long z0, long d, long (*e)(long))
{
    HPoly total = QSeries::constant(0);
    for (long j = 0; 3 * j + d <= n; ++j) {
        const QPolynomial b = qbinom_tb(n, 3 * j + d, 1);
        if (b.is_zero()) {
            continue;
        }
        const QPolynomial p = pochhammer_poly(1, z0, 3, j);
        total += (p * b).to_series().times(QTerm{1, {}, e(j)});
    }
    return total;
}

inline long fermi_a1(long i, long j)
{
    return i * i + 3 * i * j + 3 * j * (3 * j + 1) / 2;
}

inline long fermi_h(long i, long j)
{
    return i * (i + 1) + 3 * i * j + 9 * j * (j + 1) / 2;
}

} // namespace detail

enum class SumIdentity { eq_sum1, eq_sum2, eq_sum3 };

inline const char *sum_identity_name(SumIdentity s)
{
    switch (s) {
    case SumIdentity::eq_sum1:
        return "eq_sum1";
    case SumIdentity::eq_sum2:
        return "eq_sum2";
    case SumIdentity::eq_sum3:
        return "eq_sum3";
    }
    return "";
}

inline HPoly sum_lhs(SumIdentity s, long n)
{
    switch (s) {
    case SumIdentity::eq_sum1:
        return fermionic_sum(n, 0, detail::fermi_a1, false);
    case SumIdentity::eq_sum2:
        return fermionic_sum(n, 0, detail::fermi_a1, false)
               - fermionic_sum(n, 1, detail::fermi_h, false).times(QTerm{1, {}, 1});
    case SumIdentity::eq_sum3:
        return fermionic_sum(n, 0, detail::fermi_h, false)
               - fermionic_sum(
                   n, 1, [](long i, long j) { return i * (i + 2) + 3 * i * j + 9 * j * (j + 1) / 2 + 3 * j + 3; },
                   false);
    }
    return {};
}

inline HPoly sum_rhs(SumIdentity s, long n)
{
    switch (s) {
    case SumIdentity::eq_sum1:
        return detail::single_sum(n, 2, 1, [](long j) { return j * (3 * j + 1); });
    case SumIdentity::eq_sum2:
        return detail::single_sum(n, 1, 0, [](long j) { return j * (3 * j - 1); });
    case SumIdentity::eq_sum3:
        return detail::single_sum(n, 1, -1, [](long j) { return j * (3 * j - 1); })
               + detail::single_sum(n, 1, 0, [](long j) { return j * (3 * j + 2); });
    }
    return {};
}

// The left sides as specializations of the h-sequences: eq_sum1 is h_n(1/q;q),
// eq_sum2 is h'_n(1/q;q) and eq_sum3 is h'_n(1;q).
inline HPoly sum_lhs_from_h(SumIdentity s, long n)
{
    switch (s) {
    case SumIdentity::eq_sum1:
        return set_a_to_q_power(h_via_double_sum(n), -1);
    case SumIdentity::eq_sum2:
        return set_a_to_q_power(hprime(n, HPrimeRoute::relation), -1);
    case SumIdentity::eq_sum3:
        return set_a_to_q_power(hprime(n, HPrimeRoute::relation), 0);
    }
    return {};
}

inline IdentityReport verify_sum_identity(SumIdentity s, long n_lo, long n_hi)
{
    IdentityReport r;
    r.name = sum_identity_name(s);
    r.theorem = s == SumIdentity::eq_sum3 ? "thm_sum_big" : "thm_Main_Sum";
    r.parameters = {{"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)}};
    ReportTimer timer(r);
    guarded(r, [&] {
        for (long n = n_lo; n <= n_hi; ++n) {
            if (!compare_into(r, sum_lhs(s, n), sum_rhs(s, n), {{"n", n}})) {
                return;
            }
        }
    });
    return r;
}

// Checks that each left side equals its h-sequence specialization.
inline IdentityReport verify_sum_h_bridge(SumIdentity s, long n_lo, long n_hi)
{
    IdentityReport r;
    r.name = std::string(sum_identity_name(s)) + "_h_bridge";
    r.theorem = "h_specializations";
    r.parameters = {{"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)}};
    ReportTimer timer(r);
    guarded(r, [&] {
        for (long n = n_lo; n <= n_hi; ++n) {
            if (!compare_into(r, sum_lhs(s, n), sum_lhs_from_h(s, n), {{"n", n}})) {
                return;
            }
        }
    });
    return r;
}

inline std::vector<IdentityReport> verify_sum_identities(long n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    std::vector<IdentityReport> out;
    for (auto s : {SumIdentity::eq_sum1, SumIdentity::eq_sum2, SumIdentity::eq_sum3}) {
        out.push_back(verify_sum_identity(s, 1, n_max));
    }
    return out;
}

} // namespace wwords
