#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <wwords/dsl/parser.hpp>
#include <wwords/qseries/series.hpp>

namespace wwords::dsl
{

struct IndexRange {
    std::string name;
    long lo = 0;
    long hi = 0;
};

// One checkable relation lhs = rhs, evaluated for every point of the
// cartesian product of `ranges` at the given truncation.
struct IdentityEntry {
    std::string name;
    std::string theorem;
    std::vector<std::string> suites;
    std::size_t truncation = QSeries::exact;
    std::vector<IndexRange> ranges;
    std::string lhs_text;
    std::string rhs_text;
    NodePtr lhs;
    NodePtr rhs;
};

// Stanza format, one directive per line, '#' starts a comment:
//
//   identity NAME
//   theorem THEOREM
//   suite NAME...            optional, repeatable
//   truncation N | exact
//   range VAR LO HI          optional, repeatable
//   lhs EXPR                 indented lines continue the expression
//   rhs EXPR
//   end
inline std::vector<IdentityEntry> parse_identities(std::string_view text)
{
    std::vector<IdentityEntry> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    IdentityEntry cur;
    bool open = false;
    std::string *continuation = nullptr;
    int lhs_line = 0;
    int rhs_line = 0;
    auto fail = [&](const std::string &msg) { throw ConfigError("line " + std::to_string(line_no) + ": " + msg); };
    auto parse_side = [&](const std::string &src, int at) {
        try {
            return parse(src);
        } catch (const SyntaxError &e) {
            throw SyntaxError(at + e.line() - 1, e.column(), e.expected(), "in identity " + cur.name);
        }
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if ((line[0] == ' ' || line[0] == '\t') && continuation != nullptr) {
            *continuation += "\n" + line;
            continue;
        }
        continuation = nullptr;
        std::istringstream words(line);
        std::string key;
        words >> key;
        std::string rest;
        std::getline(words, rest);
        rest.erase(0, rest.find_first_not_of(" \t"));
        if (key == "identity") {
            if (open) {
                fail("missing 'end' before a new identity");
            }
            if (rest.empty() || rest.find(' ') != std::string::npos) {
                fail("identity needs a single name");
            }
            cur = IdentityEntry{};
            cur.name = rest;
            open = true;
            continue;
        }
        if (!open) {
            fail("'" + key + "' outside an identity stanza");
        }
        if (key == "theorem") {
            cur.theorem = rest;
        } else if (key == "suite") {
            std::istringstream names(rest);
            std::string s;
            while (names >> s) {
                cur.suites.push_back(s);
            }
        } else if (key == "truncation") {
            if (rest == "exact") {
                cur.truncation = QSeries::exact;
            } else {
                try {
                    const long n = std::stol(rest);
                    if (n < 1) {
                        fail("truncation must be at least 1");
                    }
                    cur.truncation = static_cast<std::size_t>(n);
                } catch (const std::logic_error &) {
                    fail("truncation must be a positive integer or 'exact'");
                }
            }
        } else if (key == "range") {
            std::istringstream r(rest);
            IndexRange ir;
            if (!(r >> ir.name >> ir.lo >> ir.hi) || ir.lo > ir.hi) {
                fail("range needs NAME LO HI with LO <= HI");
            }
            cur.ranges.push_back(ir);
        } else if (key == "lhs") {
            cur.lhs_text = rest;
            lhs_line = line_no;
            continuation = &cur.lhs_text;
        } else if (key == "rhs") {
            cur.rhs_text = rest;
            rhs_line = line_no;
            continuation = &cur.rhs_text;
        } else if (key == "end") {
            if (cur.theorem.empty() || cur.lhs_text.empty() || cur.rhs_text.empty()) {
                fail("identity " + cur.name + " needs theorem, lhs and rhs");
            }
            cur.lhs = parse_side(cur.lhs_text, lhs_line);
            cur.rhs = parse_side(cur.rhs_text, rhs_line);
            out.push_back(std::move(cur));
            cur = IdentityEntry{};
            open = false;
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (open) {
        fail("missing 'end'");
    }
    return out;
}

// The built-in registry: every identity checked by the suite.
inline constexpr std::string_view builtin_identity_text = R"(# Product forms of the limit series.
identity Weighted_MM
theorem Weighted_MM
suite products
truncation 61
lhs subst(glimit(M), b -> 1)
rhs poch(a*q^2, 3, inf, inv)*poch(q, 1, inf, inv)
end

identity Weighted_MM_a0
theorem Weighted_MM
suite products
truncation 61
lhs subst(glimit(M), a -> 0, b -> 1)
rhs poch(q, 1, inf, inv)
end

identity Weighted_MM_congruence
theorem Weighted_MM
suite products
truncation 61
lhs subst(subst(glimit(M), b -> 1), a -> q^-1, q -> q^2)
rhs poch(q^2, 6, inf, inv)*poch(q^3, 6, inf, inv)*poch(q^4, 6, inf, inv)*poch(q^6, 6, inf, inv)
end

identity Weighted_MM_congruence_census
theorem Weighted_MM
suite products partitions
truncation 41
lhs poch(q^2, 6, inf, inv)*poch(q^3, 6, inf, inv)*poch(q^4, 6, inf, inv)*poch(q^6, 6, inf, inv)
rhs census(cong(6, 0, 2, 3, 4))
end

identity Weighted_R
theorem Weighted_R
suite products
truncation 61
lhs subst(glimit(R), c -> 1)
rhs poch(q, 1, inf, inv)*poch(a*q, 2, inf, inv)*poch(b*q^2, 2, inf, inv)
end

identity Weighted_R2
theorem Weighted_R2
suite products
truncation 61
lhs subst(glimit(Rprime), c -> 1)
rhs poch(q, 1, inf, inv)*poch(a*q^2, 2, inf, inv)*poch(b*q, 2, inf, inv)
end

identity AU_limit
theorem AU_product
suite products
truncation 41
lhs subst(subst(glimit(M), b -> 1), a -> q^-1)
rhs poch(q, 1, inf, inv)*poch(q, 3, inf, inv)
end

# Partition censuses.
identity MacMahon_gap_vs_frequency
theorem thm_MacMahon
suite partitions
truncation 41
lhs census(macmahon_gap)
rhs census(frequency)
end

identity MacMahon_gap_vs_congruence
theorem thm_MacMahon
suite partitions
truncation 41
lhs census(macmahon_gap)
rhs census(cong(6, 0, 2, 3, 4))
end

identity MacMahon_colored_bridge
theorem thm_MacMahon
suite partitions
truncation 31
lhs subst(subst(glimit(M), b -> 1), a -> q^-1, q -> q^2)
rhs census(macmahon_gap)
end

identity Mod2_MM_refinement
theorem thm_Mod2_MM_refinement
suite partitions
truncation 31
lhs census(macmahon_gap, mark(a, 1, 2))
rhs census(cong(6, 0, 2, 3, 4), mark(a, 1, 2))
end

identity Mod3_MM_refinement
theorem thm_Mod3_MM_refinement
suite partitions
truncation 26
lhs census(macmahon_gap, mark(a, 1, 3), mark(b, 2, 3))
rhs census(cong(6, 0, 2, 3, 4), mark(a, 4, 6), mark(b, 2, 6))
end

identity Russell
theorem thm_Russell
suite partitions
truncation 41
lhs census(russell_gap)
rhs census(cong(6, 0, 1, 3, 5))
end

identity Russell_refinement
theorem thm_Russell_refinement
suite partitions
truncation 26
lhs census(russell_gap, mark(a, 1, 3), mark(b, 2, 3))
rhs census(cong(6, 0, 1, 3, 5), mark(a, 1, 6), mark(b, 5, 6))
end

identity main_comp
theorem thm_main_comp
suite partitions
truncation 31
lhs census(overpartition_companion)
rhs twocolor(2, 3)
end

identity main_comp_product
theorem thm_main_comp
suite partitions
truncation 31
lhs twocolor(2, 3)
rhs poch(q, 1, inf, inv)*poch(q^2, 3, inf, inv)
end

identity AU_product
theorem AU_product
suite partitions
truncation 26
lhs census(overpartition_au)
rhs poch(q, 1, inf, inv)*poch(q, 3, inf, inv)
end

# Relations between bounded series, denominators cleared.
identity M_coupled_a
theorem M_coupled
suite relations
truncation 40
range n 1 10
lhs (1 - a*q^(n + 1))*gseries(M, a, n + 1) - a*q^(n + 1)*gseries(M, a, n)
    - (1 - a*q^(n + 1))*gseries(M, b, n)
rhs 0
end

identity M_coupled_b
theorem M_coupled
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^(n + 1))*gseries(M, b, n + 1) - (1 - b*q^(n + 1))*gseries(M, a, n + 1)
    - b*q^(n + 1)*gseries(M, b, n)
rhs 0
end

identity M_uncoupled_a
theorem M_uncoupled
suite relations
truncation 40
range n 1 10
lhs (1 - a*q^(n + 1))*(1 - b*q^(n + 1))*(1 - a*q^(n + 2))*gseries(M, a, n + 2)
    - (1 - a*q^(n + 1))*(1 - a*b*q^(2*n + 3))*gseries(M, a, n + 1)
    + a*b*q^(2*n + 2)*(1 - a*q^(n + 2))*gseries(M, a, n)
rhs 0
end

identity M_uncoupled_b
theorem M_uncoupled
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^(n + 1))*(1 - a*q^(n + 2))*(1 - b*q^(n + 2))*gseries(M, b, n + 2)
    - (1 - b*q^(n + 1))*(1 - a*b*q^(2*n + 4))*gseries(M, b, n + 1)
    + a*b*q^(2*n + 3)*(1 - b*q^(n + 2))*gseries(M, b, n)
rhs 0
end

identity R_coupled_a
theorem R_coupled
suite relations
truncation 40
range n 1 10
lhs (1 - a*q^(n + 1))*gseries(R, a, n + 1) - gseries(R, c, n)
rhs 0
end

identity R_coupled_b
theorem R_coupled
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^(n + 1))*gseries(R, b, n + 1) - (1 - b*q^(n + 1))*gseries(R, a, n + 1)
    - b*q^(n + 1)*gseries(R, b, n)
rhs 0
end

identity R_coupled_c
theorem R_coupled
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^(n + 1))*(1 - c*q^(n + 1))*(gseries(R, c, n + 1) - gseries(R, b, n + 1))
    - b*c*q^(2*n + 2)*gseries(R, b, n) - c*q^(n + 1)*(1 - b*q^(n + 1))*gseries(R, c, n)
rhs 0
end

identity R_an_rec
theorem R_uncoupled
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^(n + 1))*(1 - c*q^(n + 1))*(1 - a*q^(n + 2))*gseries(R, a, n + 2)
    - (1 - b*c*q^(2*n + 1) - a*b*q^(2*n + 2) - a*c*q^(2*n + 2) + a*b*c*q^(3*n + 2)
       + a*b*c*q^(3*n + 3))*gseries(R, a, n + 1)
    - a*b*c*q^(3*n + 1)*gseries(R, a, n)
rhs 0
end

identity MacMahon_shift
theorem M_shift
suite relations
truncation 40
range n 1 10
lhs (1 - q^(n + 1))*(1 - a*q^2)*subst(gseries(M, a, n + 2), b -> 1)
rhs (1 - a*q^(n + 3))*subst(gseries(M, b, n), a -> a*q^3, b -> 1)
end

identity Russell_shift
theorem R_shift
suite relations
truncation 40
range n 1 10
lhs (1 - b*q^2)*(1 - a*q^(n + 1))*subst(gseries(R, b, n + 1), c -> 1)
rhs (1 - b*q^(n + 2))*subst(gseries(R, c, n), b -> b*q^2, c -> 1)
end

identity Rprime_shift
theorem Rprime_shift
suite relations
truncation 40
range n 1 10
lhs (1 - q^n)*(1 - b*q)*subst(gseries(Rprime, c, n), c -> 1)
rhs (1 - b*q^(n + 1))*subst(gseries(Rprime, a, n), b -> b*q^2, c -> 1)
end

# The h-sequences.
identity h_recurrence_vs_determinant
theorem thm_Determ
suite h
truncation exact
range n 2 15
lhs hseq(recurrence, n)
rhs hseq(determinant, n)
end

identity h_recurrence_vs_double_sum
theorem thm_Fermionic
suite h
truncation exact
range n 0 15
lhs hseq(recurrence, n)
rhs hseq(double_sum, n)
end

identity h_double_sum_expanded
theorem thm_Fermionic
suite h
truncation exact
range n 0 15
lhs hseq(recurrence, n)
rhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*a^(i + 3*j)*q^(i*(i + 1) + 3*i*j + 9*j*(j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
end

identity h_recurrence_vs_exact_division
theorem h_recurrence
suite h
truncation exact
range n 0 15
lhs hseq(recurrence, n)
rhs hseq(raw, n)
end

identity hprime_routes
theorem h_relation
suite h
truncation exact
range n 0 12
lhs hseq(prime_colored, n)
rhs hseq(prime_relation, n)
end

identity substitution_chain
theorem h_substitution
suite h
truncation 30
range n 1 12
lhs subst(gseries(M, a, n), b -> a*q)
rhs hseq(recurrence, n)/poch(a*q^2, 1, n - 1)
end

identity substitution_chain_general_b
theorem h_substitution
suite h
truncation 30
range n 1 12
lhs gseries(M, a, n)
rhs hseq(general, n)/poch(a*q^2, 1, n - 1)
end

# Finite sums.
identity eq_sum1
theorem thm_Main_Sum
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i^2 + 3*i*j + 3*j*(3*j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
rhs sum(j, 0, auto, q^(j*(3*j + 1))*poch(q^2, 3, j)*qbin(n, 3*j + 1, 1))
end

identity eq_sum2
theorem thm_Main_Sum
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i^2 + 3*i*j + 3*j*(3*j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
    - q*sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 1) + 3*i*j + 9*j*(j + 1)/2)
        *qbin(n - i - 3*j - 1, i, 1)*qbin(n - i - 2*j - 2, j, 3)))
rhs sum(j, 0, auto, q^(j*(3*j - 1))*poch(q, 3, j)*qbin(n, 3*j, 1))
end

identity eq_sum3
theorem thm_sum_big
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 1) + 3*i*j + 9*j*(j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
    - sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 2) + 3*i*j + 9*j*(j + 1)/2 + 3*j + 3)
        *qbin(n - i - 3*j - 1, i, 1)*qbin(n - i - 2*j - 2, j, 3)))
rhs sum(j, 0, auto, q^(j*(3*j - 1))*poch(q, 3, j)*qbin(n, 3*j - 1, 1))
    + sum(j, 0, auto, q^(j*(3*j + 2))*poch(q, 3, j)*qbin(n, 3*j, 1))
end

identity eq_sum1_h_bridge
theorem h_specializations
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i^2 + 3*i*j + 3*j*(3*j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
rhs subst(hseq(double_sum, n), a -> q^-1)
end

identity eq_sum2_h_bridge
theorem h_specializations
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i^2 + 3*i*j + 3*j*(3*j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
    - q*sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 1) + 3*i*j + 9*j*(j + 1)/2)
        *qbin(n - i - 3*j - 1, i, 1)*qbin(n - i - 2*j - 2, j, 3)))
rhs subst(hseq(prime_relation, n), a -> q^-1)
end

identity eq_sum3_h_bridge
theorem h_specializations
suite sums
truncation exact
range n 1 25
lhs sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 1) + 3*i*j + 9*j*(j + 1)/2)
        *qbin(n - i - 3*j, i, 1)*qbin(n - i - 2*j - 1, j, 3)))
    - sum(j, 0, auto, sum(i, 0, auto, (-1)^j*q^(i*(i + 2) + 3*i*j + 9*j*(j + 1)/2 + 3*j + 3)
        *qbin(n - i - 3*j - 1, i, 1)*qbin(n - i - 2*j - 2, j, 3)))
rhs subst(hseq(prime_relation, n), a -> 1)
end

# Bounded series against brute-force enumeration.
identity oracle_M_a
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(M, a, n)
rhs gbrute(M, a, n)
end

identity oracle_M_b
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(M, b, n)
rhs gbrute(M, b, n)
end

identity oracle_R_a
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(R, a, n)
rhs gbrute(R, a, n)
end

identity oracle_R_b
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(R, b, n)
rhs gbrute(R, b, n)
end

identity oracle_R_c
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(R, c, n)
rhs gbrute(R, c, n)
end

identity oracle_Rprime_a
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(Rprime, a, n)
rhs gbrute(Rprime, a, n)
end

identity oracle_Rprime_b
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(Rprime, b, n)
rhs gbrute(Rprime, b, n)
end

identity oracle_Rprime_c
theorem dp_oracle
suite oracle
truncation 19
range n 1 8
lhs gseries(Rprime, c, n)
rhs gbrute(Rprime, c, n)
end
)";

inline const std::vector<IdentityEntry> &builtin_identities()
{
    static const std::vector<IdentityEntry> entries = parse_identities(builtin_identity_text);
    return entries;
}

} // namespace wwords::dsl
