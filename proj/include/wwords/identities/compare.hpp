#pragma once

#include <string>
#include <utility>
#include <vector>

#include <wwords/qseries/series.hpp>
#include <wwords/report.hpp>

namespace wwords
{

// Compares two series up to the smaller order; on mismatch records the first
// differing coefficient as the witness and returns false.
inline bool compare_into(IdentityReport &report, const QSeries &lhs, const QSeries &rhs,
                         std::vector<std::pair<std::string, long>> bindings = {})
{
    if (report.verdict == Verdict::fail) {
        return false;
    }
    const auto diff = first_difference(lhs, rhs);
    if (!diff) {
        return true;
    }
    report.fail(Witness{std::move(bindings), diff, lhs[*diff].to_string(), rhs[*diff].to_string(),
                        "coefficients of q^" + std::to_string(*diff) + " differ"});
    return false;
}

// Runs `body` and turns a library error into a failing report with the error
// text as witness message.
template <class Body>
void guarded(IdentityReport &report, Body body)
{
    try {
        body();
    } catch (const Error &e) {
        report.fail(Witness{{}, std::nullopt, "", "", e.what()});
    }
}

} // namespace wwords
