#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wwords
{

enum class Verdict { pass, fail };

inline const char *verdict_name(Verdict v)
{
    return v == Verdict::pass ? "PASS" : "FAIL";
}

// Where and why a check failed: the parameter binding, the q-power of the
// first disagreeing coefficient and both sides of it.
struct Witness {
    std::vector<std::pair<std::string, long>> bindings;
    std::optional<std::size_t> q_power;
    std::string lhs;
    std::string rhs;
    std::string message;
};

struct IdentityReport {
    std::string name;
    std::string theorem;
    Verdict verdict = Verdict::pass;
    std::vector<std::pair<std::string, std::string>> parameters;
    // nullopt: checked as an exact polynomial identity
    std::optional<std::size_t> truncation;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;

    bool passed() const { return verdict == Verdict::pass; }

    void fail(Witness w)
    {
        verdict = Verdict::fail;
        witness = std::move(w);
    }
};

// One record per report. Timing is opt-in so that two runs of the same suite
// serialize to identical bytes.
inline nlohmann::ordered_json to_json(const IdentityReport &r, bool with_timing = false)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["theorem"] = r.theorem;
    j["verdict"] = verdict_name(r.verdict);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.parameters) {
        params[k] = v;
    }
    j["parameters"] = params;
    if (r.truncation) {
        j["truncation"] = *r.truncation;
    } else {
        j["truncation"] = "exact";
    }
    if (r.witness) {
        nlohmann::ordered_json w;
        nlohmann::ordered_json b = nlohmann::ordered_json::object();
        for (const auto &[k, v] : r.witness->bindings) {
            b[k] = v;
        }
        w["bindings"] = b;
        if (r.witness->q_power) {
            w["q_power"] = *r.witness->q_power;
        } else {
            w["q_power"] = nullptr;
        }
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        w["message"] = r.witness->message;
        j["witness"] = w;
    }
    if (with_timing) {
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

// Measures the wall time of a scope into a report.
class ReportTimer
{
public:
    explicit ReportTimer(IdentityReport &r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ReportTimer(const ReportTimer &) = delete;
    ReportTimer &operator=(const ReportTimer &) = delete;
    ~ReportTimer()
    {
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    IdentityReport &report_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace wwords
