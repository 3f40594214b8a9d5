#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <wwords/colored/transition_system.hpp>

namespace wwords
{

// Reads transition systems from text:
//
//   system NAME
//   colors a b c
//   matrix
//   0 1 1
//   1 0 2
//   1 0 0
//   exclude b1
//   end
//
// `exclude` takes any number of symbols and may repeat. `#` starts a comment.
// Systems read this way are never marked validated.
inline std::vector<TransitionSystem> parse_systems(std::string_view text)
{
    std::vector<TransitionSystem> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    auto fail = [&](const std::string &msg) -> SystemFormatError {
        return SystemFormatError("line " + std::to_string(lineno) + ": " + msg);
    };

    bool open = false;
    bool in_matrix = false;
    std::string name;
    std::vector<Marker> colors;
    std::vector<std::vector<long>> matrix;
    std::vector<std::string> excluded;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string head;
        if (!(words >> head)) {
            continue;
        }
        if (!open) {
            if (head != "system") {
                throw fail("expected 'system', found '" + head + "'");
            }
            if (!(words >> name)) {
                throw fail("system needs a name");
            }
            open = true;
            in_matrix = false;
            colors.clear();
            matrix.clear();
            excluded.clear();
            continue;
        }
        if (head == "end") {
            if (colors.empty()) {
                throw fail("system " + name + " has no colors line");
            }
            TransitionSystem probe(name, colors, matrix);
            std::vector<Symbol> ex;
            for (const auto &s : excluded) {
                ex.push_back(probe.symbol(s));
            }
            out.emplace_back(name, colors, matrix, ex, false);
            open = false;
            continue;
        }
        if (head == "colors") {
            std::string c;
            while (words >> c) {
                const auto m = c.size() == 1 ? marker_from_name(c[0]) : std::nullopt;
                if (!m) {
                    throw UnknownColor("line " + std::to_string(lineno) + ": color '" + c
                                       + "' is not one of the markers a, b, c");
                }
                colors.push_back(*m);
            }
            in_matrix = false;
            continue;
        }
        if (head == "matrix") {
            in_matrix = true;
            continue;
        }
        if (head == "exclude") {
            std::string s;
            while (words >> s) {
                excluded.push_back(s);
            }
            in_matrix = false;
            continue;
        }
        if (in_matrix) {
            std::istringstream row(line);
            std::vector<long> r;
            std::string v;
            while (row >> v) {
                try {
                    std::size_t used = 0;
                    r.push_back(std::stol(v, &used));
                    if (used != v.size()) {
                        throw std::invalid_argument(v);
                    }
                } catch (const std::exception &) {
                    throw fail("matrix entry '" + v + "' is not an integer");
                }
            }
            matrix.push_back(std::move(r));
            continue;
        }
        throw fail("unexpected '" + head + "'");
    }
    if (open) {
        throw fail("system " + name + " is missing 'end'");
    }
    return out;
}

// Named transition systems. M, R and Rprime are always present.
class SystemRegistry
{
public:
    SystemRegistry()
    {
        add(system_M());
        add(system_R());
        add(system_Rprime());
    }

    void add(const TransitionSystem &ts) { systems_.insert_or_assign(ts.name(), ts); }

    void load(std::string_view text)
    {
        for (const auto &ts : parse_systems(text)) {
            add(ts);
        }
    }

    bool contains(const std::string &name) const { return systems_.count(name) > 0; }

    const TransitionSystem &get(const std::string &name) const
    {
        auto it = systems_.find(name);
        if (it == systems_.end()) {
            throw UnresolvedSequenceTag("no transition system named '" + name + "'");
        }
        return it->second;
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> n;
        for (const auto &[k, v] : systems_) {
            n.push_back(k);
        }
        return n;
    }

private:
    std::map<std::string, TransitionSystem> systems_;
};

} // namespace wwords
