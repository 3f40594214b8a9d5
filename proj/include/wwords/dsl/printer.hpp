#pragma once

#include <string>

#include <wwords/dsl/ast.hpp>

namespace wwords::dsl
{

namespace detail
{

// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
inline int precedence(const Node &n)
{
    switch (n.kind) {
    case NodeKind::add:
    case NodeKind::subtract:
        return 1;
    case NodeKind::multiply:
    case NodeKind::divide:
        return 2;
    case NodeKind::negate:
        return 3;
    case NodeKind::power:
        return 4;
    case NodeKind::mapping:
        return 0;
    default:
        return 5;
    }
}

inline std::string print_at(const Node &n, int min_prec);

inline std::string print_exponent(const Node &n)
{
    if (n.kind == NodeKind::negate) {
        return "-" + print_exponent(*n.args[0]);
    }
    return print_at(n, 5);
}

inline std::string print_node(const Node &n)
{
    switch (n.kind) {
    case NodeKind::integer:
        return n.value.str();
    case NodeKind::name:
        return n.text;
    case NodeKind::negate:
        return "-" + print_at(*n.args[0], 3);
    case NodeKind::add:
        return print_at(*n.args[0], 1) + " + " + print_at(*n.args[1], 2);
    case NodeKind::subtract:
        return print_at(*n.args[0], 1) + " - " + print_at(*n.args[1], 2);
    case NodeKind::multiply:
        return print_at(*n.args[0], 2) + "*" + print_at(*n.args[1], 3);
    case NodeKind::divide:
        return print_at(*n.args[0], 2) + "/" + print_at(*n.args[1], 3);
    case NodeKind::power:
        return print_at(*n.args[0], 5) + "^" + print_exponent(*n.args[1]);
    case NodeKind::mapping:
        return print_at(*n.args[0], 1) + " -> " + print_at(*n.args[1], 1);
    case NodeKind::call: {
        std::string s = n.text + "(";
        for (std::size_t i = 0; i < n.args.size(); ++i) {
            s += (i == 0 ? "" : ", ") + print_at(*n.args[i], 0);
        }
        return s + ")";
    }
    }
    return {};
}

// Parenthesizes n when it binds more loosely than min_prec.
inline std::string print_at(const Node &n, int min_prec)
{
    const std::string s = print_node(n);
    return precedence(n) < min_prec ? "(" + s + ")" : s;
}

} // namespace detail

inline std::string pretty_print(const Node &n)
{
    return detail::print_at(n, 0);
}

} // namespace wwords::dsl
