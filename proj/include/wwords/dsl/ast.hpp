#pragma once

#include <memory>
#include <string>
#include <vector>

#include <wwords/qseries/marker_poly.hpp>

namespace wwords::dsl
{

enum class NodeKind {
    integer,  // value
    name,     // text: marker, q, index variable or keyword argument
    negate,   // args[0]
    add,      // args[0] + args[1]
    subtract, // args[0] - args[1]
    multiply, // args[0] * args[1]
    divide,   // args[0] / args[1]
    power,    // args[0] ^ args[1]
    call,     // text(args...)
    mapping,  // args[0] -> args[1], only as a subst argument
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::integer;
    BigInt value = 0;
    std::string text;
    std::vector<NodePtr> args;
    int line = 1;
    int column = 1;

    // Structural equality; positions are ignored.
    friend bool operator==(const Node &x, const Node &y)
    {
        if (x.kind != y.kind || x.value != y.value || x.text != y.text || x.args.size() != y.args.size()) {
            return false;
        }
        for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (!(*x.args[i] == *y.args[i])) {
                return false;
            }
        }
        return true;
    }
};

inline NodePtr make_node(NodeKind kind, std::vector<NodePtr> args, int line, int column, std::string text = {},
                         BigInt value = 0)
{
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->args = std::move(args);
    n->line = line;
    n->column = column;
    n->text = std::move(text);
    n->value = std::move(value);
    return n;
}

// Built-in functions and their accepted argument counts (max < 0: unbounded).
struct FunctionSignature {
    const char *name;
    int min_args;
    int max_args;
};

inline const std::vector<FunctionSignature> &function_table()
{
    static const std::vector<FunctionSignature> table{
        {"poch", 3, 4},    {"qbin", 3, 3},   {"gseries", 3, 3}, {"gbrute", 3, 3},
        {"glimit", 1, 1},  {"subst", 2, -1}, {"sum", 4, 4},     {"hseq", 2, 2},
        {"census", 1, -1}, {"mark", 3, 3},   {"cong", 2, -1},   {"twocolor", 2, 2},
    };
    return table;
}

inline const FunctionSignature *find_function(const std::string &name)
{
    for (const auto &f : function_table()) {
        if (name == f.name) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace wwords::dsl
