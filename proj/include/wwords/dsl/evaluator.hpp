#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <wwords/colored/enumerate.hpp>
#include <wwords/colored/generating.hpp>
#include <wwords/colored/system_io.hpp>
#include <wwords/dsl/ast.hpp>
#include <wwords/dsl/printer.hpp>
#include <wwords/identities/hsequence.hpp>
#include <wwords/identities/partition_theorems.hpp>
#include <wwords/partitions/census.hpp>
#include <wwords/qseries.hpp>

namespace wwords::dsl
{

using Bindings = std::map<std::string, BigInt>;

// An evaluated expression: an integer scalar or a series.
using Value = std::variant<BigInt, QSeries>;

// Auto sums without a termination proof stop after this many zero terms.
inline constexpr long auto_sum_zero_run = 8;
inline constexpr long auto_sum_limit = 100000;

class Evaluator
{
public:
    explicit Evaluator(const SystemRegistry &systems = default_systems()) : systems_(&systems) {}

    static const SystemRegistry &default_systems()
    {
        static const SystemRegistry r;
        return r;
    }

    // Series value of `n` correct below q^order (order may be exact).
    QSeries series(const Node &n, const Bindings &b, std::size_t order)
    {
        Bindings local = b;
        return as_series(eval(n, local, order), order);
    }

    // Integer value of `n`; series-valued expressions are rejected.
    BigInt integer(const Node &n, const Bindings &b)
    {
        Bindings local = b;
        return as_integer(eval(n, local, QSeries::exact), n);
    }

private:
    const SystemRegistry *systems_;
    std::map<std::string, QSeries> cache_;

    [[noreturn]] static void error(const Node &n, const std::string &what)
    {
        throw EvaluationError(what + " at " + std::to_string(n.line) + ":" + std::to_string(n.column));
    }

    static QSeries as_series(const Value &v, std::size_t order)
    {
        if (const auto *i = std::get_if<BigInt>(&v)) {
            return QSeries::constant(*i, order);
        }
        const auto &s = std::get<QSeries>(v);
        return order < s.order() ? s.truncated(order) : s;
    }

    static BigInt as_integer(const Value &v, const Node &n)
    {
        if (const auto *i = std::get_if<BigInt>(&v)) {
            return *i;
        }
        error(n, "expected an integer, got a series");
    }

    static long to_long(const BigInt &v, const Node &n)
    {
        if (v > BigInt(1L << 40) || v < -BigInt(1L << 40)) {
            error(n, "integer out of range");
        }
        return static_cast<long>(v);
    }

    long small(const Node &n, Bindings &b) { return to_long(as_integer(eval(n, b, QSeries::exact), n), n); }

    static const std::string &name_of(const Node &n, const char *what)
    {
        if (n.kind != NodeKind::name) {
            error(n, std::string("expected ") + what);
        }
        return n.text;
    }

    Value eval(const Node &n, Bindings &b, std::size_t order)
    {
        switch (n.kind) {
        case NodeKind::integer:
            return n.value;
        case NodeKind::name:
            return eval_name(n, b, order);
        case NodeKind::negate: {
            Value v = eval(*n.args[0], b, order);
            if (auto *i = std::get_if<BigInt>(&v)) {
                return BigInt(-*i);
            }
            return -std::get<QSeries>(v);
        }
        case NodeKind::add:
        case NodeKind::subtract:
        case NodeKind::multiply:
            return arithmetic(n, b, order);
        case NodeKind::divide:
            return divide(n, b, order);
        case NodeKind::power:
            return power(n, b, order);
        case NodeKind::call:
            return call(n, b, order);
        case NodeKind::mapping:
            error(n, "a mapping is only valid as a subst argument");
        }
        error(n, "unknown node");
    }

    static Value eval_name(const Node &n, const Bindings &b, std::size_t order)
    {
        if (n.text.size() == 1) {
            if (n.text == "q") {
                return QSeries::term(QTerm{1, {}, 1}, order);
            }
            if (auto m = marker_from_name(n.text[0])) {
                return QSeries::term(QTerm{1, Monomial::of(*m), 0}, order);
            }
        }
        auto it = b.find(n.text);
        if (it == b.end()) {
            throw UnknownIdentifier("'" + n.text + "' is not bound at " + std::to_string(n.line) + ":"
                                    + std::to_string(n.column));
        }
        return it->second;
    }

    Value arithmetic(const Node &n, Bindings &b, std::size_t order)
    {
        Value x = eval(*n.args[0], b, order);
        Value y = eval(*n.args[1], b, order);
        const auto *xi = std::get_if<BigInt>(&x);
        const auto *yi = std::get_if<BigInt>(&y);
        if (xi && yi) {
            switch (n.kind) {
            case NodeKind::add:
                return BigInt(*xi + *yi);
            case NodeKind::subtract:
                return BigInt(*xi - *yi);
            default:
                return BigInt(*xi * *yi);
            }
        }
        QSeries xs = as_series(x, QSeries::exact);
        QSeries ys = as_series(y, QSeries::exact);
        switch (n.kind) {
        case NodeKind::add:
            return xs + ys;
        case NodeKind::subtract:
            return xs - ys;
        default:
            return as_series(xs * ys, order);
        }
    }

    Value divide(const Node &n, Bindings &b, std::size_t order)
    {
        Value x = eval(*n.args[0], b, order);
        Value y = eval(*n.args[1], b, order);
        const auto *xi = std::get_if<BigInt>(&x);
        const auto *yi = std::get_if<BigInt>(&y);
        if (xi && yi) {
            if (*yi == 0 || *xi % *yi != 0) {
                error(n, "integer division " + xi->str() + "/" + yi->str() + " is not exact");
            }
            return BigInt(*xi / *yi);
        }
        return as_series(as_series(x, order) / as_series(y, order), order);
    }

    Value power(const Node &n, Bindings &b, std::size_t order)
    {
        const long e = small(*n.args[1], b);
        const Node &base = *n.args[0];
        if (base.kind == NodeKind::name && base.text == "q") {
            if (e < 0) {
                throw NegativeExponent("q^" + std::to_string(e) + " at " + std::to_string(n.line) + ":"
                                       + std::to_string(n.column));
            }
            return QSeries::term(QTerm{1, {}, e}, order);
        }
        Value v = eval(base, b, order);
        if (const auto *i = std::get_if<BigInt>(&v)) {
            if (e < 0) {
                if (*i == 1 || *i == -1) {
                    return BigInt(e % 2 == 0 ? 1 : *i);
                }
                error(n, "negative power of an integer");
            }
            return BigInt(boost::multiprecision::pow(*i, static_cast<unsigned>(e)));
        }
        QSeries s = std::get<QSeries>(v);
        QSeries acc = QSeries::constant(1, order);
        for (long k = 0; k < (e < 0 ? -e : e); ++k) {
            acc = as_series(acc * s, order);
        }
        if (e < 0) {
            return as_series(QSeries::constant(1, order) / (order == QSeries::exact ? acc : acc.truncated(order)),
                             order);
        }
        return acc;
    }

    // Image of a marker or of q: 0, or +-1 * monomial * q^k with any integer k.
    MarkerImage image(const Node &n, Bindings &b)
    {
        switch (n.kind) {
        case NodeKind::integer:
            if (n.value == 0) {
                return MarkerImage::vanish();
            }
            if (n.value == 1) {
                return MarkerImage::one();
            }
            break;
        case NodeKind::name:
            if (n.text == "q") {
                return MarkerImage::of({}, 1);
            }
            if (n.text.size() == 1) {
                if (auto m = marker_from_name(n.text[0])) {
                    return MarkerImage::identity(*m);
                }
            }
            break;
        case NodeKind::multiply: {
            const MarkerImage x = image(*n.args[0], b);
            const MarkerImage y = image(*n.args[1], b);
            if (x.zero || y.zero) {
                return MarkerImage::vanish();
            }
            return MarkerImage::of(x.monomial * y.monomial, x.q_shift + y.q_shift);
        }
        case NodeKind::power: {
            const MarkerImage x = image(*n.args[0], b);
            const long e = small(*n.args[1], b);
            if (x.zero) {
                return e > 0 ? MarkerImage::vanish() : MarkerImage::one();
            }
            if (e < 0 && x.monomial != Monomial{}) {
                break;
            }
            return MarkerImage::of(x.monomial.pow(static_cast<std::uint64_t>(e < 0 ? 0 : e)), x.q_shift * e);
        }
        default:
            break;
        }
        error(n, "a substitution image must be 0, 1 or a product of markers and powers of q");
    }

    static std::string key_of(const MarkerImage &m)
    {
        return m.zero ? "0" : m.monomial.to_string() + "q" + std::to_string(m.q_shift);
    }

    const TransitionSystem &system(const Node &n)
    {
        const std::string &name = name_of(n, "a transition system name");
        if (!systems_->contains(name)) {
            throw UnresolvedSequenceTag("no transition system named '" + name + "' at " + std::to_string(n.line)
                                        + ":" + std::to_string(n.column));
        }
        return systems_->get(name);
    }

    // Bounded or limit series, cached across evaluations.
    QSeries colored(const Node &n, Bindings &b, std::size_t order, const std::array<MarkerImage, 3> &images)
    {
        if (order == QSeries::exact) {
            throw ExactModeUnsupported(n.text + " needs a truncation order");
        }
        const TransitionSystem &ts = system(*n.args[0]);
        Symbol bound = ts.top_of_level(static_cast<long>(order));
        if (n.text != "glimit") {
            const std::string &color = name_of(*n.args[1], "a color name");
            if (color.size() != 1) {
                throw UnknownColor("'" + color + "' is not a color");
            }
            bound = Symbol{ts.color_index(color[0]), small(*n.args[2], b)};
        }
        std::string key = n.text + "|" + ts.name() + "|" + std::to_string(bound.color) + "|"
                          + std::to_string(bound.level) + "|" + std::to_string(order);
        for (const auto &img : images) {
            key += "|" + key_of(img);
        }
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            return it->second;
        }
        QSeries s;
        if (n.text == "gbrute") {
            s = census(ts, enumerate_bounded(ts, bound, static_cast<long>(order) - 1), order);
            Substitution sub;
            sub.images = images;
            s = substitute(s, sub, order);
        } else {
            s = series_bounded(ts, bound, order, weights_under(ts, images));
        }
        return cache_.emplace(key, std::move(s)).first->second;
    }

    Value call(const Node &n, Bindings &b, std::size_t order)
    {
        const std::string &f = n.text;
        const auto &args = n.args;
        if (f == "poch") {
            return poch(n, b, order);
        }
        if (f == "qbin") {
            return qbinom_tb(small(*args[0], b), small(*args[1], b), small(*args[2], b)).to_series(order);
        }
        if (f == "gseries" || f == "glimit" || f == "gbrute") {
            return colored(n, b, order,
                           {MarkerImage::identity(Marker::a), MarkerImage::identity(Marker::b),
                            MarkerImage::identity(Marker::c)});
        }
        if (f == "subst") {
            return subst(n, b, order);
        }
        if (f == "sum") {
            return finite_sum(n, b, order);
        }
        if (f == "hseq") {
            return as_series(hseq(n, b, order), order);
        }
        if (f == "census") {
            return census_call(n, b, order);
        }
        if (f == "twocolor") {
            if (order == QSeries::exact) {
                throw ExactModeUnsupported("twocolor needs a truncation order");
            }
            return two_color_series(small(*args[0], b), small(*args[1], b), order);
        }
        error(n, f + " is only valid as a census argument");
    }

    Value poch(const Node &n, Bindings &b, std::size_t order)
    {
        const QSeries base = as_series(eval(*n.args[0], b, QSeries::exact), QSeries::exact);
        const auto deg = base.degree();
        if (!deg || base[*deg].terms().size() != 1 || base.stored_size() == 0) {
            error(*n.args[0], "the base of poch must be a single term");
        }
        for (std::size_t i = 0; i < *deg; ++i) {
            if (!base[i].is_zero()) {
                error(*n.args[0], "the base of poch must be a single term");
            }
        }
        const auto &[mono, coef] = base[*deg].terms().front();
        const QTerm z{coef, mono, static_cast<long>(*deg)};
        const long step = small(*n.args[1], b);
        std::optional<long> count;
        const Node &cnt = *n.args[2];
        if (!(cnt.kind == NodeKind::name && cnt.text == "inf")) {
            count = small(cnt, b);
        }
        bool inverse = false;
        if (n.args.size() == 4) {
            if (name_of(*n.args[3], "'inv'") != "inv") {
                error(*n.args[3], "expected 'inv'");
            }
            inverse = true;
        }
        if (!count && order == QSeries::exact) {
            throw ExactModeUnsupported("an infinite product needs a truncation order");
        }
        if (count && !inverse) {
            return pochhammer(z, step, count, QSeries::exact);
        }
        return pochhammer(z, step, count, order, inverse);
    }

    Value subst(const Node &n, Bindings &b, std::size_t order)
    {
        Substitution s;
        for (std::size_t i = 1; i < n.args.size(); ++i) {
            const Node &m = *n.args[i];
            if (m.kind != NodeKind::mapping) {
                error(m, "expected a mapping 'x -> image'");
            }
            const std::string &target = name_of(*m.args[0], "a marker or q");
            const MarkerImage img = image(*m.args[1], b);
            if (target == "q") {
                if (img.zero || img.monomial != Monomial{} || img.q_shift < 1) {
                    error(*m.args[1], "q must map to a positive power of q");
                }
                s.q_power = img.q_shift;
                continue;
            }
            const auto marker = target.size() == 1 ? marker_from_name(target[0]) : std::nullopt;
            if (!marker) {
                error(*m.args[0], "only a, b, c and q can be substituted");
            }
            s.map(*marker, img);
        }
        const Node &inner = *n.args[0];
        // Weights with non-negative shifts fold into the colored recursion.
        const bool fusable = s.q_power == 1 && !s.has_negative_shift() && inner.kind == NodeKind::call
                             && (inner.text == "gseries" || inner.text == "glimit");
        if (fusable) {
            return colored(inner, b, order, s.images);
        }
        for (auto m : all_markers) {
            s.valuation[static_cast<int>(m)] = valuation(inner, m);
        }
        const std::size_t in_order = order == QSeries::exact ? order : s.required_input_order(order);
        const QSeries x = as_series(eval(inner, b, in_order), in_order);
        return substitute(x, s, x.is_exact() ? std::optional<std::size_t>{} : std::optional<std::size_t>{order});
    }

    // A lower bound v such that every occurrence of m^k in the value of n comes
    // with at least q^(v k). Colored series start at the lowest admissible
    // level of each color; substitutions with non-negative shifts that leave
    // m in place keep the bound. Anything else falls back to 1.
    long valuation(const Node &n, Marker m)
    {
        if (n.kind != NodeKind::call) {
            return 1;
        }
        if (n.text == "gseries" || n.text == "glimit" || n.text == "gbrute") {
            const TransitionSystem &ts = system(*n.args[0]);
            long best = 0;
            for (std::size_t x = 0; x < ts.num_colors(); ++x) {
                if (ts.marker(x) != m) {
                    continue;
                }
                long level = 1;
                while (ts.is_excluded(Symbol{x, level})) {
                    ++level;
                }
                best = best == 0 ? level : std::min(best, level);
            }
            return best == 0 ? 1 : best;
        }
        if (n.text != "subst") {
            return 1;
        }
        long q_power = 1;
        for (std::size_t i = 1; i < n.args.size(); ++i) {
            const Node &map = *n.args[i];
            if (map.kind != NodeKind::mapping || map.args[0]->kind != NodeKind::name) {
                return 1;
            }
            const std::string &target = map.args[0]->text;
            Bindings none;
            MarkerImage img;
            try {
                img = image(*map.args[1], none);
            } catch (const Error &) {
                return 1;
            }
            if (target == "q") {
                q_power = img.q_shift;
                continue;
            }
            const bool is_m = target.size() == 1 && marker_from_name(target[0]) == m;
            if (img.zero) {
                continue;
            }
            if (img.q_shift < 0 || (!is_m && img.monomial.exponent(m) > 0)) {
                return 1;
            }
            if (is_m && img.monomial != Monomial::of(m)) {
                return 1;
            }
        }
        // the m image is m q^s with s >= 0 and q -> q^k scales the rest
        return std::max(1L, valuation(*n.args[0], m) * q_power);
    }

    // Affine form sum coeff[v] * v + constant over the given variables; other
    // names must be bound.
    struct Affine {
        std::map<std::string, BigInt> coeff;
        BigInt constant = 0;
    };

    std::optional<Affine> affine(const Node &n, const Bindings &b, const std::vector<std::string> &vars)
    {
        switch (n.kind) {
        case NodeKind::integer:
            return Affine{{}, n.value};
        case NodeKind::name: {
            if (std::find(vars.begin(), vars.end(), n.text) != vars.end()) {
                return Affine{{{n.text, BigInt(1)}}, 0};
            }
            auto it = b.find(n.text);
            if (it == b.end()) {
                return std::nullopt;
            }
            return Affine{{}, it->second};
        }
        case NodeKind::negate: {
            auto x = affine(*n.args[0], b, vars);
            if (x) {
                for (auto &[k, v] : x->coeff) {
                    v = -v;
                }
                x->constant = -x->constant;
            }
            return x;
        }
        case NodeKind::add:
        case NodeKind::subtract: {
            auto x = affine(*n.args[0], b, vars);
            auto y = affine(*n.args[1], b, vars);
            if (!x || !y) {
                return std::nullopt;
            }
            const int sign = n.kind == NodeKind::add ? 1 : -1;
            for (const auto &[k, v] : y->coeff) {
                x->coeff[k] += sign * v;
            }
            x->constant += sign * y->constant;
            return x;
        }
        case NodeKind::multiply: {
            auto x = affine(*n.args[0], b, vars);
            auto y = affine(*n.args[1], b, vars);
            if (!x || !y) {
                return std::nullopt;
            }
            if (!x->coeff.empty() && !y->coeff.empty()) {
                bool xconst = true;
                for (const auto &[k, v] : x->coeff) {
                    xconst = xconst && v == 0;
                }
                if (!xconst) {
                    std::swap(x, y);
                }
            }
            for (const auto &[k, v] : x->coeff) {
                if (v != 0) {
                    return std::nullopt;
                }
            }
            for (auto &[k, v] : y->coeff) {
                v *= x->constant;
            }
            y->constant *= x->constant;
            return y;
        }
        default:
            return std::nullopt;
        }
    }

    // Conditions `form < 0` under which the body is zero, as affine forms in
    // `var` with every nested sum index eliminated by its lower bound.
    void vanishing_forms(const Node &n, const Bindings &b, const std::string &var, std::vector<std::string> inner,
                         std::vector<std::pair<std::string, BigInt>> &lowers, std::vector<Affine> &out)
    {
        if (n.kind == NodeKind::multiply) {
            vanishing_forms(*n.args[0], b, var, inner, lowers, out);
            vanishing_forms(*n.args[1], b, var, inner, lowers, out);
            return;
        }
        if (n.kind == NodeKind::negate) {
            vanishing_forms(*n.args[0], b, var, inner, lowers, out);
            return;
        }
        if (n.kind != NodeKind::call) {
            return;
        }
        if (n.text == "sum" && n.args[0]->kind == NodeKind::name) {
            // the nested index must start at a constant
            auto lo = affine(*n.args[1], b, {});
            if (!lo) {
                return;
            }
            inner.push_back(n.args[0]->text);
            lowers.emplace_back(n.args[0]->text, lo->constant);
            vanishing_forms(*n.args[3], b, var, inner, lowers, out);
            lowers.pop_back();
            return;
        }
        if (n.text != "qbin") {
            return;
        }
        std::vector<std::string> vars = inner;
        vars.push_back(var);
        auto top = affine(*n.args[0], b, vars);
        auto bottom = affine(*n.args[1], b, vars);
        if (!top || !bottom) {
            return;
        }
        Affine diff = *top;
        for (const auto &[k, v] : bottom->coeff) {
            diff.coeff[k] -= v;
        }
        diff.constant -= bottom->constant;
        for (Affine f : {diff, *bottom}) {
            // Over nested indices i >= lo the form is largest at i = lo when
            // its i coefficient is non-positive.
            bool usable = true;
            for (const auto &[name, lo] : lowers) {
                const BigInt c = f.coeff.count(name) ? f.coeff[name] : BigInt(0);
                if (c > 0) {
                    usable = false;
                }
                f.constant += c * lo;
                f.coeff.erase(name);
            }
            if (usable) {
                out.push_back(std::move(f));
            }
        }
    }

    // Smallest k >= lo past which every term is proven zero, if any.
    std::optional<long> proven_end(const Node &n, const Bindings &b, const std::string &var, long lo)
    {
        std::vector<Affine> forms;
        std::vector<std::pair<std::string, BigInt>> lowers;
        vanishing_forms(*n.args[3], b, var, {}, lowers, forms);
        std::optional<long> best;
        for (const auto &f : forms) {
            const BigInt slope = f.coeff.count(var) ? f.coeff.at(var) : BigInt(0);
            if (slope >= 0) {
                continue;
            }
            // f(k) = slope * k + constant < 0  <=>  k > constant / (-slope)
            const BigInt c = f.constant;
            const BigInt s = -slope;
            BigInt floor = c / s;
            if (c % s != 0 && c < 0) {
                floor -= 1;
            }
            BigInt k = floor + 1;
            if (k < lo) {
                k = lo;
            }
            const long kk = to_long(k, n);
            if (!best || kk < *best) {
                best = kk;
            }
        }
        return best;
    }

    Value finite_sum(const Node &n, Bindings &b, std::size_t order)
    {
        const std::string &var = name_of(*n.args[0], "an index name");
        if (var.size() == 1 && (var == "q" || marker_from_name(var[0]))) {
            error(*n.args[0], "'" + var + "' cannot be a summation index");
        }
        const long lo = small(*n.args[1], b);
        const Node &upper = *n.args[2];
        const bool automatic = upper.kind == NodeKind::name && upper.text == "auto";
        std::optional<long> hi;
        std::optional<long> proven;
        if (!automatic) {
            hi = small(upper, b);
        } else {
            proven = proven_end(n, b, var, lo);
        }
        const auto saved = b.find(var) == b.end() ? std::nullopt : std::optional<BigInt>(b[var]);
        Value total = BigInt(0);
        long zero_run = 0;
        for (long k = lo;; ++k) {
            if (hi && k > *hi) {
                break;
            }
            if (proven && k >= *proven) {
                break;
            }
            if (automatic && !proven && zero_run >= auto_sum_zero_run) {
                break;
            }
            if (k - lo > auto_sum_limit) {
                error(n, "sum did not terminate");
            }
            b[var] = k;
            Value term = eval(*n.args[3], b, order);
            const bool zero = std::holds_alternative<BigInt>(term) ? std::get<BigInt>(term) == 0
                                                                    : std::get<QSeries>(term).is_zero();
            zero_run = zero ? zero_run + 1 : 0;
            if (std::holds_alternative<BigInt>(total) && std::holds_alternative<BigInt>(term)) {
                total = BigInt(std::get<BigInt>(total) + std::get<BigInt>(term));
            } else {
                total = as_series(total, QSeries::exact) + as_series(term, QSeries::exact);
            }
        }
        if (saved) {
            b[var] = *saved;
        } else {
            b.erase(var);
        }
        return total;
    }

    QSeries hseq(const Node &n, Bindings &b, std::size_t order)
    {
        const std::string &route = name_of(*n.args[0], "an h route");
        const long k = small(*n.args[1], b);
        if (route == "recurrence") {
            return h_via_recurrence(k, HMode::b_eq_aq);
        }
        if (route == "raw") {
            return h_via_recurrence(k, HMode::raw_b_eq_aq);
        }
        if (route == "general") {
            return h_via_recurrence(k, HMode::general_b, order);
        }
        if (route == "determinant") {
            return h_via_determinant(k);
        }
        if (route == "double_sum") {
            return h_via_double_sum(k);
        }
        if (route == "prime_colored") {
            return hprime(k, HPrimeRoute::colored);
        }
        if (route == "prime_relation") {
            return hprime(k, HPrimeRoute::relation);
        }
        throw UnknownIdentifier("unknown h route '" + route + "' at " + std::to_string(n.args[0]->line) + ":"
                                + std::to_string(n.args[0]->column));
    }

    Value census_call(const Node &n, Bindings &b, std::size_t order)
    {
        if (order == QSeries::exact) {
            throw ExactModeUnsupported("a partition census needs a truncation order");
        }
        std::vector<Mark> marks;
        for (std::size_t i = 1; i < n.args.size(); ++i) {
            const Node &m = *n.args[i];
            if (m.kind != NodeKind::call || m.text != "mark") {
                error(m, "expected mark(marker, residue, modulus)");
            }
            const std::string &mk = name_of(*m.args[0], "a marker");
            const auto marker = mk.size() == 1 ? marker_from_name(mk[0]) : std::nullopt;
            if (!marker) {
                error(*m.args[0], "expected a marker a, b or c");
            }
            marks.push_back(Mark{*marker, small(*m.args[1], b), small(*m.args[2], b)});
        }
        const Node &fam = *n.args[0];
        if (fam.kind == NodeKind::call && fam.text == "cong") {
            const long modulus = small(*fam.args[0], b);
            std::vector<long> residues;
            for (std::size_t i = 1; i < fam.args.size(); ++i) {
                residues.push_back(small(*fam.args[i], b));
            }
            return census_series([&](long k) { return enum_congruence(k, residues, modulus); }, order, marks);
        }
        const std::string &name = name_of(fam, "a partition family");
        const Family *f = find_family(name);
        if (f == nullptr) {
            throw UnknownIdentifier("unknown partition family '" + name + "' at " + std::to_string(fam.line) + ":"
                                    + std::to_string(fam.column));
        }
        if (f->partitions) {
            return census_series(f->partitions, order, marks);
        }
        if (!marks.empty()) {
            error(n, "overpartition families take no marks");
        }
        return overpartition_census(f->overpartitions, order);
    }
};

} // namespace wwords::dsl
