#ifndef SINECERT_EXPR_HPP
#define SINECERT_EXPR_HPP

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "interval.hpp"

namespace sinecert {

/// Constants that have no finite rational form and are enclosed on demand.
enum class NamedConstant { beta1, beta2, pi };

inline const char* constant_name(NamedConstant c)
{
    switch (c) {
    case NamedConstant::beta1:
        return "beta1";
    case NamedConstant::beta2:
        return "beta2";
    case NamedConstant::pi:
        return "pi";
    }
    return "?";
}

/// Enclosure of a named constant at the current working precision, cached
/// per thread and precision.
inline const Interval& named_constant(NamedConstant c)
{
    thread_local std::map<std::pair<int, long>, Interval> cache;
    const auto key = std::make_pair(static_cast<int>(c), working_precision());
    auto it = cache.find(key);
    if (it == cache.end()) {
        Interval v = c == NamedConstant::beta1 ? beta1() : c == NamedConstant::beta2 ? beta2() : pi_interval();
        it = cache.emplace(key, std::move(v)).first;
    }
    return it->second;
}

enum class Op { constant, named, var, add, sub, mul, div, neg, pow, ln, exp, sin, cos, sqrt };

/// Value and first derivative enclosures.
struct Dual {
    Interval value;
    Interval deriv;
};

/// Immutable expression in one variable. Nodes are shared, so copies are cheap.
class Expr {
public:
    struct Node {
        Op op;
        mpq_class value;
        NamedConstant named = NamedConstant::pi;
        std::vector<Expr> args;
    };

    Expr() : Expr(mpq_class(0)) {}
    Expr(const mpq_class& q) : node_(std::make_shared<Node>(Node{Op::constant, q, NamedConstant::pi, {}})) {} // NOLINT
    Expr(long v) : Expr(mpq_class(v)) {} // NOLINT(google-explicit-constructor)
    Expr(int v) : Expr(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)

    static Expr var() { return Expr(std::make_shared<Node>(Node{Op::var, 0, NamedConstant::pi, {}})); }
    static Expr named(NamedConstant c) { return Expr(std::make_shared<Node>(Node{Op::named, 0, c, {}})); }

    /// Builds a node, folding operations whose operands are all exact
    /// rational constants.
    static Expr make(Op op, std::vector<Expr> args)
    {
        if (auto folded = fold(op, args)) {
            return *folded;
        }
        return Expr(std::make_shared<Node>(Node{op, 0, NamedConstant::pi, std::move(args)}));
    }

    Op op() const { return node_->op; }
    const mpq_class& constant_value() const { return node_->value; }
    NamedConstant named_value() const { return node_->named; }
    const std::vector<Expr>& args() const { return node_->args; }
    bool is_constant() const { return node_->op == Op::constant; }

    /// True when the expression does not mention the variable.
    bool is_closed() const
    {
        if (node_->op == Op::var) {
            return false;
        }
        for (const auto& a : node_->args) {
            if (!a.is_closed()) {
                return false;
            }
        }
        return true;
    }

    Interval eval(const Interval& x) const;
    Dual eval_dual(const Interval& x) const;

    std::string to_string(const std::string& var = "x") const
    {
        std::string out;
        print(out, var, 0);
        return out;
    }

    friend Expr operator+(const Expr& a, const Expr& b) { return make(Op::add, {a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make(Op::sub, {a, b}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make(Op::mul, {a, b}); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make(Op::div, {a, b}); }
    friend Expr operator-(const Expr& a) { return make(Op::neg, {a}); }

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static std::optional<Expr> fold(Op op, const std::vector<Expr>& args);
    void print(std::string& out, const std::string& var, int parent_prec) const;

    std::shared_ptr<const Node> node_;
};

inline Expr pow(const Expr& base, const Expr& exponent) { return Expr::make(Op::pow, {base, exponent}); }
inline Expr ln(const Expr& a) { return Expr::make(Op::ln, {a}); }
inline Expr exp(const Expr& a) { return Expr::make(Op::exp, {a}); }
inline Expr sin(const Expr& a) { return Expr::make(Op::sin, {a}); }
inline Expr cos(const Expr& a) { return Expr::make(Op::cos, {a}); }
inline Expr sqrt(const Expr& a) { return Expr::make(Op::sqrt, {a}); }

namespace detail {

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

inline bool small_integer(const mpq_class& q) { return is_integer(q) && q.get_num() <= 1024 && q.get_num() >= -1024; }

inline mpq_class pow_rational(const mpq_class& base, long k)
{
    mpq_class r = 1;
    mpq_class b = k < 0 ? mpq_class(1 / base) : base;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        r *= b;
    }
    return r;
}

} // namespace detail

inline std::optional<Expr> Expr::fold(Op op, const std::vector<Expr>& args)
{
    for (const auto& a : args) {
        if (!a.is_constant()) {
            return std::nullopt;
        }
    }
    switch (op) {
    case Op::add:
        return Expr(mpq_class(args[0].constant_value() + args[1].constant_value()));
    case Op::sub:
        return Expr(mpq_class(args[0].constant_value() - args[1].constant_value()));
    case Op::mul:
        return Expr(mpq_class(args[0].constant_value() * args[1].constant_value()));
    case Op::div:
        if (args[1].constant_value() == 0) {
            return std::nullopt;
        }
        return Expr(mpq_class(args[0].constant_value() / args[1].constant_value()));
    case Op::neg:
        return Expr(mpq_class(-args[0].constant_value()));
    case Op::pow: {
        const mpq_class& e = args[1].constant_value();
        const mpq_class& b = args[0].constant_value();
        if (detail::small_integer(e) && (b != 0 || e >= 0)) {
            return Expr(detail::pow_rational(b, e.get_num().get_si()));
        }
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

namespace detail {

inline Interval pow_interval(const Interval& base, const Expr& exponent, const Interval& e)
{
    if (exponent.is_constant() && small_integer(exponent.constant_value())) {
        return pow_int(base, exponent.constant_value().get_num().get_si());
    }
    return sinecert::pow(base, e);
}

} // namespace detail

inline Interval Expr::eval(const Interval& x) const
{
    const Node& n = *node_;
    switch (n.op) {
    case Op::constant:
        return Interval(n.value);
    case Op::named:
        return named_constant(n.named);
    case Op::var:
        return x;
    case Op::add:
        return n.args[0].eval(x) + n.args[1].eval(x);
    case Op::sub:
        return n.args[0].eval(x) - n.args[1].eval(x);
    case Op::mul:
        return n.args[0].eval(x) * n.args[1].eval(x);
    case Op::div:
        return n.args[0].eval(x) / n.args[1].eval(x);
    case Op::neg:
        return -n.args[0].eval(x);
    case Op::pow:
        return detail::pow_interval(n.args[0].eval(x), n.args[1], n.args[1].eval(x));
    case Op::ln:
        return log(n.args[0].eval(x));
    case Op::exp:
        return sinecert::exp(n.args[0].eval(x));
    case Op::sin:
        return sinecert::sin(n.args[0].eval(x));
    case Op::cos:
        return sinecert::cos(n.args[0].eval(x));
    case Op::sqrt:
        return sinecert::sqrt(n.args[0].eval(x));
    }
    throw std::logic_error("unknown expression node");
}

inline Dual Expr::eval_dual(const Interval& x) const
{
    const Node& n = *node_;
    switch (n.op) {
    case Op::constant:
        return {Interval(n.value), Interval(0)};
    case Op::named:
        return {named_constant(n.named), Interval(0)};
    case Op::var:
        return {x, Interval(1)};
    case Op::add: {
        auto a = n.args[0].eval_dual(x);
        auto b = n.args[1].eval_dual(x);
        return {a.value + b.value, a.deriv + b.deriv};
    }
    case Op::sub: {
        auto a = n.args[0].eval_dual(x);
        auto b = n.args[1].eval_dual(x);
        return {a.value - b.value, a.deriv - b.deriv};
    }
    case Op::mul: {
        auto a = n.args[0].eval_dual(x);
        auto b = n.args[1].eval_dual(x);
        return {a.value * b.value, a.deriv * b.value + a.value * b.deriv};
    }
    case Op::div: {
        auto a = n.args[0].eval_dual(x);
        auto b = n.args[1].eval_dual(x);
        Interval q = a.value / b.value;
        return {q, (a.deriv - q * b.deriv) / b.value};
    }
    case Op::neg: {
        auto a = n.args[0].eval_dual(x);
        return {-a.value, -a.deriv};
    }
    case Op::pow: {
        auto u = n.args[0].eval_dual(x);
        const Expr& w = n.args[1];
        if (w.is_closed()) {
            Interval e = w.eval(x);
            if (w.is_constant() && detail::small_integer(w.constant_value())) {
                const long k = w.constant_value().get_num().get_si();
                if (k == 0) {
                    return {Interval(1), Interval(0)};
                }
                return {pow_int(u.value, k), Interval(k) * pow_int(u.value, k - 1) * u.deriv};
            }
            Interval v = sinecert::pow(u.value, e);
            return {v, e * sinecert::pow(u.value, e - Interval(1)) * u.deriv};
        }
        auto e = w.eval_dual(x);
        Interval lu = log(u.value);
        Interval v = sinecert::exp(e.value * lu);
        return {v, v * (e.deriv * lu + e.value * u.deriv / u.value)};
    }
    case Op::ln: {
        auto a = n.args[0].eval_dual(x);
        return {log(a.value), a.deriv / a.value};
    }
    case Op::exp: {
        auto a = n.args[0].eval_dual(x);
        Interval v = sinecert::exp(a.value);
        return {v, v * a.deriv};
    }
    case Op::sin: {
        auto a = n.args[0].eval_dual(x);
        return {sinecert::sin(a.value), sinecert::cos(a.value) * a.deriv};
    }
    case Op::cos: {
        auto a = n.args[0].eval_dual(x);
        return {sinecert::cos(a.value), -(sinecert::sin(a.value) * a.deriv)};
    }
    case Op::sqrt: {
        auto a = n.args[0].eval_dual(x);
        Interval r = sinecert::sqrt(a.value);
        return {r, a.deriv / (Interval(2) * r)};
    }
    }
    throw std::logic_error("unknown expression node");
}

namespace detail {

inline int precedence(Op op)
{
    switch (op) {
    case Op::add:
    case Op::sub:
        return 1;
    case Op::mul:
    case Op::div:
        return 2;
    case Op::neg:
        return 3;
    case Op::pow:
        return 4;
    default:
        return 5;
    }
}

inline const char* function_name(Op op)
{
    switch (op) {
    case Op::ln:
        return "ln";
    case Op::exp:
        return "exp";
    case Op::sin:
        return "sin";
    case Op::cos:
        return "cos";
    case Op::sqrt:
        return "sqrt";
    default:
        return nullptr;
    }
}

} // namespace detail

// Constants print as integers or parenthesised "(p/q)" / "(-p)" so that the
// parser rebuilds the same constant node.
inline void Expr::print(std::string& out, const std::string& var, int parent_prec) const
{
    const Node& n = *node_;
    switch (n.op) {
    case Op::constant:
        if (detail::is_integer(n.value) && n.value >= 0) {
            out += n.value.get_str();
        } else {
            out += "(" + n.value.get_str() + ")";
        }
        return;
    case Op::named:
        out += constant_name(n.named);
        return;
    case Op::var:
        out += var;
        return;
    default:
        break;
    }
    if (const char* fn = detail::function_name(n.op)) {
        out += fn;
        out += "(";
        n.args[0].print(out, var, 0);
        out += ")";
        return;
    }
    const int prec = detail::precedence(n.op);
    const bool paren = prec <= parent_prec;
    if (paren) {
        out += "(";
    }
    switch (n.op) {
    case Op::neg:
        out += "-";
        n.args[0].print(out, var, prec);
        break;
    case Op::pow:
        n.args[0].print(out, var, prec);
        out += "^";
        n.args[1].print(out, var, prec);
        break;
    default: {
        const char* sym = n.op == Op::add ? " + " : n.op == Op::sub ? " - " : n.op == Op::mul ? "*" : "/";
        // left-associative: the left operand may share our level, the right may not
        n.args[0].print(out, var, prec - 1);
        out += sym;
        n.args[1].print(out, var, prec);
        break;
    }
    }
    if (paren) {
        out += ")";
    }
}

/// Raised on malformed expression text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, std::string var) : s_(text), var_(std::move(var)) {}

    Expr parse()
    {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected trailing input");
        }
        return e;
    }

private:
    Expr sum()
    {
        Expr e = product();
        while (true) {
            skip();
            if (eat('+')) {
                e = e + product();
            } else if (eat('-')) {
                e = e - product();
            } else {
                return e;
            }
        }
    }

    Expr product()
    {
        Expr e = unary();
        while (true) {
            skip();
            if (eat('*')) {
                e = e * unary();
            } else if (eat('/')) {
                e = e / unary();
            } else {
                return e;
            }
        }
    }

    Expr unary()
    {
        skip();
        if (eat('-')) {
            return -unary();
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        skip();
        if (eat('^')) {
            // right-associative; the exponent may carry its own sign
            return sinecert::pow(base, unary_power());
        }
        return base;
    }

    Expr unary_power()
    {
        skip();
        if (eat('-')) {
            return -unary_power();
        }
        return power();
    }

    Expr atom()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = sum();
            skip();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id.push_back(s_[pos_++]);
            }
            if (id == var_) {
                return Expr::var();
            }
            if (id == "beta1") {
                return Expr::named(NamedConstant::beta1);
            }
            if (id == "beta2") {
                return Expr::named(NamedConstant::beta2);
            }
            if (id == "pi") {
                return Expr::named(NamedConstant::pi);
            }
            Op fn;
            if (id == "ln" || id == "log") {
                fn = Op::ln;
            } else if (id == "exp") {
                fn = Op::exp;
            } else if (id == "sin") {
                fn = Op::sin;
            } else if (id == "cos") {
                fn = Op::cos;
            } else if (id == "sqrt") {
                fn = Op::sqrt;
            } else {
                fail("unknown identifier '" + id + "'");
            }
            skip();
            if (!eat('(')) {
                fail("expected '(' after " + id);
            }
            Expr arg = sum();
            skip();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return Expr::make(fn, {arg});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr number()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                ++pos_;
            }
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    ++pos_;
                }
            } else {
                pos_ = save;
            }
        }
        auto q = parse_rational(s_.substr(start, pos_ - start));
        if (!q) {
            fail("malformed number");
        }
        return Expr(*q);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c)
    {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }

    std::string_view s_;
    std::string var_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses infix text such as "72*((1 - 24*y)/5)^(beta1 - 1)". Supports
/// + - * / ^, unary minus, ln/log, exp, sin, cos, sqrt, and the constants
/// beta1, beta2, pi. Decimal literals are read as exact rationals.
inline Expr parse_expr(std::string_view text, const std::string& var = "x")
{
    return detail::ExprParser(text, var).parse();
}

} // namespace sinecert

#endif // SINECERT_EXPR_HPP
