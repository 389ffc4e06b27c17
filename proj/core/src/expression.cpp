#include "mcurves/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "mcurves/errors.hpp"

namespace mcurves {
namespace detail {

enum class Op { Constant, Var, Add, Sub, Mul, Div, Neg, Sinh, Cosh, Sin, Cos, Exp, Sqrt };

struct ExprNode {
    Op op;
    double value = 0.0;  // Constant only
    std::shared_ptr<const ExprNode> a, b;
};

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_const(double v) {
    return std::make_shared<ExprNode>(ExprNode{Op::Constant, v, nullptr, nullptr});
}

NodePtr make_var() {
    return std::make_shared<ExprNode>(ExprNode{Op::Var, 0.0, nullptr, nullptr});
}

bool is_const(const NodePtr& n, double v) {
    return n->op == Op::Constant && n->value == v;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
    if (a->op == Op::Constant && b->op == Op::Constant) {
        switch (op) {
            case Op::Add: return make_const(a->value + b->value);
            case Op::Sub: return make_const(a->value - b->value);
            case Op::Mul: return make_const(a->value * b->value);
            case Op::Div: return make_const(a->value / b->value);
            default: break;
        }
    }
    switch (op) {
        case Op::Add:
            if (is_const(a, 0.0)) return b;
            if (is_const(b, 0.0)) return a;
            break;
        case Op::Sub:
            if (is_const(b, 0.0)) return a;
            break;
        case Op::Mul:
            if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
            if (is_const(a, 1.0)) return b;
            if (is_const(b, 1.0)) return a;
            break;
        case Op::Div:
            if (is_const(a, 0.0) && !is_const(b, 0.0)) return make_const(0.0);
            if (is_const(b, 1.0)) return a;
            break;
        default:
            break;
    }
    return std::make_shared<ExprNode>(ExprNode{op, 0.0, std::move(a), std::move(b)});
}

NodePtr make_unary(Op op, NodePtr a) {
    if (a->op == Op::Constant) {
        switch (op) {
            case Op::Neg: return make_const(-a->value);
            case Op::Sinh: return make_const(std::sinh(a->value));
            case Op::Cosh: return make_const(std::cosh(a->value));
            case Op::Sin: return make_const(std::sin(a->value));
            case Op::Cos: return make_const(std::cos(a->value));
            case Op::Exp: return make_const(std::exp(a->value));
            case Op::Sqrt: return make_const(std::sqrt(a->value));
            default: break;
        }
    }
    if (op == Op::Neg && a->op == Op::Neg) return a->a;
    return std::make_shared<ExprNode>(ExprNode{op, 0.0, std::move(a), nullptr});
}

double eval_node(const ExprNode& n, double s) {
    switch (n.op) {
        case Op::Constant: return n.value;
        case Op::Var: return s;
        case Op::Add: return eval_node(*n.a, s) + eval_node(*n.b, s);
        case Op::Sub: return eval_node(*n.a, s) - eval_node(*n.b, s);
        case Op::Mul: return eval_node(*n.a, s) * eval_node(*n.b, s);
        case Op::Div: return eval_node(*n.a, s) / eval_node(*n.b, s);
        case Op::Neg: return -eval_node(*n.a, s);
        case Op::Sinh: return std::sinh(eval_node(*n.a, s));
        case Op::Cosh: return std::cosh(eval_node(*n.a, s));
        case Op::Sin: return std::sin(eval_node(*n.a, s));
        case Op::Cos: return std::cos(eval_node(*n.a, s));
        case Op::Exp: return std::exp(eval_node(*n.a, s));
        case Op::Sqrt: return std::sqrt(eval_node(*n.a, s));
    }
    return 0.0;
}

NodePtr diff_node(const NodePtr& n) {
    switch (n->op) {
        case Op::Constant: return make_const(0.0);
        case Op::Var: return make_const(1.0);
        case Op::Add: return make_binary(Op::Add, diff_node(n->a), diff_node(n->b));
        case Op::Sub: return make_binary(Op::Sub, diff_node(n->a), diff_node(n->b));
        case Op::Mul:
            return make_binary(Op::Add,
                               make_binary(Op::Mul, diff_node(n->a), n->b),
                               make_binary(Op::Mul, n->a, diff_node(n->b)));
        case Op::Div:
            // (a/b)' = (a'b - ab') / b^2
            return make_binary(
                Op::Div,
                make_binary(Op::Sub,
                            make_binary(Op::Mul, diff_node(n->a), n->b),
                            make_binary(Op::Mul, n->a, diff_node(n->b))),
                make_binary(Op::Mul, n->b, n->b));
        case Op::Neg: return make_unary(Op::Neg, diff_node(n->a));
        case Op::Sinh: return make_binary(Op::Mul, make_unary(Op::Cosh, n->a), diff_node(n->a));
        case Op::Cosh: return make_binary(Op::Mul, make_unary(Op::Sinh, n->a), diff_node(n->a));
        case Op::Sin: return make_binary(Op::Mul, make_unary(Op::Cos, n->a), diff_node(n->a));
        case Op::Cos:
            return make_binary(Op::Mul,
                               make_unary(Op::Neg, make_unary(Op::Sin, n->a)),
                               diff_node(n->a));
        case Op::Exp: return make_binary(Op::Mul, n, diff_node(n->a));
        case Op::Sqrt:
            // (sqrt u)' = u' / (2 sqrt u)
            return make_binary(Op::Div, diff_node(n->a),
                               make_binary(Op::Mul, make_const(2.0), n));
    }
    return make_const(0.0);
}

std::string render(const ExprNode& n) {
    auto paren = [](const std::string& s) { return "(" + s + ")"; };
    switch (n.op) {
        case Op::Constant: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            return buf;
        }
        case Op::Var: return "s";
        case Op::Add: return paren(render(*n.a) + " + " + render(*n.b));
        case Op::Sub: return paren(render(*n.a) + " - " + render(*n.b));
        case Op::Mul: return paren(render(*n.a) + " * " + render(*n.b));
        case Op::Div: return paren(render(*n.a) + " / " + render(*n.b));
        case Op::Neg: return "-" + paren(render(*n.a));
        case Op::Sinh: return "sinh" + paren(render(*n.a));
        case Op::Cosh: return "cosh" + paren(render(*n.a));
        case Op::Sin: return "sin" + paren(render(*n.a));
        case Op::Cos: return "cos" + paren(render(*n.a));
        case Op::Exp: return "exp" + paren(render(*n.a));
        case Op::Sqrt: return "sqrt" + paren(render(*n.a));
    }
    return "?";
}

// Recursive-descent parser over a single line. Column numbers are 1-based.
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression: " + msg, 1, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr left = parse_term();
        for (;;) {
            if (consume('+'))
                left = make_binary(Op::Add, left, parse_term());
            else if (consume('-'))
                left = make_binary(Op::Sub, left, parse_term());
            else
                return left;
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_factor();
        for (;;) {
            if (consume('*'))
                left = make_binary(Op::Mul, left, parse_factor());
            else if (consume('/'))
                left = make_binary(Op::Div, left, parse_factor());
            else
                return left;
        }
    }

    NodePtr parse_factor() {
        if (consume('-')) return make_unary(Op::Neg, parse_factor());
        if (consume('+')) return parse_factor();
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];

        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        // exponent part
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        const std::string text(src_.substr(start, pos_ - start));
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return make_const(v);
        } catch (const std::exception&) {
            pos_ = start;
            fail("malformed number '" + text + "'");
        }
    }

    NodePtr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::string name(src_.substr(start, pos_ - start));

        if (name == "s") return make_var();
        if (name == "pi") return make_const(std::numbers::pi);

        Op op;
        if (name == "sinh") op = Op::Sinh;
        else if (name == "cosh") op = Op::Cosh;
        else if (name == "sin") op = Op::Sin;
        else if (name == "cos") op = Op::Cos;
        else if (name == "exp") op = Op::Exp;
        else if (name == "sqrt") op = Op::Sqrt;
        else {
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        if (!consume('(')) fail("expected '(' after function name");
        NodePtr arg = parse_sum();
        if (!consume(')')) fail("expected ')'");
        return make_unary(op, arg);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

Expression Expression::parse(std::string_view src) {
    return Expression(detail::Parser(src).parse());
}

Expression Expression::constant(double value) {
    return Expression(detail::make_const(value));
}

double Expression::eval(double s) const {
    return detail::eval_node(*root_, s);
}

Expression Expression::derivative() const {
    return Expression(detail::diff_node(root_));
}

std::string Expression::to_string() const {
    return root_ ? detail::render(*root_) : std::string("<empty>");
}

}  // namespace mcurves
