#pragma once

#include <memory>
#include <string>
#include <string_view>

// Minimal one-variable expression trees: +, -, *, /, unary minus, numeric
// literals, pi, the variable s, and the functions sinh, cosh, sin, cos,
// exp, sqrt. Supports exact symbolic differentiation, which is how
// closed-form curve specifications get derivative access.

namespace mcurves {

namespace detail {
struct ExprNode;
}

class Expression {
public:
    Expression() = default;

    /// Parse `src`. Throws ParseError with 1-based line/column on bad input.
    static Expression parse(std::string_view src);

    /// Build a constant expression.
    static Expression constant(double value);

    double eval(double s) const;

    /// d/ds, with basic constant folding and 0/1 elimination.
    Expression derivative() const;

    /// Infix rendering (parenthesised conservatively).
    std::string to_string() const;

    bool valid() const { return root_ != nullptr; }

private:
    explicit Expression(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const detail::ExprNode> root_;
};

}  // namespace mcurves
