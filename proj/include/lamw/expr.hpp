#pragma once

#include <string>
#include <vector>

#include "lamw/errors.hpp"

namespace lamw {

/// AST node kinds. Sub and Neg only survive until normalization, which
/// rewrites them into Add/Mul form; Add and Mul are n-ary.
enum class NodeKind {
    Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Ln, W, Coth, Tsr,
};

struct Expr {
    NodeKind kind = NodeKind::Const;
    double value = 0.0;      ///< Const payload
    std::vector<Expr> kids;

    static Expr constant(double v);
    static Expr var();
    static Expr node(NodeKind k, std::vector<Expr> kids);
};

/// Parse an infix equation "y = <expr>" or bare "<expr>".
/// Functions: exp, ln, W, coth, tsr; operators + - * / ^ (right-assoc ^,
/// unary minus binds looser than ^); decimal constants; variable x.
/// Throws ParseError with 1-based position and expected-token set.
Expr parse(const std::string& text);

/// Canonical form: Sub/Neg desugared, Add/Mul flattened and sorted,
/// constants folded, ln(u^k) -> k ln(u), e^(ln u) -> u. Optionally records
/// the rewrite steps applied.
Expr normalize(const Expr& e, std::vector<std::string>* trace = nullptr);

/// Infix rendering with minimal parentheses; %.17g constants.
std::string render(const Expr& e);

/// Structural equality (kind, value, children).
bool structural_equal(const Expr& a, const Expr& b);

/// Evaluate at x (W on the principal branch). Non-real subexpressions
/// yield NaN.
double eval(const Expr& e, double x);

}  // namespace lamw
