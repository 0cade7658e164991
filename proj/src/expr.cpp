#include "lamw/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>

#include "lamw/lambert.hpp"
#include "lamw/tetration.hpp"

namespace lamw {

Expr Expr::constant(double v) {
    Expr e;
    e.kind = NodeKind::Const;
    e.value = v;
    return e;
}
Expr Expr::var() {
    Expr e;
    e.kind = NodeKind::Var;
    return e;
}
Expr Expr::node(NodeKind k, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.kids = std::move(kids);
    return e;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------
namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
        skip_ws();
        throw ParseError(msg, i + 1, std::move(expected));
    }

    Expr parse_equation() {
        skip_ws();
        // optional "y =" prefix
        std::size_t save = i;
        if (i < s.size() && s[i] == 'y') {
            ++i;
            if (!accept('=')) i = save;
        }
        Expr e = parse_expr();
        if (!eof()) fail("trailing input", {"end of input"});
        return e;
    }

    Expr parse_expr() {
        Expr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = Expr::node(NodeKind::Add, {std::move(e), parse_term()});
            else if (accept('-'))
                e = Expr::node(NodeKind::Sub, {std::move(e), parse_term()});
            else
                return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = Expr::node(NodeKind::Mul, {std::move(e), parse_factor()});
            else if (accept('/'))
                e = Expr::node(NodeKind::Div, {std::move(e), parse_factor()});
            else
                return e;
        }
    }

    Expr parse_factor() {
        if (accept('-')) return Expr::node(NodeKind::Neg, {parse_factor()});
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (accept('^'))  // right-associative; exponent may carry unary minus
            return Expr::node(NodeKind::Pow, {std::move(base), parse_factor()});
        return base;
    }

    Expr parse_primary() {
        skip_ws();
        if (i >= s.size())
            fail("unexpected end of input", {"number", "x", "function", "("});
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == '(') {
            ++i;
            Expr e = parse_expr();
            if (!accept(')')) fail("missing ')'", {")"});
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        fail(std::string("unexpected character '") + c + "'",
             {"number", "x", "function", "("});
    }

    Expr parse_number() {
        std::size_t start = i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'))
            ++i;
        if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
            std::size_t save = i;
            ++i;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            } else {
                i = save;  // the 'e' was not an exponent
            }
        }
        try {
            return Expr::constant(std::stod(s.substr(start, i - start)));
        } catch (...) {
            i = start;
            fail("malformed number", {"number"});
        }
    }

    Expr parse_name() {
        std::size_t start = i;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
        const std::string name = s.substr(start, i - start);
        if (name == "x") return Expr::var();
        NodeKind k;
        if (name == "exp") k = NodeKind::Exp;
        else if (name == "ln") k = NodeKind::Ln;
        else if (name == "W" || name == "w") k = NodeKind::W;
        else if (name == "coth") k = NodeKind::Coth;
        else if (name == "tsr") k = NodeKind::Tsr;
        else {
            i = start;
            fail("unknown name '" + name + "'", {"x", "exp", "ln", "W", "coth", "tsr"});
        }
        if (!accept('(')) fail("function requires '('", {"("});
        Expr arg = parse_expr();
        if (!accept(')')) fail("missing ')'", {")"});
        return Expr::node(k, {std::move(arg)});
    }
};

// deterministic ordering key for commutative children
int kind_rank(NodeKind k) {
    switch (k) {
        case NodeKind::Const: return 0;
        case NodeKind::Var: return 1;
        case NodeKind::Pow: return 2;
        case NodeKind::Mul: return 3;
        case NodeKind::Div: return 4;
        case NodeKind::Add: return 5;
        case NodeKind::Exp: return 6;
        case NodeKind::Ln: return 7;
        case NodeKind::W: return 8;
        case NodeKind::Coth: return 9;
        case NodeKind::Tsr: return 10;
        default: return 11;
    }
}

int cmp_expr(const Expr& a, const Expr& b) {
    if (kind_rank(a.kind) != kind_rank(b.kind))
        return kind_rank(a.kind) < kind_rank(b.kind) ? -1 : 1;
    if (a.kind == NodeKind::Const) {
        if (a.value < b.value) return -1;
        if (a.value > b.value) return 1;
        return 0;
    }
    if (a.kids.size() != b.kids.size())
        return a.kids.size() < b.kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (int c = cmp_expr(a.kids[i], b.kids[i])) return c;
    return 0;
}

void note(std::vector<std::string>* trace, const char* what) {
    if (trace && (trace->empty() || trace->back() != what))
        trace->push_back(what);
}

}  // namespace

Expr parse(const std::string& text) {
    Parser p(text);
    return p.parse_equation();
}

Expr normalize(const Expr& e, std::vector<std::string>* trace) {
    // desugar
    if (e.kind == NodeKind::Sub) {
        note(trace, "a-b -> a+(-1)*b");
        return normalize(
            Expr::node(NodeKind::Add,
                       {e.kids[0],
                        Expr::node(NodeKind::Mul,
                                   {Expr::constant(-1.0), e.kids[1]})}),
            trace);
    }
    if (e.kind == NodeKind::Neg) {
        note(trace, "-u -> (-1)*u");
        return normalize(
            Expr::node(NodeKind::Mul, {Expr::constant(-1.0), e.kids[0]}), trace);
    }

    Expr out;
    out.kind = e.kind;
    out.value = e.value;
    for (const Expr& k : e.kids) out.kids.push_back(normalize(k, trace));

    // flatten nested Add/Mul
    if (out.kind == NodeKind::Add || out.kind == NodeKind::Mul) {
        std::vector<Expr> flat;
        for (Expr& k : out.kids) {
            if (k.kind == out.kind) {
                note(trace, "flatten nested sums/products");
                for (Expr& kk : k.kids) flat.push_back(std::move(kk));
            } else {
                flat.push_back(std::move(k));
            }
        }
        out.kids = std::move(flat);

        // fold constants
        double acc = out.kind == NodeKind::Add ? 0.0 : 1.0;
        std::vector<Expr> rest;
        int nconst = 0;
        for (Expr& k : out.kids) {
            if (k.kind == NodeKind::Const) {
                ++nconst;
                acc = out.kind == NodeKind::Add ? acc + k.value : acc * k.value;
            } else {
                rest.push_back(std::move(k));
            }
        }
        if (nconst > 1) note(trace, "fold constants");
        if (out.kind == NodeKind::Mul && acc == 0.0) return Expr::constant(0.0);
        const double identity = out.kind == NodeKind::Add ? 0.0 : 1.0;
        if (nconst > 0 && acc != identity)
            rest.insert(rest.begin(), Expr::constant(acc));
        else if (rest.empty())
            return Expr::constant(acc);
        if (nconst > 0 && acc == identity) note(trace, "drop identity element");
        if (rest.size() == 1) return std::move(rest[0]);
        out.kids = std::move(rest);
        std::stable_sort(out.kids.begin(), out.kids.end(),
                         [](const Expr& a, const Expr& b) {
                             return cmp_expr(a, b) < 0;
                         });
        return out;
    }

    // pure-constant folding for the remaining operators
    const bool all_const =
        std::all_of(out.kids.begin(), out.kids.end(),
                    [](const Expr& k) { return k.kind == NodeKind::Const; });
    switch (out.kind) {
        case NodeKind::Div:
            if (all_const && out.kids[1].value != 0.0) {
                note(trace, "fold constants");
                return Expr::constant(out.kids[0].value / out.kids[1].value);
            }
            break;
        case NodeKind::Pow:
            if (all_const) {
                const double v = std::pow(out.kids[0].value, out.kids[1].value);
                if (std::isfinite(v)) {
                    note(trace, "fold constants");
                    return Expr::constant(v);
                }
            }
            if (out.kids[1].kind == NodeKind::Const) {
                if (out.kids[1].value == 1.0) {
                    note(trace, "u^1 -> u");
                    return std::move(out.kids[0]);
                }
                if (out.kids[1].value == 0.0) {
                    note(trace, "u^0 -> 1");
                    return Expr::constant(1.0);
                }
            }
            break;
        case NodeKind::Exp:
            if (all_const) {
                note(trace, "fold constants");
                return Expr::constant(std::exp(out.kids[0].value));
            }
            if (out.kids[0].kind == NodeKind::Ln) {
                note(trace, "e^(ln u) -> u");
                return std::move(out.kids[0].kids[0]);
            }
            break;
        case NodeKind::Ln:
            if (all_const && out.kids[0].value > 0.0) {
                note(trace, "fold constants");
                return Expr::constant(std::log(out.kids[0].value));
            }
            if (out.kids[0].kind == NodeKind::Pow &&
                out.kids[0].kids[1].kind == NodeKind::Const) {
                note(trace, "ln(u^k) -> k ln(u)");
                Expr ln = Expr::node(NodeKind::Ln, {out.kids[0].kids[0]});
                return normalize(
                    Expr::node(NodeKind::Mul,
                               {Expr::constant(out.kids[0].kids[1].value),
                                std::move(ln)}),
                    trace);
            }
            break;
        case NodeKind::Coth:
            if (all_const && out.kids[0].value != 0.0) {
                note(trace, "fold constants");
                return Expr::constant(1.0 / std::tanh(out.kids[0].value));
            }
            break;
        case NodeKind::W:
            if (all_const) {
                try {
                    const double v =
                        eval_w(Branch::Principal, out.kids[0].value).value;
                    note(trace, "fold constants");
                    return Expr::constant(v);
                } catch (const Error&) {
                }
            }
            break;
        case NodeKind::Tsr:
            if (all_const) {
                try {
                    const double v = tsr(out.kids[0].value);
                    note(trace, "fold constants");
                    return Expr::constant(v);
                } catch (const Error&) {
                }
            }
            break;
        default:
            break;
    }
    return out;
}

namespace {

int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Neg: return 3;
        case NodeKind::Pow: return 4;
        default: return 5;
    }
}

void render_rec(const Expr& e, int parent_prec, std::string& out) {
    const int prec = precedence(e.kind);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case NodeKind::Const: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", e.value);
            if (e.value < 0.0 && !parens && parent_prec > 1) {
                out += '(';
                out += buf;
                out += ')';
            } else {
                out += buf;
            }
            break;
        }
        case NodeKind::Var: out += 'x'; break;
        case NodeKind::Add:
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += " + ";
                render_rec(e.kids[i], prec, out);
            }
            break;
        case NodeKind::Sub:
            render_rec(e.kids[0], prec, out);
            out += " - ";
            render_rec(e.kids[1], prec + 1, out);
            break;
        case NodeKind::Mul:
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                if (i) out += "*";
                render_rec(e.kids[i], prec, out);
            }
            break;
        case NodeKind::Div:
            render_rec(e.kids[0], prec, out);
            out += "/";
            render_rec(e.kids[1], prec + 1, out);
            break;
        case NodeKind::Neg:
            out += "-";
            render_rec(e.kids[0], prec, out);
            break;
        case NodeKind::Pow:
            render_rec(e.kids[0], prec + 1, out);
            out += "^";
            render_rec(e.kids[1], prec, out);
            break;
        case NodeKind::Exp: out += "exp("; render_rec(e.kids[0], 0, out); out += ')'; break;
        case NodeKind::Ln: out += "ln("; render_rec(e.kids[0], 0, out); out += ')'; break;
        case NodeKind::W: out += "W("; render_rec(e.kids[0], 0, out); out += ')'; break;
        case NodeKind::Coth: out += "coth("; render_rec(e.kids[0], 0, out); out += ')'; break;
        case NodeKind::Tsr: out += "tsr("; render_rec(e.kids[0], 0, out); out += ')'; break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render(const Expr& e) {
    std::string out;
    render_rec(e, 0, out);
    return out;
}

bool structural_equal(const Expr& a, const Expr& b) { return cmp_expr(a, b) == 0; }

double eval(const Expr& e, double x) {
    switch (e.kind) {
        case NodeKind::Const: return e.value;
        case NodeKind::Var: return x;
        case NodeKind::Add: {
            double s = 0.0;
            for (const Expr& k : e.kids) s += eval(k, x);
            return s;
        }
        case NodeKind::Sub: return eval(e.kids[0], x) - eval(e.kids[1], x);
        case NodeKind::Mul: {
            double s = 1.0;
            for (const Expr& k : e.kids) s *= eval(k, x);
            return s;
        }
        case NodeKind::Div: return eval(e.kids[0], x) / eval(e.kids[1], x);
        case NodeKind::Neg: return -eval(e.kids[0], x);
        case NodeKind::Pow: {
            const double b = eval(e.kids[0], x), p = eval(e.kids[1], x);
            if (b > 0.0) return std::pow(b, p);
            if (b == 0.0) return p > 0.0 ? 0.0 : std::nan("");
            if (std::fabs(p - std::round(p)) < 1e-12) return std::pow(b, std::round(p));
            return std::nan("");
        }
        case NodeKind::Exp: return std::exp(eval(e.kids[0], x));
        case NodeKind::Ln: {
            const double v = eval(e.kids[0], x);
            return v > 0.0 ? std::log(v) : std::nan("");
        }
        case NodeKind::W: {
            try {
                return eval_w(Branch::Principal, eval(e.kids[0], x)).value;
            } catch (const Error&) {
                return std::nan("");
            }
        }
        case NodeKind::Coth: {
            const double v = eval(e.kids[0], x);
            return v != 0.0 ? 1.0 / std::tanh(v) : std::nan("");
        }
        case NodeKind::Tsr: {
            try {
                return tsr(eval(e.kids[0], x));
            } catch (const Error&) {
                return std::nan("");
            }
        }
    }
    return std::nan("");
}

}  // namespace lamw
