#include "lamw/matcher.hpp"

#include <cmath>
#include <optional>

namespace lamw {
namespace {

using Kids = std::vector<Expr>;

bool is_const(const Expr& e) { return e.kind == NodeKind::Const; }
bool is_var(const Expr& e) { return e.kind == NodeKind::Var; }

// alpha*x + beta
struct Linear {
    double alpha = 0.0, beta = 0.0;
};
std::optional<Linear> as_linear(const Expr& e) {
    if (is_var(e)) return Linear{1.0, 0.0};
    if (is_const(e)) return Linear{0.0, e.value};
    if (e.kind == NodeKind::Mul && e.kids.size() == 2 && is_const(e.kids[0])) {
        // c * <linear>, covering both c*x and undistributed c*(x + k)
        auto l = as_linear(e.kids[1]);
        if (!l) return std::nullopt;
        return Linear{e.kids[0].value * l->alpha, e.kids[0].value * l->beta};
    }
    if (e.kind == NodeKind::Add) {
        Linear acc;
        for (const Expr& k : e.kids) {
            auto l = as_linear(k);
            if (!l) return std::nullopt;
            acc.alpha += l->alpha;
            acc.beta += l->beta;
        }
        return acc;
    }
    return std::nullopt;
}

// x^k (Var -> k=1)
std::optional<double> as_power_of_x(const Expr& e) {
    if (is_var(e)) return 1.0;
    if (e.kind == NodeKind::Pow && is_var(e.kids[0]) && is_const(e.kids[1]))
        return e.kids[1].value;
    return std::nullopt;
}

// c*x^d (allows bare x, x^d, c*x, c*x^d)
struct CPow {
    double c = 1.0, d = 1.0;
};
std::optional<CPow> as_cpow(const Expr& e) {
    if (auto d = as_power_of_x(e)) return CPow{1.0, *d};
    if (e.kind == NodeKind::Mul && e.kids.size() == 2 && is_const(e.kids[0])) {
        if (auto d = as_power_of_x(e.kids[1])) return CPow{e.kids[0].value, *d};
    }
    return std::nullopt;
}

Kids factors(const Expr& e) {
    if (e.kind == NodeKind::Mul) return e.kids;
    return {e};
}
Kids terms(const Expr& e) {
    if (e.kind == NodeKind::Add) return e.kids;
    return {e};
}

// one leading constant factor peeled off a product
struct ScaledFactors {
    double scale = 1.0;
    Kids rest;
};
ScaledFactors split_scale(const Expr& e) {
    ScaledFactors out;
    for (const Expr& f : factors(e)) {
        if (is_const(f))
            out.scale *= f.value;
        else
            out.rest.push_back(f);
    }
    return out;
}

struct Miss {
    FamilyId family;
    std::string reason;
};

using Matcher = std::optional<ParamSet> (*)(const Expr&, std::string&);

// --- family templates (input is the normalized tree) -----------------------

std::optional<ParamSet> m_p1(const Expr& e, std::string& why) {
    auto [scale, fs] = split_scale(e);
    if (scale != 1.0 || fs.size() != 2) {
        why = "expected (ax+b)^c * exp(dx+f)";
        return std::nullopt;
    }
    ParamSet p;
    bool have_poly = false, have_exp = false;
    for (const Expr& f : fs) {
        if (f.kind == NodeKind::Exp) {
            auto l = as_linear(f.kids[0]);
            if (!l || l->alpha == 0.0) {
                why = "exp argument is not linear in x";
                return std::nullopt;
            }
            p.d = l->alpha;
            p.f = l->beta;
            have_exp = true;
        } else if (f.kind == NodeKind::Pow && is_const(f.kids[1])) {
            auto l = as_linear(f.kids[0]);
            if (!l || l->alpha == 0.0) {
                why = "power base is not linear in x";
                return std::nullopt;
            }
            p.a = l->alpha;
            p.b = l->beta;
            p.c = f.kids[1].value;
            have_poly = true;
        } else if (auto l = as_linear(f); l && l->alpha != 0.0) {
            p.a = l->alpha;
            p.b = l->beta;
            p.c = 1.0;
            have_poly = true;
        } else {
            why = "factor is neither a linear power nor exp";
            return std::nullopt;
        }
    }
    if (!(have_poly && have_exp)) {
        why = "need both a polynomial and an exponential factor";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_p2(const Expr& e, std::string& why) {
    auto [scale, fs] = split_scale(e);
    if (scale != 1.0 || fs.size() != 2) {
        why = "expected exp(aW(x)+b) * x^c";
        return std::nullopt;
    }
    ParamSet p;
    bool have_pow = false, have_exp = false;
    for (const Expr& f : fs) {
        if (f.kind == NodeKind::Exp) {
            // linear in W(x): a*W(x) + b
            double a = 0.0, b = 0.0;
            bool ok = true, saw_w = false;
            for (const Expr& t : terms(f.kids[0])) {
                if (t.kind == NodeKind::W && is_var(t.kids[0])) {
                    a += 1.0;
                    saw_w = true;
                } else if (t.kind == NodeKind::Mul && t.kids.size() == 2 &&
                           is_const(t.kids[0]) && t.kids[1].kind == NodeKind::W &&
                           is_var(t.kids[1].kids[0])) {
                    a += t.kids[0].value;
                    saw_w = true;
                } else if (is_const(t)) {
                    b += t.value;
                } else {
                    ok = false;
                }
            }
            if (!ok || !saw_w) {
                why = "exp argument is not linear in W(x)";
                return std::nullopt;
            }
            p.a = a;
            p.b = b;
            have_exp = true;
        } else if (auto d = as_power_of_x(f)) {
            p.c = *d;
            have_pow = true;
        } else {
            why = "factor is neither exp(aW(x)+b) nor x^c";
            return std::nullopt;
        }
    }
    if (!(have_pow && have_exp)) {
        why = "missing exp(aW(x)+b) or x^c factor";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_p3(const Expr& e, std::string& why) {
    // a x^b e^(c x^d) + f
    ParamSet p;
    Expr prod;
    bool have_prod = false;
    for (const Expr& t : terms(e)) {
        if (is_const(t)) {
            p.f += t.value;
        } else if (!have_prod) {
            prod = t;
            have_prod = true;
        } else {
            why = "more than one non-constant term";
            return std::nullopt;
        }
    }
    if (!have_prod) {
        why = "no product term";
        return std::nullopt;
    }
    auto [scale, fs] = split_scale(prod);
    p.a = scale;
    bool have_pow = false, have_exp = false;
    for (const Expr& f : fs) {
        if (f.kind == NodeKind::Exp) {
            auto cp = as_cpow(f.kids[0]);
            if (!cp) {
                why = "exp argument is not c*x^d";
                return std::nullopt;
            }
            p.c = cp->c;
            p.d = cp->d;
            have_exp = true;
        } else if (auto d = as_power_of_x(f)) {
            p.b = *d;
            have_pow = true;
        } else {
            why = "unexpected factor";
            return std::nullopt;
        }
    }
    if (!(have_pow && have_exp)) {
        why = "missing x^b or exp(c x^d) factor";
        return std::nullopt;
    }
    return p;
}

// denominator "k1*exp(s*x) + k0" -> (coeff, rate, constant)
struct ExpPlusConst {
    double coeff = 1.0, rate = 0.0, constant = 0.0;
};
std::optional<ExpPlusConst> as_exp_plus_const(const Expr& e) {
    ExpPlusConst out;
    bool saw_exp = false;
    for (const Expr& t : terms(e)) {
        if (is_const(t)) {
            out.constant += t.value;
            continue;
        }
        auto [scale, fs] = split_scale(t);
        if (fs.size() != 1 || fs[0].kind != NodeKind::Exp || saw_exp)
            return std::nullopt;
        auto l = as_linear(fs[0].kids[0]);
        if (!l || l->beta != 0.0 || l->alpha == 0.0) return std::nullopt;
        out.coeff = scale;
        out.rate = l->alpha;
        saw_exp = true;
    }
    if (!saw_exp) return std::nullopt;
    return out;
}

std::optional<ParamSet> m_bern(const Expr& e, std::string& why) {
    if (e.kind != NodeKind::Div) {
        why = "expected a quotient";
        return std::nullopt;
    }
    auto num = as_linear(e.kids[0]);
    if (!num || num->beta != 0.0 || num->alpha == 0.0) {
        why = "numerator is not a*x";
        return std::nullopt;
    }
    auto den = as_exp_plus_const(e.kids[1]);
    if (!den || den->coeff != 1.0 || den->rate >= 0.0) {
        why = "denominator is not exp(-b*x) - c";
        return std::nullopt;
    }
    ParamSet p;
    p.a = num->alpha;
    p.b = -den->rate;
    p.c = -den->constant;
    return p;
}

std::optional<ParamSet> m_p4(const Expr& e, std::string& why) {
    if (e.kind != NodeKind::Div) {
        why = "expected a quotient";
        return std::nullopt;
    }
    auto num = as_linear(e.kids[0]);
    if (!num || num->alpha == 0.0) {
        why = "numerator is not linear";
        return std::nullopt;
    }
    auto den = as_exp_plus_const(e.kids[1]);
    if (!den || den->rate >= 0.0) {
        why = "denominator is not c*exp(-d*x) - f";
        return std::nullopt;
    }
    ParamSet p;
    p.a = num->alpha;
    p.b = num->beta;
    p.c = den->coeff;
    p.d = -den->rate;
    p.f = -den->constant;
    return p;
}

std::optional<ParamSet> m_p5(const Expr& e, std::string& why) {
    // a x coth(bx) + (-a) x, as a two-term sum
    const Kids ts = terms(e);
    if (ts.size() != 2) {
        why = "expected a*x*coth(b*x) - a*x";
        return std::nullopt;
    }
    ParamSet p;
    bool have_coth = false, have_lin = false;
    double lin = 0.0;
    for (const Expr& t : ts) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() == 2) {
            const Expr* var = nullptr;
            const Expr* ct = nullptr;
            for (const Expr& f : fs) {
                if (is_var(f)) var = &f;
                if (f.kind == NodeKind::Coth) ct = &f;
            }
            if (!var || !ct) {
                why = "product term is not x*coth(b*x)";
                return std::nullopt;
            }
            auto l = as_linear(ct->kids[0]);
            if (!l || l->beta != 0.0 || l->alpha == 0.0) {
                why = "coth argument is not b*x";
                return std::nullopt;
            }
            p.a = scale;
            p.b = l->alpha;
            have_coth = true;
        } else if (auto l = as_linear(t); l && l->beta == 0.0) {
            lin = l->alpha;
            have_lin = true;
        } else {
            why = "unexpected term";
            return std::nullopt;
        }
    }
    if (!have_coth || !have_lin || lin != -p.a) {
        why = "terms do not share the coefficient a";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_p6(const Expr& e, std::string& why) {
    if (e.kind != NodeKind::Div) {
        why = "expected ln(ax^b)^c / (d x^f)";
        return std::nullopt;
    }
    ParamSet p;
    const Expr& num = e.kids[0];
    const Expr* ln = nullptr;
    if (num.kind == NodeKind::Ln) {
        ln = &num;
        p.c = 1.0;
    } else if (num.kind == NodeKind::Pow && num.kids[0].kind == NodeKind::Ln &&
               is_const(num.kids[1])) {
        ln = &num.kids[0];
        p.c = num.kids[1].value;
    } else {
        why = "numerator is not ln(..)^c";
        return std::nullopt;
    }
    auto inner = as_cpow(ln->kids[0]);
    if (!inner) {
        why = "ln argument is not a*x^b";
        return std::nullopt;
    }
    p.a = inner->c;
    p.b = inner->d;
    auto den = as_cpow(e.kids[1]);
    if (!den) {
        why = "denominator is not d*x^f";
        return std::nullopt;
    }
    p.d = den->c;
    p.f = den->d;
    return p;
}

std::optional<ParamSet> m_p7(const Expr& e, std::string& why) {
    auto [scale, fs] = split_scale(e);
    if (fs.size() != 2) {
        why = "expected a*x^b*W(c x^d)^f";
        return std::nullopt;
    }
    ParamSet p;
    p.a = scale;
    bool have_pow = false, have_w = false;
    for (const Expr& f : fs) {
        const Expr* w = nullptr;
        double wpow = 1.0;
        if (f.kind == NodeKind::W) {
            w = &f;
        } else if (f.kind == NodeKind::Pow && f.kids[0].kind == NodeKind::W &&
                   is_const(f.kids[1])) {
            w = &f.kids[0];
            wpow = f.kids[1].value;
        }
        if (w) {
            auto inner = as_cpow(w->kids[0]);
            if (!inner) {
                why = "W argument is not c*x^d";
                return std::nullopt;
            }
            p.c = inner->c;
            p.d = inner->d;
            p.f = wpow;
            have_w = true;
        } else if (auto d = as_power_of_x(f)) {
            p.b = *d;
            have_pow = true;
        } else {
            why = "unexpected factor";
            return std::nullopt;
        }
    }
    if (!(have_pow && have_w)) {
        why = "missing x^b or W(c x^d)^f factor";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_p8(const Expr& e, std::string& why) {
    auto [scale, fs] = split_scale(e);
    if (scale == 1.0 && fs.size() == 2) {
        const Expr *w = nullptr, *ex = nullptr;
        for (const Expr& f : fs) {
            if (f.kind == NodeKind::W && is_var(f.kids[0])) w = &f;
            if (f.kind == NodeKind::Exp && is_var(f.kids[0])) ex = &f;
        }
        if (w && ex) return ParamSet{};
    }
    why = "expected W(x)*exp(x)";
    return std::nullopt;
}

std::optional<ParamSet> m_p9(const Expr& e, std::string& why) {
    if (e.kind == NodeKind::Div && e.kids[0].kind == NodeKind::Ln &&
        is_var(e.kids[0].kids[0]) && e.kids[1].kind == NodeKind::W &&
        is_var(e.kids[1].kids[0]))
        return ParamSet{};
    why = "expected ln(x)/W(x)";
    return std::nullopt;
}

std::optional<ParamSet> m_p10(const Expr& e, std::string& why) {
    ParamSet p;
    const Expr* quot = nullptr;
    const Kids ts = terms(e);
    for (const Expr& t : ts) {
        if (is_const(t)) {
            p.c += t.value;
        } else if (t.kind == NodeKind::Div && !quot) {
            quot = &t;
        } else {
            why = "expected a*W(bx)/(x*(W(bx)+1)) + c";
            return std::nullopt;
        }
    }
    if (!quot) {
        why = "no quotient term";
        return std::nullopt;
    }
    auto [scale, nfs] = split_scale(quot->kids[0]);
    if (nfs.size() != 1 || nfs[0].kind != NodeKind::W) {
        why = "numerator is not a*W(bx)";
        return std::nullopt;
    }
    auto barg = as_linear(nfs[0].kids[0]);
    if (!barg || barg->beta != 0.0 || barg->alpha == 0.0) {
        why = "W argument is not b*x";
        return std::nullopt;
    }
    p.a = scale;
    p.b = barg->alpha;
    // denominator: x * (W(bx) + 1)
    const Kids dfs = factors(quot->kids[1]);
    if (dfs.size() != 2) {
        why = "denominator is not x*(W(bx)+1)";
        return std::nullopt;
    }
    const Expr *var = nullptr, *sum = nullptr;
    for (const Expr& f : dfs) {
        if (is_var(f)) var = &f;
        if (f.kind == NodeKind::Add) sum = &f;
    }
    if (!var || !sum || sum->kids.size() != 2) {
        why = "denominator is not x*(W(bx)+1)";
        return std::nullopt;
    }
    bool one_ok = false, w_ok = false;
    for (const Expr& k : sum->kids) {
        if (is_const(k) && k.value == 1.0) one_ok = true;
        if (k.kind == NodeKind::W && structural_equal(k, nfs[0])) w_ok = true;
    }
    if (!one_ok || !w_ok) {
        why = "denominator W term does not mirror the numerator";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_p11(const Expr& e, std::string& why) {
    if (e.kind != NodeKind::Div || e.kids[0].kind != NodeKind::Ln) {
        why = "expected ln(ax+b)/(cx+d)";
        return std::nullopt;
    }
    auto num = as_linear(e.kids[0].kids[0]);
    auto den = as_linear(e.kids[1]);
    if (!num || num->alpha == 0.0 || !den || den->alpha == 0.0) {
        why = "numerator/denominator are not linear";
        return std::nullopt;
    }
    ParamSet p;
    p.a = num->alpha;
    p.b = num->beta;
    p.c = den->alpha;
    p.d = den->beta;
    return p;
}

// shared by S1/S2: a*x + b + c*f(..), f = exp(linear) or exp(W(x))
std::optional<ParamSet> sum_with_exp(const Expr& e, bool want_w, std::string& why) {
    ParamSet p;
    bool have_exp = false;
    double alpha = 0.0;
    for (const Expr& t : terms(e)) {
        if (is_const(t)) {
            p.b += t.value;
            continue;
        }
        auto [scale, fs] = split_scale(t);
        if (fs.size() == 1 && fs[0].kind == NodeKind::Exp) {
            const Expr& arg = fs[0].kids[0];
            if (want_w) {
                if (arg.kind != NodeKind::W || !is_var(arg.kids[0])) {
                    why = "exp argument is not W(x)";
                    return std::nullopt;
                }
            } else {
                auto l = as_linear(arg);
                if (!l || l->beta != 0.0 || l->alpha == 0.0) {
                    why = "exp argument is not d*x";
                    return std::nullopt;
                }
                p.d = l->alpha;
            }
            if (have_exp) {
                why = "more than one exponential term";
                return std::nullopt;
            }
            p.c = scale;
            have_exp = true;
        } else if (auto l = as_linear(t); l && l->beta == 0.0) {
            alpha += l->alpha;
        } else {
            why = "unexpected term";
            return std::nullopt;
        }
    }
    if (!have_exp || alpha == 0.0) {
        why = "missing linear or exponential term";
        return std::nullopt;
    }
    p.a = alpha;
    return p;
}

std::optional<ParamSet> m_s1(const Expr& e, std::string& why) {
    return sum_with_exp(e, false, why);
}
std::optional<ParamSet> m_s2(const Expr& e, std::string& why) {
    return sum_with_exp(e, true, why);
}

std::optional<ParamSet> m_s3(const Expr& e, std::string& why) {
    // a(x+b) + c ln(x/d): flattened a*x + a*b + c*ln(x/d)
    ParamSet p;
    bool have_ln = false;
    double alpha = 0.0, beta = 0.0;
    for (const Expr& t : terms(e)) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() == 1 && fs[0].kind == NodeKind::Ln) {
            const Expr& arg = fs[0].kids[0];
            double d = 1.0;
            if (is_var(arg)) {
                d = 1.0;
            } else if (arg.kind == NodeKind::Div && is_var(arg.kids[0]) &&
                       is_const(arg.kids[1])) {
                d = arg.kids[1].value;
            } else if (arg.kind == NodeKind::Mul && arg.kids.size() == 2 &&
                       is_const(arg.kids[0]) && is_var(arg.kids[1])) {
                d = 1.0 / arg.kids[0].value;  // ln(x/d) written as ln((1/d)*x)
            } else {
                why = "ln argument is not x/d";
                return std::nullopt;
            }
            if (have_ln) {
                why = "more than one ln term";
                return std::nullopt;
            }
            p.c = scale;
            p.d = d;
            have_ln = true;
        } else if (auto l = as_linear(t)) {
            alpha += l->alpha;
            beta += l->beta;
        } else {
            why = "unexpected term";
            return std::nullopt;
        }
    }
    if (!have_ln || alpha == 0.0) {
        why = "missing linear or ln term";
        return std::nullopt;
    }
    p.a = alpha;
    p.b = beta / alpha;
    return p;
}

std::optional<ParamSet> m_s4(const Expr& e, std::string& why) {
    // x^a + ln(x^b) (the ln already normalized to b*ln(x))
    ParamSet p;
    bool have_pow = false, have_ln = false;
    for (const Expr& t : terms(e)) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() != 1) {
            why = "unexpected term";
            return std::nullopt;
        }
        if (fs[0].kind == NodeKind::Ln && is_var(fs[0].kids[0])) {
            if (have_ln) {
                why = "more than one ln term";
                return std::nullopt;
            }
            p.b = scale;
            have_ln = true;
        } else if (auto d = as_power_of_x(fs[0]); d && scale == 1.0) {
            if (have_pow) {
                why = "more than one power term";
                return std::nullopt;
            }
            p.a = *d;
            have_pow = true;
        } else {
            why = "term is neither x^a nor ln(x^b)";
            return std::nullopt;
        }
    }
    if (!(have_pow && have_ln)) {
        why = "missing x^a or ln(x^b) term";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_s5(const Expr& e, std::string& why) {
    // ln(x^a) + W(x^b) (ln normalized to a*ln(x))
    ParamSet p;
    bool have_ln = false, have_w = false;
    for (const Expr& t : terms(e)) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() != 1) {
            why = "unexpected term";
            return std::nullopt;
        }
        if (fs[0].kind == NodeKind::Ln && is_var(fs[0].kids[0])) {
            p.a = scale;
            have_ln = true;
        } else if (fs[0].kind == NodeKind::W && scale == 1.0) {
            auto d = as_power_of_x(fs[0].kids[0]);
            if (!d) {
                why = "W argument is not x^b";
                return std::nullopt;
            }
            p.b = *d;
            have_w = true;
        } else {
            why = "term is neither ln(x^a) nor W(x^b)";
            return std::nullopt;
        }
    }
    if (!(have_ln && have_w)) {
        why = "missing ln(x^a) or W(x^b) term";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_s6(const Expr& e, std::string& why) {
    // W(ax) - W(bx)
    const Kids ts = terms(e);
    if (ts.size() != 2) {
        why = "expected W(ax) - W(bx)";
        return std::nullopt;
    }
    ParamSet p;
    bool have_pos = false, have_neg = false;
    for (const Expr& t : ts) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() != 1 || fs[0].kind != NodeKind::W) {
            why = "term is not a W term";
            return std::nullopt;
        }
        auto l = as_linear(fs[0].kids[0]);
        if (!l || l->beta != 0.0 || l->alpha == 0.0) {
            why = "W argument is not a multiple of x";
            return std::nullopt;
        }
        if (scale == 1.0) {
            p.a = l->alpha;
            have_pos = true;
        } else if (scale == -1.0) {
            p.b = l->alpha;
            have_neg = true;
        } else {
            why = "W coefficient must be +1 or -1";
            return std::nullopt;
        }
    }
    if (!(have_pos && have_neg)) {
        why = "need one positive and one negative W term";
        return std::nullopt;
    }
    return p;
}

bool is_one_over_x(const Expr& e) {
    if (e.kind == NodeKind::Div && is_const(e.kids[0]) && e.kids[0].value == 1.0 &&
        is_var(e.kids[1]))
        return true;
    if (e.kind == NodeKind::Pow && is_var(e.kids[0]) && is_const(e.kids[1]) &&
        e.kids[1].value == -1.0)
        return true;
    return false;
}

std::optional<ParamSet> m_s7(const Expr& e, std::string& why) {
    const Kids ts = terms(e);
    if (ts.size() == 2) {
        bool w_x = false, w_inv = false;
        for (const Expr& t : ts) {
            if (t.kind != NodeKind::W) continue;
            if (is_var(t.kids[0])) w_x = true;
            if (is_one_over_x(t.kids[0])) w_inv = true;
        }
        if (w_x && w_inv) return ParamSet{};
    }
    why = "expected W(x) + W(1/x)";
    return std::nullopt;
}

std::optional<ParamSet> m_s8(const Expr& e, std::string& why) {
    // 2W(ax) - W((bx)^2)
    const Kids ts = terms(e);
    if (ts.size() != 2) {
        why = "expected 2W(ax) - W((bx)^2)";
        return std::nullopt;
    }
    ParamSet p;
    bool have2 = false, have_sq = false;
    for (const Expr& t : ts) {
        auto [scale, fs] = split_scale(t);
        if (fs.size() != 1 || fs[0].kind != NodeKind::W) {
            why = "term is not a W term";
            return std::nullopt;
        }
        const Expr& arg = fs[0].kids[0];
        if (scale == 2.0) {
            auto l = as_linear(arg);
            if (!l || l->beta != 0.0 || l->alpha == 0.0) {
                why = "first W argument is not a*x";
                return std::nullopt;
            }
            p.a = l->alpha;
            have2 = true;
        } else if (scale == -1.0) {
            // (b x)^2, or the equivalent k*x^2 with k > 0
            if (arg.kind == NodeKind::Pow && is_const(arg.kids[1]) &&
                arg.kids[1].value == 2.0) {
                auto l = as_linear(arg.kids[0]);
                if (!l || l->beta != 0.0 || l->alpha == 0.0) {
                    why = "squared W argument is not (b*x)^2";
                    return std::nullopt;
                }
                p.b = l->alpha;
                have_sq = true;
            } else if (auto cp = as_cpow(arg); cp && cp->d == 2.0 && cp->c > 0.0) {
                p.b = std::sqrt(cp->c);
                have_sq = true;
            } else {
                why = "squared W argument is not (b*x)^2";
                return std::nullopt;
            }
        } else {
            why = "W coefficients must be 2 and -1";
            return std::nullopt;
        }
    }
    if (!(have2 && have_sq)) {
        why = "missing 2W(ax) or W((bx)^2) term";
        return std::nullopt;
    }
    return p;
}

std::optional<ParamSet> m_s9(const Expr& e, std::string& why) {
    // x * sum(a_k ln(b_k x)) or sum(a_k x ln(b_k x))
    ParamSet p;
    auto take_ln = [&](const Expr& lnterm, double coeff) -> bool {
        if (lnterm.kind != NodeKind::Ln) return false;
        auto l = as_linear(lnterm.kids[0]);
        if (!l || l->beta != 0.0 || l->alpha <= 0.0) return false;
        p.coeffs.emplace_back(coeff, l->alpha);
        return true;
    };
    if (e.kind == NodeKind::Mul) {
        auto [scale, fs] = split_scale(e);
        if (fs.size() == 2) {
            const Expr *var = nullptr, *sum = nullptr;
            for (const Expr& f : fs) {
                if (is_var(f)) var = &f;
                else sum = &f;
            }
            if (var && sum) {
                if (sum->kind == NodeKind::Ln) {
                    if (take_ln(*sum, scale)) return p;
                } else if (sum->kind == NodeKind::Add) {
                    bool ok = true;
                    for (const Expr& t : sum->kids) {
                        auto [s2, fs2] = split_scale(t);
                        if (fs2.size() == 1 && take_ln(fs2[0], scale * s2)) continue;
                        ok = false;
                        break;
                    }
                    if (ok && !p.coeffs.empty()) return p;
                }
            }
        }
        p.coeffs.clear();
    }
    if (e.kind == NodeKind::Add) {
        bool ok = true;
        for (const Expr& t : e.kids) {
            auto [scale, fs] = split_scale(t);
            const Expr *var = nullptr, *ln = nullptr;
            if (fs.size() == 2) {
                for (const Expr& f : fs) {
                    if (is_var(f)) var = &f;
                    if (f.kind == NodeKind::Ln) ln = &f;
                }
            }
            if (!var || !ln || !take_ln(*ln, scale)) {
                ok = false;
                break;
            }
        }
        if (ok && !p.coeffs.empty()) return p;
    }
    why = "expected x * sum of a_k ln(b_k x)";
    return std::nullopt;
}

std::optional<ParamSet> m_c3(const Expr& e, std::string& why) {
    if (e.kind != NodeKind::Pow) {
        why = "expected (a x^b)^(c x^d)";
        return std::nullopt;
    }
    auto base = as_cpow(e.kids[0]);
    auto expo = as_cpow(e.kids[1]);
    if (!base || !expo) {
        why = "base/exponent are not of the form k*x^m";
        return std::nullopt;
    }
    ParamSet p;
    p.a = base->c;
    p.b = base->d;
    p.c = expo->c;
    p.d = expo->d;
    return p;
}

std::optional<ParamSet> m_c5(const Expr& e, std::string& why) {
    // a (b x^K)^(ln x) with K = ln c (constant after folding)
    auto [scale, fs] = split_scale(e);
    if (fs.size() != 1 || fs[0].kind != NodeKind::Pow ||
        fs[0].kids[1].kind != NodeKind::Ln || !is_var(fs[0].kids[1].kids[0])) {
        why = "expected a*(b x^ln(c))^ln(x)";
        return std::nullopt;
    }
    auto base = as_cpow(fs[0].kids[0]);
    if (!base || base->d == 0.0) {
        why = "power base is not b*x^ln(c)";
        return std::nullopt;
    }
    ParamSet p;
    p.a = scale;
    p.b = base->c;
    p.c = std::exp(base->d);
    return p;
}

std::optional<ParamSet> m_c6(const Expr& e, std::string& why) {
    // a x^(b tsr(x^c))
    auto [scale, fs] = split_scale(e);
    if (fs.size() != 1 || fs[0].kind != NodeKind::Pow || !is_var(fs[0].kids[0])) {
        why = "expected a*x^(b*tsr(x^c))";
        return std::nullopt;
    }
    const Expr& expo = fs[0].kids[1];
    double b = 1.0;
    const Expr* ts = nullptr;
    if (expo.kind == NodeKind::Tsr) {
        ts = &expo;
    } else if (expo.kind == NodeKind::Mul && expo.kids.size() == 2 &&
               is_const(expo.kids[0]) && expo.kids[1].kind == NodeKind::Tsr) {
        b = expo.kids[0].value;
        ts = &expo.kids[1];
    }
    if (!ts) {
        why = "exponent is not b*tsr(x^c)";
        return std::nullopt;
    }
    auto inner = as_power_of_x(ts->kids[0]);
    if (!inner) {
        why = "tsr argument is not x^c";
        return std::nullopt;
    }
    ParamSet p;
    p.a = scale;
    p.b = b;
    p.c = *inner;
    return p;
}

std::optional<ParamSet> m_c10(const Expr& e, std::string& why) {
    // a tsr(bx)^(cx)
    auto [scale, fs] = split_scale(e);
    if (fs.size() != 1 || fs[0].kind != NodeKind::Pow ||
        fs[0].kids[0].kind != NodeKind::Tsr) {
        why = "expected a*tsr(b*x)^(c*x)";
        return std::nullopt;
    }
    auto barg = as_linear(fs[0].kids[0].kids[0]);
    auto carg = as_linear(fs[0].kids[1]);
    if (!barg || barg->beta != 0.0 || barg->alpha == 0.0 || !carg ||
        carg->beta != 0.0 || carg->alpha == 0.0) {
        why = "tsr argument or exponent is not a multiple of x";
        return std::nullopt;
    }
    ParamSet p;
    p.a = scale;
    p.b = barg->alpha;
    p.c = carg->alpha;
    return p;
}

struct Entry {
    FamilyId family;
    Matcher matcher;
};

const std::vector<Entry>& matchers() {
    static const std::vector<Entry> table = {
        {FamilyId::P1, m_p1},
        {FamilyId::P2, m_p2},
        {FamilyId::P3, m_p3},
        {FamilyId::BernoulliGen, m_bern},  // ahead of its generalization P4
        {FamilyId::P4, m_p4},
        {FamilyId::P5, m_p5},
        {FamilyId::P6, m_p6},
        {FamilyId::P7, m_p7},
        {FamilyId::P8, m_p8},
        {FamilyId::P9, m_p9},
        {FamilyId::P10, m_p10},
        {FamilyId::P11, m_p11},
        {FamilyId::S1, m_s1},
        {FamilyId::S2, m_s2},
        {FamilyId::S3, m_s3},
        {FamilyId::S4, m_s4},
        {FamilyId::S5, m_s5},
        {FamilyId::S6, m_s6},
        {FamilyId::S7, m_s7},
        {FamilyId::S8, m_s8},
        {FamilyId::S9, m_s9},
        {FamilyId::C3, m_c3},
        {FamilyId::C5, m_c5},
        {FamilyId::C6, m_c6},
        {FamilyId::C10, m_c10},
    };
    return table;
}

}  // namespace

const std::vector<FamilyId>& match_priority_order() {
    static const std::vector<FamilyId> order = [] {
        std::vector<FamilyId> o;
        for (const auto& e : matchers()) o.push_back(e.family);
        return o;
    }();
    return order;
}

MatchResult match_family(const Expr& e) {
    MatchResult r;
    Expr n = normalize(e, &r.normalization_trace);
    std::vector<std::pair<FamilyId, std::string>> misses;
    for (const auto& entry : matchers()) {
        std::string why;
        if (auto p = entry.matcher(n, why)) {
            try {
                validate_params(entry.family, *p);
            } catch (const InvalidParamError& err) {
                misses.emplace_back(entry.family, err.what());
                continue;
            }
            r.family = entry.family;
            r.params = std::move(*p);
            r.normalization_trace.push_back(std::string("matched ") +
                                            family_name(entry.family));
            return r;
        }
        misses.emplace_back(entry.family, why);
    }
    // nearest first: families whose canonical template shares the input's
    // top-level shape
    std::vector<std::string> near;
    for (int pass = 0; pass < 2 && near.size() < 6; ++pass) {
        for (const auto& [fam, why] : misses) {
            if (near.size() >= 6) break;
            NodeKind tk = NodeKind::Const;
            try {
                tk = render_family(fam, canonical_params(fam)).kind;
            } catch (...) {
            }
            const bool same = tk == n.kind;
            if ((pass == 0) == same)
                near.push_back(std::string(family_name(fam)) + ": " + why);
        }
    }
    throw NoMatchError("no catalog family matches '" + render(n) + "'", near);
}

Expr render_family(FamilyId family, const ParamSet& p) {
    using E = Expr;
    auto C = [](double v) { return E::constant(v); };
    auto X = [] { return E::var(); };
    auto add = [](std::vector<Expr> k) { return E::node(NodeKind::Add, std::move(k)); };
    auto mul = [](std::vector<Expr> k) { return E::node(NodeKind::Mul, std::move(k)); };
    auto div = [](Expr a, Expr b) {
        return E::node(NodeKind::Div, {std::move(a), std::move(b)});
    };
    auto pw = [](Expr a, Expr b) {
        return E::node(NodeKind::Pow, {std::move(a), std::move(b)});
    };
    auto fn = [](NodeKind k, Expr a) { return E::node(k, {std::move(a)}); };

    Expr raw;
    switch (family) {
        case FamilyId::P1:
            raw = mul({pw(add({mul({C(p.a), X()}), C(p.b)}), C(p.c)),
                       fn(NodeKind::Exp, add({mul({C(p.d), X()}), C(p.f)}))});
            break;
        case FamilyId::P2:
            raw = mul({fn(NodeKind::Exp,
                          add({mul({C(p.a), fn(NodeKind::W, X())}), C(p.b)})),
                       pw(X(), C(p.c))});
            break;
        case FamilyId::P3:
            raw = add({mul({C(p.a), pw(X(), C(p.b)),
                            fn(NodeKind::Exp, mul({C(p.c), pw(X(), C(p.d))}))}),
                       C(p.f)});
            break;
        case FamilyId::P4:
            raw = div(add({mul({C(p.a), X()}), C(p.b)}),
                      add({mul({C(p.c),
                                fn(NodeKind::Exp, mul({C(-p.d), X()}))}),
                           C(-p.f)}));
            break;
        case FamilyId::P5:
            raw = add({mul({C(p.a), X(), fn(NodeKind::Coth, mul({C(p.b), X()}))}),
                       mul({C(-p.a), X()})});
            break;
        case FamilyId::P6:
            raw = div(pw(fn(NodeKind::Ln, mul({C(p.a), pw(X(), C(p.b))})), C(p.c)),
                      mul({C(p.d), pw(X(), C(p.f))}));
            break;
        case FamilyId::P7:
            raw = mul({C(p.a), pw(X(), C(p.b)),
                       pw(fn(NodeKind::W, mul({C(p.c), pw(X(), C(p.d))})), C(p.f))});
            break;
        case FamilyId::P8:
            raw = mul({fn(NodeKind::W, X()), fn(NodeKind::Exp, X())});
            break;
        case FamilyId::P9:
            raw = div(fn(NodeKind::Ln, X()), fn(NodeKind::W, X()));
            break;
        case FamilyId::P10:
            raw = add({div(mul({C(p.a), fn(NodeKind::W, mul({C(p.b), X()}))}),
                           mul({X(), add({fn(NodeKind::W, mul({C(p.b), X()})),
                                          C(1.0)})})),
                       C(p.c)});
            break;
        case FamilyId::P11:
            raw = div(fn(NodeKind::Ln, add({mul({C(p.a), X()}), C(p.b)})),
                      add({mul({C(p.c), X()}), C(p.d)}));
            break;
        case FamilyId::S1:
            raw = add({mul({C(p.a), X()}), C(p.b),
                       mul({C(p.c), fn(NodeKind::Exp, mul({C(p.d), X()}))})});
            break;
        case FamilyId::S2:
            raw = add({mul({C(p.a), X()}), C(p.b),
                       mul({C(p.c), fn(NodeKind::Exp, fn(NodeKind::W, X()))})});
            break;
        case FamilyId::S3:
            raw = add({mul({C(p.a), add({X(), C(p.b)})}),
                       mul({C(p.c), fn(NodeKind::Ln, div(X(), C(p.d)))})});
            break;
        case FamilyId::S4:
            raw = add({pw(X(), C(p.a)), fn(NodeKind::Ln, pw(X(), C(p.b)))});
            break;
        case FamilyId::S5:
            raw = add({fn(NodeKind::Ln, pw(X(), C(p.a))),
                       fn(NodeKind::W, pw(X(), C(p.b)))});
            break;
        case FamilyId::S6:
            raw = E::node(NodeKind::Sub, {fn(NodeKind::W, mul({C(p.a), X()})),
                                          fn(NodeKind::W, mul({C(p.b), X()}))});
            break;
        case FamilyId::S7:
            raw = add({fn(NodeKind::W, X()), fn(NodeKind::W, div(C(1.0), X()))});
            break;
        case FamilyId::S8:
            raw = E::node(NodeKind::Sub,
                          {mul({C(2.0), fn(NodeKind::W, mul({C(p.a), X()}))}),
                           fn(NodeKind::W, pw(mul({C(p.b), X()}), C(2.0)))});
            break;
        case FamilyId::S9: {
            std::vector<Expr> lnterms;
            for (const auto& [ak, bk] : p.coeffs)
                lnterms.push_back(
                    mul({C(ak), fn(NodeKind::Ln, mul({C(bk), X()}))}));
            raw = mul({X(), add(std::move(lnterms))});
            break;
        }
        case FamilyId::C3:
            raw = pw(mul({C(p.a), pw(X(), C(p.b))}),
                     mul({C(p.c), pw(X(), C(p.d))}));
            break;
        case FamilyId::C5:
            raw = mul({C(p.a), pw(mul({C(p.b), pw(X(), C(std::log(p.c)))}),
                                  fn(NodeKind::Ln, X()))});
            break;
        case FamilyId::C6:
            raw = mul({C(p.a),
                       pw(X(), mul({C(p.b), fn(NodeKind::Tsr, pw(X(), C(p.c)))}))});
            break;
        case FamilyId::C10:
            raw = mul({C(p.a), pw(fn(NodeKind::Tsr, mul({C(p.b), X()})),
                                  mul({C(p.c), X()}))});
            break;
        case FamilyId::BernoulliGen:
            raw = div(mul({C(p.a), X()}),
                      add({fn(NodeKind::Exp, mul({C(-p.b), X()})), C(-p.c)}));
            break;
    }
    return normalize(raw);
}

SolveResult solve_text(const std::string& text, double y) {
    SolveResult out;
    out.match = match_family(parse(text));
    out.solutions = invert(out.match.family, out.match.params, y);
    return out;
}

}  // namespace lamw
