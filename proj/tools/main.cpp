// lamw: branch-aware Lambert W evaluation, a validated catalog of
// closed-form inverses, polar/rotation transforms and an equation-solving
// front end. All numeric output carries 17 significant digits; exit codes:
// 0 ok, 2 parse/match error, 3 domain error, 4 convergence, 5 erratum.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lamw/applications.hpp"
#include "lamw/catalog.hpp"
#include "lamw/expr.hpp"
#include "lamw/lambert.hpp"
#include "lamw/matcher.hpp"
#include "lamw/polar.hpp"
#include "lamw/validation.hpp"

namespace {

using namespace lamw;

std::string fmt17(double v) {
    if (std::isnan(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s == "inf") return "1e999";
    if (s == "-inf") return "-1e999";
    return s;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

int branch_code(Branch b) { return b == Branch::Principal ? 0 : -1; }

std::string solutions_json(const SolutionSet& set) {
    std::string out = "[";
    bool first = true;
    for (const auto& s : set.solutions) {
        if (!first) out += ",";
        first = false;
        out += "{\"x\":" + fmt17(s.x) + ",\"branches\":[";
        for (std::size_t i = 0; i < s.branches.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(branch_code(s.branches[i]));
        }
        out += "],\"case\":";
        if (s.case_tag)
            out += *s.case_tag == CaseTag::Case1 ? "\"case1\"" : "\"case2\"";
        else
            out += "null";
        out += ",\"residual\":" + fmt17(s.residual) + "}";
    }
    out += "]";
    return out;
}

std::string params_json(FamilyId family, const ParamSet& p) {
    if (family == FamilyId::S9) {
        std::string out = "{\"coeffs\":[";
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            if (i) out += ",";
            out += "[" + fmt17(p.coeffs[i].first) + "," +
                   fmt17(p.coeffs[i].second) + "]";
        }
        return out + "]}";
    }
    std::string out = "{";
    out += "\"a\":" + fmt17(p.a) + ",\"b\":" + fmt17(p.b) +
           ",\"c\":" + fmt17(p.c) + ",\"d\":" + fmt17(p.d) +
           ",\"f\":" + fmt17(p.f) + "}";
    return out;
}

void print_solution_line(FamilyId family, const ParamSet& p,
                         const SolutionSet& set, const std::string& erratum) {
    std::string out = "{\"family\":" + jstr(family_name(family)) +
                      ",\"params\":" + params_json(family, p);
    if (!erratum.empty())
        out += ",\"erratum\":" + jstr(erratum) +
               ",\"solutions_source\":\"numeric-fallback\"";
    out += ",\"solutions\":" + solutions_json(set) + "}";
    std::cout << out << "\n";
}

ParamSet parse_params(const std::string& text) {
    ParamSet p;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t eq = text.find('=', i);
        if (eq == std::string::npos)
            throw InvalidParamError("--params: expected key=value pairs");
        std::string key = text.substr(i, eq - i);
        std::size_t end = text.find(',', eq + 1);
        if (key == "coeffs") end = std::string::npos;  // consumes the rest
        std::string val = text.substr(
            eq + 1, end == std::string::npos ? std::string::npos : end - eq - 1);
        if (key == "a") p.a = std::stod(val);
        else if (key == "b") p.b = std::stod(val);
        else if (key == "c") p.c = std::stod(val);
        else if (key == "d") p.d = std::stod(val);
        else if (key == "f") p.f = std::stod(val);
        else if (key == "g") p.g = std::stod(val);
        else if (key == "coeffs") {
            // coeffs=a1:b1;a2:b2;...
            std::size_t j = 0;
            while (j < val.size()) {
                std::size_t colon = val.find(':', j);
                if (colon == std::string::npos)
                    throw InvalidParamError("--params coeffs: expected a:b pairs");
                std::size_t semi = val.find(';', colon + 1);
                const double ak = std::stod(val.substr(j, colon - j));
                const double bk = std::stod(val.substr(
                    colon + 1,
                    semi == std::string::npos ? std::string::npos : semi - colon - 1));
                p.coeffs.emplace_back(ak, bk);
                if (semi == std::string::npos) break;
                j = semi + 1;
            }
        } else {
            throw InvalidParamError("--params: unknown key '" + key + "'");
        }
        if (end == std::string::npos) break;
        i = end + 1;
    }
    return p;
}

int run_validate() {
    for (const auto& r : provenance_table()) {
        std::string out = "{\"id\":" + jstr(r.id) + ",\"kind\":" + jstr(r.kind);
        if (r.eq > 0) out += ",\"eq\":" + std::to_string(r.eq);
        out += ",\"forward\":" + jstr(r.forward_formula) +
               ",\"inverse\":" + jstr(r.inverse_formula) +
               ",\"status\":" + jstr(gate_status_name(r.status));
        if (r.kind == "family") {
            int prio = 0;
            for (std::size_t i = 0; i < match_priority_order().size(); ++i)
                if (family_name(match_priority_order()[i]) == r.id)
                    prio = static_cast<int>(i) + 1;
            out += ",\"match_priority\":" + std::to_string(prio);
        }
        out += ",\"grid_points\":" + std::to_string(r.validation.grid_points) +
               ",\"mismatches\":" + std::to_string(r.validation.mismatches) +
               ",\"max_rel_dev\":" + fmt17(r.validation.max_rel_dev) +
               ",\"notes\":" + jstr(r.notes) + "}";
        std::cout << out << "\n";
    }
    return gate_all_resolved() ? 0 : 5;
}

CurveKind curve_from_string(const std::string& s) {
    if (s == "log") return CurveKind::Log;
    if (s == "exp") return CurveKind::Exp;
    if (s == "w") return CurveKind::LambertW;
    if (s == "xexpx") return CurveKind::XExpX;
    throw InvalidParamError("unknown curve '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lamw: real Lambert W toolkit (branch-aware W, closed-form equation "
        "catalog, tetration, polar/rotation transforms)"};
    app.require_subcommand(1);

    // w
    auto* cw = app.add_subcommand("w", "evaluate a real branch of W");
    int branch = 0;
    double z = 0.0, base = 0.0;
    bool has_base = false;
    cw->add_option("--branch", branch, "0 (principal) or -1 (secondary)")
        ->check(CLI::IsMember({0, -1}));
    cw->add_option("--z", z, "argument")->required();
    auto* bopt = cw->add_option("--base", base, "solve x*base^x = z instead");

    // solve
    auto* cs = app.add_subcommand("solve", "parse an equation and invert it");
    std::string equation;
    double yval = 0.0;
    cs->add_option("--equation", equation, "equation text, e.g. \"y = x*exp(x)\"")
        ->required();
    cs->add_option("--y", yval, "right-hand-side value")->required();

    // invert
    auto* ci = app.add_subcommand("invert", "invert a catalog family directly");
    std::string family_str, params_str;
    double yv2 = 0.0;
    ci->add_option("--family", family_str, "family id, e.g. P1")->required();
    ci->add_option("--params", params_str, "a=..,b=..[,coeffs=a1:b1;a2:b2]");
    ci->add_option("--y", yv2, "value to invert")->required();

    // polar
    auto* cp = app.add_subcommand("polar", "sample a curve's polar form (CSV)");
    std::string curve1;
    double tmin = 0.0, tmax = 0.0;
    int steps1 = 0;
    cp->add_option("--curve", curve1, "log|exp|w|xexpx")->required();
    cp->add_option("--theta-min", tmin)->required();
    cp->add_option("--theta-max", tmax)->required();
    cp->add_option("--steps", steps1)->required();

    // rotate
    auto* cr = app.add_subcommand("rotate", "sample a rotated exp/log curve (CSV)");
    std::string curve2;
    RotationSpec spec;
    double xmin = 0.0, xmax = 0.0;
    int steps2 = 0;
    cr->add_option("--curve", curve2, "exp|log")->required();
    cr->add_option("--A", spec.A)->required();
    cr->add_option("--B", spec.B)->required();
    cr->add_option("--phi", spec.phi)->required();
    cr->add_option("--x-min", xmin)->required();
    cr->add_option("--x-max", xmax)->required();
    cr->add_option("--steps", steps2)->required();

    // validate
    app.add_subcommand("validate",
                       "run the closed-form validation gate, print provenance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Branch br = branch == 0 ? Branch::Principal : Branch::Secondary;
        if (cw->parsed()) {
            has_base = bopt->count() > 0;
            const WResult r = has_base ? eval_w_base(br, base, z) : eval_w(br, z);
            std::cout << "{\"w\":" << fmt17(r.value)
                      << ",\"residual\":" << fmt17(r.residual)
                      << ",\"iterations\":" << r.iterations << "}\n";
        } else if (cs->parsed()) {
            try {
                SolveResult r = solve_text(equation, yval);
                print_solution_line(r.match.family, r.match.params, r.solutions, "");
            } catch (const ErratumError& e) {
                MatchResult m = match_family(parse(equation));
                print_solution_line(m.family, m.params, e.fallback(), e.what());
                return 5;
            }
        } else if (ci->parsed()) {
            const FamilyId fam = family_from_string(family_str);
            const ParamSet p = parse_params(params_str);
            try {
                SolutionSet sols = invert(fam, p, yv2);
                print_solution_line(fam, p, sols, "");
            } catch (const ErratumError& e) {
                print_solution_line(fam, p, e.fallback(), e.what());
                return 5;
            }
        } else if (cp->parsed()) {
            std::cout << "theta,r,branch\n";
            for (const auto& pt :
                 sample_polar(curve_from_string(curve1), tmin, tmax, steps1))
                std::cout << fmt17(pt.u) << "," << fmt17(pt.v) << ","
                          << branch_code(pt.branch) << "\n";
        } else if (cr->parsed()) {
            const CurveKind kind = curve_from_string(curve2);
            if (kind != CurveKind::Exp && kind != CurveKind::Log)
                throw InvalidParamError("rotate: curve must be exp or log");
            std::cout << "x,y,branch\n";
            for (const auto& pt : sample_rotation(kind, spec, xmin, xmax, steps2))
                std::cout << fmt17(pt.u) << "," << fmt17(pt.v) << ","
                          << branch_code(pt.branch) << "\n";
        } else {
            return run_validate();
        }
    } catch (const ParseError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 2;
    } catch (const NoMatchError& e) {
        std::string msg = e.what();
        for (const auto& m : e.near_misses()) msg += "; near miss: " + m;
        std::cerr << "{\"error\":" << jstr(msg) << "}\n";
        return 2;
    } catch (const InvalidParamError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 2;
    } catch (const OverflowError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 4;
    } catch (const ErratumError& e) {
        std::cerr << "{\"error\":" << jstr(e.what()) << "}\n";
        return 5;
    }
    return 0;
}
