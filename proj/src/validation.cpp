#include "lamw/validation.hpp"

#include <cmath>
#include <map>

#include "lamw/applications.hpp"
#include "lamw/oracle.hpp"
#include "lamw/polar.hpp"

namespace lamw {
namespace {

constexpr double kGateRelTol = 1e-7;
constexpr int kGateGridPoints = 50;

struct Annotation {
    bool corrected;  // shipped form deliberately differs from the stated text
    const char* fwd;
    const char* inv;
    const char* notes;
};

const std::map<FamilyId, Annotation>& annotations() {
    static const std::map<FamilyId, Annotation> table = {
        {FamilyId::P1,
         {false, "(a x + b)^c e^(d x + f)",
          "x = (c/d) W((d/(a c)) y^(1/c) e^(d b/(a c) - f/c)) - b/a", ""}},
        {FamilyId::P2,
         {false, "e^(a W(x) + b) x^c",
          "x = m e^m, m = (c/(a+c)) W((a+c) y^(1/c) / (c e^(b/c)))", ""}},
        {FamilyId::P3,
         {false, "a x^b e^(c x^d) + f",
          "x = [(b/(c d)) W(c d (y-f)^(d/b) / (b a^(d/b)))]^(1/d)", ""}},
        {FamilyId::P4,
         {false, "(a x + b)/(c e^(-d x) - f)",
          "x = [W0((c d e^(b d/a)/a) y e^(d f y/a)) - W-1((d f/a) y e^(d f y/a))]/d "
          "- b d/a",
          "stated shift -bd/a does not validate; the algebra gives -b/a: "
          "x = W_k((c d y/a) e^(d(b + f y)/a))/d - (b + f y)/a, with the W-1 term "
          "reducing to d f y/a on its branch region. Numeric fallback in use."}},
        {FamilyId::P5,
         {false, "a x coth(b x) - a x",
          "x = [W0(q) - W-1(q)]/(2 b), q = (-b/a) y e^((-b/a) y)",
          "the stated inverse validates against a x coth(b x) + a x (opposite "
          "trailing sign), not against this family; for this forward the whole "
          "inverse needs an extra minus sign. The stated W-argument exponent "
          "e^(-b/a) is read as e^((-b/a)y), the only reading consistent with the "
          "final derivation step. Numeric fallback in use."}},
        {FamilyId::P6,
         {false, "ln(a x^b)^c / (d x^f)",
          "x = e^(W(-f (a^(-f/b) d y)^(1/c) / (a^(1/b) b c)))",
          "the final step moves a^(1/b) inside the W argument and drops the -c/f "
          "factor when unwinding W; validated form: "
          "x = a^(-1/b) e^(-(c/f) W(-(f/(b c)) (a^(-f/b) d y)^(1/c))). "
          "Numeric fallback in use."}},
        {FamilyId::P7,
         {false, "a x^b W(c x^d)^f",
          "x = [((d f + b)/(b c)) W(q) e^(((d f + b)/b) W(q))]^(1/d), "
          "q = (b c/(d f + b)) (y/a)^(d/(d f + b))",
          "the W-argument factor c should be c^(b/(d f + b)); the stated general "
          "form is correct only at c = 1, and the compact variant additionally "
          "omits a (y/a)^(1/b) factor. Numeric fallback in use."}},
        {FamilyId::P8,
         {false, "W(x) e^x", "x = ln(^2(tcr(e^y)))",
          "reaches only forward values with e^y inside the height-3 tetra-root "
          "principal regime (base >= e^(-1/e))."}},
        {FamilyId::P9,
         {false, "ln(x)/W(x)", "x = [(1-y)/W(1-y)]^(y/(y-1))",
          "the exponent y/(y-1) should be y/(1-y); as stated the expression is "
          "the reciprocal of the inverse. Validated form: "
          "x = e^(-W(1-y)) e^(e^(-W(1-y))). Numeric fallback in use."}},
        {FamilyId::P10,
         {false, "a W(b x)/(x (W(b x) + 1)) + c",
          "x = [1 - 1/W(e a b/(y-c))] (e a b/(y-c))/(e b)", ""}},
        {FamilyId::P11,
         {false, "ln(a x + b)/(c x + d)",
          "x = [e^(W(k y e^(k y)) - W(-(c k^2/a) y e^(k y))) - b]/a, k = d - c b/a",
          "validates only when k = d - c b/a = +/-1; validated general form: "
          "x = -W_k((-c y/a) e^(k y))/(c y) - b/a. Numeric fallback in use."}},
        {FamilyId::S1,
         {false, "a x + b + c e^(d x)",
          "x = (1/d) ln((a/(d c)) W((d c/a) e^(d (y-b)/a)))", ""}},
        {FamilyId::S2,
         {false, "a x + b + c e^(W(x))",
          "W(x) = W(((y-b)/a) e^(c/a)) - c/a; x = W(x) e^(W(x))",
          "the catalog stops at W(x); the returned x applies w -> w e^w, with the "
          "intermediate W(x) recorded on the solution."}},
        {FamilyId::S3,
         {false, "a(x + b) + c ln(x/d)", "x = W((a d/c) e^(y/c - a b/c))/a",
          "the final step divides by a instead of multiplying by c/a; validated "
          "form: x = (c/a) W((a d/c) e^((y - a b)/c)). Numeric fallback in use."}},
        {FamilyId::S4,
         {false, "x^a + ln(x^b)", "x = [(b/a) W(e^(a y/b))]^(1/a)",
          "the W argument misses the factor a/b; validated form: "
          "x = [(b/a) W((a/b) e^(a y/b))]^(1/a). Numeric fallback in use."}},
        {FamilyId::S5,
         {false, "ln(x^a) + W(x^b)",
          "x = [(a/(a+b)) W(q)]^(1/b) e^((a/(b(a+b))) W(q)), "
          "q = ((a+b)/a) e^(b y/a)",
          ""}},
        {FamilyId::S6,
         {false, "W(a x) - W(b x)", "x = [y/(a b e^y - a^2)] e^(y/(b e^y - a))",
          "validates only at a = -1; validated form: "
          "x = [y/(a - b e^y)] e^(a y/(a - b e^y)). Numeric fallback in use."}},
        {FamilyId::S7,
         {true, "W(x) + W(1/x)",
          "x = (e^(y/2)/sqrt(2)) t^(1/2) e^(-sqrt(2) e^(-y/2) t^(-1/2)), "
          "t = y^2 e^y - 2 +/- sqrt((y^2 e^y - 2)^2 - 4)",
          "the stated case-2 chain inverts e^y t/2 = 1/W^2 into e^(-y)/2 t^(-1) "
          "(a factor-4 slip on W^2) and orients the ratio the same way as case 1; "
          "both preimages follow from the case-1 expression at the two signs of "
          "the discriminant root, which is what ships (Case1: +, Case2: -)."}},
        {FamilyId::S8,
         {false, "2 W(a x) - W((b x)^2)",
          "x = -+(a/b^2) e^(-y)(sqrt(1 - (b^2/a^2) y e^y) -+ 1) "
          "e^(-+(a^2/b^2) e^(-y)(sqrt(1 - (b^2/a^2) y e^y) -+ 1))",
          ""}},
        {FamilyId::S9,
         {false, "x sum_k a_k ln(b_k x)",
          "x = e^(W(v^(1/u) y/u)) / v^(1/u), u = sum a_k, v = prod b_k^(a_k)",
          "the catalog's statement sums from k = 1 and its derivation from k = 0; "
          "a single coefficient list is used, the origin label is irrelevant."}},
        {FamilyId::C3,
         {false, "(a x^b)^(c x^d)", "x = e^(W((a^(d/b) d/(b c)) ln y)/d) / a^(1/b)",
          ""}},
        {FamilyId::C5,
         {false, "a (b x^(ln c))^(ln x)",
          "x = e^((-ln b +/- sqrt(ln^2 b - 4 ln c (ln y - ln a)))/(2 ln c))",
          "the discriminant sign is flipped: the quadratic ln c t^2 + ln b t + "
          "(ln a - ln y) = 0 has discriminant ln^2 b + 4 ln c (ln y - ln a). "
          "Numeric fallback in use."}},
        {FamilyId::C6,
         {false, "a x^(b tsr(x^c))",
          "x = e^((1/(c sqrt(2))) [W(2 ln((y/a)^(c/b))) ln((y/a)^(c/a))]^(1/2))",
          "the second factor's exponent (y/a)^(c/a) should be (y/a)^(c/b). "
          "Numeric fallback in use."}},
        {FamilyId::C10,
         {false, "a tsr(b x)^(c x)", "x = ^2(tcr((y/a)^(b/c)))/b",
          "reaches only forward values whose tetra-root base lies in the height-3 "
          "principal regime (tsr(b x) >= e^(-1/e))."}},
        {FamilyId::BernoulliGen,
         {false, "a x/(e^(-b x) - c)",
          "x = [W0((b y/a) e^(b c y/a)) - W-1((b c y/a) e^(b c y/a))]/b",
          "valid where (b c y/a) e^(b c y/a) lies in [-1/e, 0) with b c y/a <= -1; "
          "preimages on the other side of the pole are outside this form's scope."}},
    };
    return table;
}

struct GateData {
    std::map<FamilyId, FamilyValidation> validations;
    std::map<FamilyId, GateStatus> status;
};

GateData compute_gate() {
    GateData g;
    for (FamilyId id : all_families()) {
        const ParamSet p = canonical_params(id);
        const auto [lo, hi] = sample_window(id, p);
        std::vector<double> ys;
        for (int i = 0; i < kGateGridPoints; ++i) {
            const double x = lo + (hi - lo) * i / (kGateGridPoints - 1);
            double y;
            try {
                y = forward(id, p, x);
            } catch (const Error&) {
                continue;
            }
            if (!std::isfinite(y)) continue;
            if (!domain_check(id, p, y).valid) continue;
            ys.push_back(y);
        }
        FamilyValidation v = validate_family(id, p, ys);
        g.validations[id] = v;
        const bool corrected = annotations().at(id).corrected;
        g.status[id] = !v.pass ? GateStatus::Erratum
                     : corrected ? GateStatus::PassCorrected
                                 : GateStatus::Pass;
    }
    return g;
}

const GateData& gate() {
    static const GateData g = compute_gate();
    return g;
}

// Exa2: validate the shipped film inverse by round trip on a short t grid.
FamilyValidation validate_film() {
    FamilyValidation v;
    const FilmParams ps[2] = {{1.0, 1.0}, {2.0, 3.0}};
    double worst = 0.0;
    for (const auto& p : ps) {
        for (int i = 0; i <= 40; ++i) {
            const double t = 10.0 * i / 40.0;
            const double tb = film_time(p, film_thickness(p, t, Branch::Principal));
            worst = std::max(worst, std::fabs(tb - t) / std::max(1.0, t));
            ++v.grid_points;
            if (std::fabs(tb - t) > 1e-9 * std::max(1.0, t)) ++v.mismatches;
        }
    }
    v.max_rel_dev = worst;
    v.pass = v.mismatches == 0;
    return v;
}

// CTP1/CTP2: rotated-graph points must land on rotation-matrix images.
FamilyValidation validate_rotation() {
    FamilyValidation v;
    const double phi = M_PI / 4.0;
    const RotationSpec spec{1.0, 1.0, phi};
    const double c = std::cos(phi), s = std::sin(phi);
    double worst = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const double t = -3.0 + 6.0 * i / 60.0;
        const double X = c * t - s * std::exp(t);
        const double Y = s * t + c * std::exp(t);
        double best = HUGE_VAL;
        for (Branch br : {Branch::Principal, Branch::Secondary}) {
            try {
                best = std::min(best, std::fabs(rotate_exp(spec, X, br) - Y));
            } catch (const Error&) {
            }
        }
        ++v.grid_points;
        worst = std::max(worst, best);
        if (!(best <= 1e-7)) ++v.mismatches;
    }
    v.max_rel_dev = worst;
    v.pass = v.mismatches == 0;
    return v;
}

std::vector<ProvenanceRecord> build_table() {
    std::vector<ProvenanceRecord> table;
    for (FamilyId id : all_families()) {
        const Annotation& a = annotations().at(id);
        ProvenanceRecord r;
        r.id = family_name(id);
        r.kind = "family";
        r.eq = family_equation_number(id);
        r.forward_formula = a.fwd;
        r.inverse_formula = a.inv;
        r.status = gate().status.at(id);
        r.notes = a.notes;
        r.validation = gate().validations.at(id);
        table.push_back(std::move(r));
    }
    {
        ProvenanceRecord r;
        r.id = "Exa2";
        r.kind = "application";
        r.forward_formula = "D(t) = (b/a)[1 + W(-e^(-1 - a^2 t/b^2))]";
        r.inverse_formula =
            "t = -(b^2/a^2)(1 + w + ln(-w)), w = (a/b)D - 1   [shipped]";
        r.notes =
            "the stated final line t = (b^2/a^2)[(a/b)D - 1] + (b^2/a^2) "
            "ln((a/b)D - 1) + b^2/a^2 has the overall sign flipped and a "
            "negative ln argument for physical D < b/a (and an unbalanced "
            "bracket); the shipped inverse follows from the consistent "
            "preceding line ln(-w e^w) = -1 - a^2 t/b^2.";
        r.validation = validate_film();
        r.status = r.validation.pass ? GateStatus::PassCorrected
                                     : GateStatus::Erratum;
        table.push_back(std::move(r));
    }
    {
        ProvenanceRecord r;
        r.id = "CTP1";
        r.kind = "rotation";
        r.forward_formula = "y = A e^(B x), rotated by phi (ccw for phi > 0)";
        r.inverse_formula =
            "y = (csc(phi)/B) ln(-(cot(phi)/(A B)) W_k(-A B tan(phi) "
            "e^(B sec(phi) x))) - cot(phi) x   [shipped]";
        r.notes =
            "the stated general form flips a sign when isolating the ordinate "
            "(its own pi/4 worked case contradicts it) and its theta+phi "
            "substitution rotates clockwise; the shipped counterclockwise form "
            "reproduces the worked pi/4 case sqrt(2) ln(-W(-e^(sqrt(2)x))) - x "
            "exactly. The W argument is negative, so both real branches trace "
            "the folded image. CTP2 is treated the same way.";
        r.validation = validate_rotation();
        r.status = r.validation.pass ? GateStatus::PassCorrected
                                     : GateStatus::Erratum;
        table.push_back(std::move(r));
    }
    return table;
}

}  // namespace

const char* gate_status_name(GateStatus s) {
    switch (s) {
        case GateStatus::Pass: return "pass";
        case GateStatus::PassCorrected: return "pass-corrected";
        case GateStatus::Erratum: return "erratum";
    }
    return "?";
}

FamilyValidation validate_family(FamilyId family, const ParamSet& p,
                                 const std::vector<double>& y_grid) {
    FamilyValidation v;
    v.family = family;
    const auto [lo, hi] = sample_window(family, p);
    RootSearchConfig cfg;
    const double h = (hi - lo) / cfg.subdivisions;
    cfg.lo = lo - 2.0 * h;  // catch roots sitting exactly on the window edge
    cfg.hi = hi + 2.0 * h;

    for (double y : y_grid) {
        const auto oracle = find_roots(
            [&](double x) { return forward(family, p, x) - y; }, cfg);
        SolutionSet closed;
        try {
            closed = invert_closed_raw(family, p, y);
        } catch (const Error&) {
        }
        std::vector<double> in_window;
        for (const auto& s : closed.solutions)
            if (s.x >= cfg.lo - 1e-12 && s.x <= cfg.hi + 1e-12)
                in_window.push_back(s.x);

        ++v.grid_points;
        if (in_window.size() != oracle.size()) {
            ++v.mismatches;
            continue;
        }
        double dev = 0.0;
        for (std::size_t i = 0; i < oracle.size(); ++i)
            dev = std::max(dev, std::fabs(in_window[i] - oracle[i]) /
                                    std::max(1.0, std::fabs(oracle[i])));
        v.max_rel_dev = std::max(v.max_rel_dev, dev);
        if (dev > kGateRelTol) ++v.mismatches;
    }
    v.pass = v.mismatches == 0 && v.grid_points >= kGateGridPoints / 2;
    return v;
}

GateStatus gate_status(FamilyId family) { return gate().status.at(family); }

const std::vector<ProvenanceRecord>& provenance_table() {
    static const std::vector<ProvenanceRecord> table = build_table();
    return table;
}

bool gate_all_resolved() {
    for (const auto& r : provenance_table())
        if (r.status == GateStatus::Erratum) return false;
    return true;
}

}  // namespace lamw
