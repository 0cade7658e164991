#pragma once

#include <string>
#include <vector>

#include "lamw/catalog.hpp"
#include "lamw/lambert.hpp"

namespace lamw {

/// The four curves with closed polar forms.
enum class CurveKind { Log, Exp, LambertW, XExpX };

const char* curve_name(CurveKind k);

/// Rotation of y = A e^(Bx) (or y = (1/B) ln(x/A)) by phi radians,
/// counterclockwise for phi > 0. The general closed forms require
/// sin(phi) != 0 and cos(phi) != 0.
struct RotationSpec {
    double A = 1.0;  ///< != 0
    double B = 1.0;  ///< != 0
    double phi = 0.0;
};

/// All real radii of the curve's polar form at angle theta; Log and Exp
/// produce one radius per admissible W branch. Each radius satisfies the
/// original Cartesian relation at (r cos th, r sin th).
/// Throws DomainError naming the violated trig/W constraint.
SolutionSet polar_radius(CurveKind kind, double theta);

/// y-value of the rotated image of y = A e^(Bx) at abscissa x:
///   y = (csc(phi)/B) ln(-(cot(phi)/(AB)) W_k(-AB tan(phi) e^(B sec(phi) x)))
///       - cot(phi) x.
/// Both branches are needed to trace the folded image curve.
double rotate_exp(const RotationSpec& spec, double x, Branch branch);

/// y-value of the rotated image of y = (1/B) ln(x/A) at abscissa x:
///   y = (sec(phi)/B) ln(-(tan(phi)/(AB)) W_k(-AB cot(phi) e^(-B csc(phi) x)))
///       + tan(phi) x.
double rotate_log(const RotationSpec& spec, double x, Branch branch);

/// Exact closed form of a quarter-turn rotation of y = e^x (clockwise
/// quarter turns, matching the catalog's phi = pi/2 special case
/// y = -ln(x)). n is taken mod 4.
struct QuarterTurnForm {
    std::string formula;         ///< e.g. "y = -ln(x)"
    double (*eval)(double x);    ///< NaN outside the domain
};
QuarterTurnForm rotate_special(CurveKind kind, int n_quarter_turns);

/// The pi/4 special form y = sqrt(2) ln(-W(-e^(sqrt(2) x))) - x
/// (equal to rotate_exp with A = B = 1, phi = pi/4 where both are defined).
double rotated_exp_quarter(double x, Branch branch);

/// One exported sample row for the CLI's CSV output.
struct CurvePoint {
    double u = 0.0;  ///< theta (polar) or x (rotation)
    double v = 0.0;  ///< r or y
    Branch branch = Branch::Principal;
};

/// Sample the polar form on [theta_min, theta_max]; angles where the curve
/// is undefined are skipped.
std::vector<CurvePoint> sample_polar(CurveKind kind, double theta_min,
                                     double theta_max, int steps);

/// Sample a rotated exp/log curve on [x_min, x_max], both branches.
std::vector<CurvePoint> sample_rotation(CurveKind kind, const RotationSpec& spec,
                                        double x_min, double x_max, int steps);

}  // namespace lamw
