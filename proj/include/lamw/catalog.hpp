#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamw/errors.hpp"
#include "lamw/lambert.hpp"

namespace lamw {

/// Canonical equation-family identifiers. Duplicate catalog labels collapse
/// onto these (C1=P1, C2=P3, C4=P2, C7=C3, C8=S4, C9=S5).
enum class FamilyId {
    P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11,
    S1, S2, S3, S4, S5, S6, S7, S8, S9,
    C3, C5, C6, C10,
    BernoulliGen,
};

/// Real constants of a family. Only the fields a given family names are
/// read; `coeffs` is the (a_k, b_k) list of S9.
struct ParamSet {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, f = 0.0, g = 0.0;
    std::vector<std::pair<double, double>> coeffs;
};

enum class CaseTag { Case1, Case2 };

struct Solution {
    double x = 0.0;
    std::vector<Branch> branches;        ///< W branches used by the formula
    std::optional<CaseTag> case_tag;
    double residual = 0.0;               ///< |forward(x) - y|
    std::optional<double> intermediate;  ///< e.g. the W(x) value S2 solves for
};

/// Real solutions, sorted ascending by x.
struct SolutionSet {
    std::vector<Solution> solutions;

    bool empty() const { return solutions.empty(); }
    std::size_t size() const { return solutions.size(); }
    /// true if some solution equals x to the given relative tolerance
    bool contains(double x, double rel_tol = 1e-8) const;
};

struct BranchArgReport {
    std::string label;
    double value = 0.0;
    std::string required_interval;
    bool ok = true;
};

/// Validity report for an inversion request (never throws).
struct DomainReport {
    bool valid = true;
    std::vector<BranchArgReport> branch_args;
    std::vector<std::string> violated;
};

/// Raised when a family's catalog closed form failed gate validation; the
/// independent numeric solution is attached so callers still get an answer.
class ErratumError : public Error {
public:
    ErratumError(const std::string& msg, std::string family, SolutionSet fallback)
        : Error(msg), family_(std::move(family)), fallback_(std::move(fallback)) {}

    const std::string& family() const { return family_; }
    const SolutionSet& fallback() const { return fallback_; }

private:
    std::string family_;
    SolutionSet fallback_;
};

const char* family_name(FamilyId id);
int family_equation_number(FamilyId id);
std::vector<FamilyId> all_families();

/// Parse "P1", "S7", "BERNOULLI_GEN", ...; duplicate labels (C1, C2, C4, C7,
/// C8, C9) canonicalize. Throws InvalidParamError on unknown names.
FamilyId family_from_string(const std::string& name);

/// Throws InvalidParamError when a constant the family divides by is zero,
/// a sign constraint is broken, or the S9 coefficient list is degenerate.
void validate_params(FamilyId family, const ParamSet& p);

/// Evaluate the family's defining expression at x (W terms on the principal
/// branch). Throws DomainError naming the violated sub-expression.
double forward(FamilyId family, const ParamSet& p, double x);

/// Check every W argument (and auxiliary constraint) of the family's
/// inverse formula at y. Reports, never throws.
DomainReport domain_check(FamilyId family, const ParamSet& p, double y);

/// Invert y through the family's catalog closed form, enumerating admissible
/// W branches / cases; solutions are residual-checked, deduplicated and
/// sorted. Families flagged by the validation gate raise ErratumError with
/// the numeric fallback attached. DomainError when domain_check fails.
SolutionSet invert(FamilyId family, const ParamSet& p, double y);

/// The branch-difference inverses (W0 minus W-1 at y-dependent arguments)
/// of P4, P5, P11 and the generalized Bernoulli form. InvalidParamError for
/// other families.
SolutionSet invert_branch_difference(FamilyId family, const ParamSet& p, double y);

/// The raw closed form (no gate consultation): what the gate itself tests.
SolutionSet invert_closed_raw(FamilyId family, const ParamSet& p, double y);

/// Independent bracketing-oracle inversion over the family's documented
/// x-window (the ErratumError fallback path).
SolutionSet invert_numeric(FamilyId family, const ParamSet& p, double y);

/// Documented x-interval used for gate grids, numeric fallback and
/// round-trip sampling (may depend on params, e.g. pole positions).
std::pair<double, double> sample_window(FamilyId family, const ParamSet& p);

/// Canonical gate parameters for a family (S9 gets a coefficient list).
ParamSet canonical_params(FamilyId family);

}  // namespace lamw
