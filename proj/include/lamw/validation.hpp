#pragma once

#include <string>
#include <vector>

#include "lamw/catalog.hpp"

namespace lamw {

/// Outcome of checking a closed form against the bracketing oracle.
enum class GateStatus {
    Pass,           ///< stated closed form validates as printed
    PassCorrected,  ///< shipped form validates; differs from the stated text
    Erratum,        ///< no validated closed form; numeric fallback in use
};

const char* gate_status_name(GateStatus s);

/// Per-grid-point comparison of invert_closed_raw against find_roots.
struct FamilyValidation {
    FamilyId family{};
    int grid_points = 0;   ///< y values actually compared
    int mismatches = 0;    ///< points with differing root counts or deviation
    double max_rel_dev = 0.0;
    bool pass = false;     ///< all points matched within 1e-7 relative
};

/// Compare the closed form's solution set against the oracle's bracketed
/// roots for each y in y_grid, on the family's documented x-window.
FamilyValidation validate_family(FamilyId family, const ParamSet& p,
                                 const std::vector<double>& y_grid);

/// Gate verdict for a family (computed once per process on the canonical
/// grid; PassCorrected comes from the shipped-correction annotations).
GateStatus gate_status(FamilyId family);

/// One machine-readable provenance record per catalog family plus the
/// film-inverse and rotation entries.
struct ProvenanceRecord {
    std::string id;           ///< "P1" ... "BERNOULLI_GEN", "Exa2", "CTP1"
    std::string kind;         ///< "family" | "application" | "rotation"
    int eq = 0;               ///< catalog equation number (0 if n/a)
    std::string forward_formula;
    std::string inverse_formula;
    GateStatus status = GateStatus::Pass;
    std::string notes;        ///< erratum / correction details
    FamilyValidation validation;  ///< zeroed for non-family records
};

/// The full table; family verdicts are the live gate results.
const std::vector<ProvenanceRecord>& provenance_table();

/// True when no record is erratum-unresolved.
bool gate_all_resolved();

}  // namespace lamw
