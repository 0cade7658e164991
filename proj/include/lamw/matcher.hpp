#pragma once

#include <string>
#include <vector>

#include "lamw/catalog.hpp"
#include "lamw/expr.hpp"

namespace lamw {

/// Outcome of structural unification against the family templates.
struct MatchResult {
    FamilyId family{};
    ParamSet params;
    std::vector<std::string> normalization_trace;
};

/// Families in matching priority order: declaration order with composite
/// forms ahead of their degenerate specializations (BERNOULLI_GEN before P4).
const std::vector<FamilyId>& match_priority_order();

/// Match a parsed expression against the catalog templates (first match in
/// priority order wins). Throws NoMatchError listing nearest misses.
MatchResult match_family(const Expr& e);

/// Rebuild the family's defining expression from params (normalized); used
/// to verify matches structurally.
Expr render_family(FamilyId family, const ParamSet& params);

/// parse + match + invert.
struct SolveResult {
    MatchResult match;
    SolutionSet solutions;
};
SolveResult solve_text(const std::string& text, double y);

}  // namespace lamw
