#pragma once

#include "splinelab/graph.hpp"
#include "splinelab/spline_space.hpp"
#include "splinelab/symfunc.hpp"

namespace splinelab {

enum class FormulaVariant { LabelFree, NaturalLabel, Recursive };

Integer binomial(int n, int k);

Integer formula_D(const SimpleGraph& g, FormulaVariant v = FormulaVariant::LabelFree);
// Recursive is not defined for the characters; LabelFree and NaturalLabel only
SymFunc formula_L1(const SimpleGraph& g, FormulaVariant v = FormulaVariant::LabelFree);
SymFunc formula_R1(const SimpleGraph& g, FormulaVariant v = FormulaVariant::LabelFree);

// traces of the dot action on the degree-d part of L (side Left) or R (side Right)
ClassFunction quotient_character(const SimpleGraph& g, Side side, int d, const OracleOptions& opt = {});
bool triviality_check(const SimpleGraph& g, int k, const OracleOptions& opt = {});

}  // namespace splinelab
