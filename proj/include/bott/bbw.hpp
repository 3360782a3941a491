#pragma once

#include "bott/parabolic.hpp"

#include <optional>
#include <vector>

namespace bott {

/// Nonzero BBW output: H^degree(X, E_omega) is the dual of V_{g_weight}.
struct Cohomology {
  int degree = 0;
  Weight g_weight;
  BigInt dim;
};

/// Borel-Weil-Bott. nullopt means all cohomology vanishes.
std::optional<Cohomology> cohomology(const ParabolicSetup& setup, const Weight& omega);

struct DegreeEntry {
  BigInt dim = 0;
  /// G-dominant weights (cohomology is the dual of V_weight) with multiplicities.
  IrrepSum weights;
};

/// One entry per degree 0..dim_x, zeros included.
using CohomologyTable = std::vector<DegreeEntry>;
using ExtTable = CohomologyTable;

CohomologyTable cohomology_graded(const ParabolicSetup& setup, const GradedBundle& bundle);

/// Ext^k(E_a, E_b) = H^k(X, E_a^* (x) E_b), summand by summand.
ExtTable ext_table(const ParabolicSetup& setup, const Weight& a, const Weight& b);

}  // namespace bott
