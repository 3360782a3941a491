#include "bott/bbw.hpp"

#include "bott/errors.hpp"

#include <map>

namespace bott {

std::optional<Cohomology> cohomology(const ParabolicSetup& setup, const Weight& omega) {
  require_bundle_weight(setup, omega);
  auto r = dotted_to_dominant(setup.rs(), setup.full(), omega);
  if (!r) return std::nullopt;
  Cohomology out;
  out.degree = r->length;
  out.dim = weyl_dim(setup.rs(), setup.full(), r->weight);
  out.g_weight = std::move(r->weight);
  return out;
}

CohomologyTable cohomology_graded(const ParabolicSetup& setup, const GradedBundle& bundle) {
  CohomologyTable table(static_cast<std::size_t>(setup.dim_x()) + 1);
  std::vector<std::map<Weight, Mult>> weights(table.size());
  for (const auto& term : bundle) {
    auto h = cohomology(setup, term.highest);
    if (!h) continue;
    auto& entry = table.at(static_cast<std::size_t>(h->degree));
    entry.dim += h->dim * term.mult;
    auto& slot = weights[h->degree][h->g_weight];
    slot = checked_add(slot, term.mult);
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (auto& [w, m] : weights[k]) table[k].weights.push_back({w, m});
    sort_irrep_sum(setup.rs(), setup.full(), table[k].weights);
  }
  return table;
}

ExtTable ext_table(const ParabolicSetup& setup, const Weight& a, const Weight& b) {
  return cohomology_graded(setup, levi_tensor(setup, bundle_dual(setup, a), b));
}

}  // namespace bott
