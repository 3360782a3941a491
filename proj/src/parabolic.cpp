#include "bott/parabolic.hpp"

#include "bott/errors.hpp"

#include <stdexcept>

namespace bott {

ParabolicSetup::ParabolicSetup(RootSystemPtr rs, std::size_t crossed)
    : rs_(std::move(rs)), crossed_(crossed) {
  if (!rs_) throw std::invalid_argument("null root system");
  levi_ = Subsystem::all_but(rs_->rank(), crossed_);
  full_ = Subsystem::full(rs_->rank());
  hyperplane_ = Weight::fundamental(rs_->rank(), crossed_);
  for (const auto& root : rs_->positive_roots()) {
    if (root.coeffs[crossed_] == 0) continue;
    ++dim_x_;
    index_ += root.weight[crossed_];
  }
}

ParabolicSetup make_setup(RootSystemPtr rs, std::size_t crossed) {
  return ParabolicSetup(std::move(rs), crossed);
}

bool is_bundle_weight(const ParabolicSetup& setup, const Weight& omega) {
  return omega.size() == setup.rank() && is_dominant(setup.levi(), omega);
}

void require_bundle_weight(const ParabolicSetup& setup, const Weight& omega) {
  setup.rs().check_rank(omega);
  if (!is_dominant(setup.levi(), omega))
    throw NotDominant(omega.to_string() + " is not dominant for the Levi");
}

BigInt bundle_rank(const ParabolicSetup& setup, const Weight& omega) {
  return weyl_dim(setup.rs(), setup.levi(), omega);
}

std::shared_ptr<const Character> bundle_character(const ParabolicSetup& setup, const Weight& omega) {
  return irrep_character(setup.rs(), setup.levi(), omega);
}

Weight bundle_dual(const ParabolicSetup& setup, const Weight& omega) {
  return dual_dominant(setup.rs(), setup.levi(), omega);
}

Weight twist(const ParabolicSetup& setup, const Weight& omega, std::int64_t t) {
  setup.rs().check_rank(omega);
  Weight out = omega;
  out[setup.crossed()] += t;
  return out;
}

std::int64_t bundle_c1(const ParabolicSetup& setup, const Weight& omega) {
  require_bundle_weight(setup, omega);
  std::int64_t c1 = 0;
  for (const auto& [w, m] : *bundle_character(setup, omega))
    c1 = checked_add(c1, checked_mul(w[setup.crossed()], m));
  return c1;
}

GradedBundle levi_tensor(const ParabolicSetup& setup, const Weight& a, const Weight& b) {
  require_bundle_weight(setup, a);
  require_bundle_weight(setup, b);
  return tensor_decompose(setup.rs(), setup.levi(), a, b);
}

GradedBundle branch(const ParabolicSetup& setup, const Weight& lambda) {
  setup.rs().check_rank(lambda);
  if (!is_dominant(setup.full(), lambda))
    throw NotDominant("branch: " + lambda.to_string() + " is not dominant");
  auto full = irrep_character(setup.rs(), setup.full(), lambda);
  return decompose(setup.rs(), setup.levi(), *full);
}

GradedBundle trivial_bundle_gr(const ParabolicSetup& setup, const Weight& lambda) {
  setup.rs().check_rank(lambda);
  return branch(setup, dual_dominant(setup.rs(), setup.full(), lambda));
}

}  // namespace bott
