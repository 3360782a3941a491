#pragma once

#include "bott/character.hpp"
#include "bott/root_system.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>

namespace bott {

/// G/P for a maximal parabolic P: one crossed node, Levi = all other nodes.
///
/// dim_x = |Phi+| - |Phi+_levi|, and index is the crossed coordinate of the sum
/// of the non-Levi positive roots, so that the canonical bundle is
/// E_{-index * omega_crossed}.
class ParabolicSetup {
 public:
  ParabolicSetup(RootSystemPtr rs, std::size_t crossed);

  const RootSystem& rs() const { return *rs_; }
  const RootSystemPtr& rs_ptr() const { return rs_; }
  std::size_t rank() const { return rs_->rank(); }
  std::size_t crossed() const { return crossed_; }
  const Subsystem& levi() const { return levi_; }
  const Subsystem& full() const { return full_; }
  int dim_x() const { return dim_x_; }
  std::int64_t index() const { return index_; }
  /// omega_crossed, the weight of O(1).
  const Weight& hyperplane() const { return hyperplane_; }

 private:
  RootSystemPtr rs_;
  std::size_t crossed_;
  Subsystem levi_;
  Subsystem full_;
  int dim_x_ = 0;
  std::int64_t index_ = 0;
  Weight hyperplane_;
};

ParabolicSetup make_setup(RootSystemPtr rs, std::size_t crossed);

/// Graded (completely reducible) homogeneous bundle: Levi highest weights with
/// multiplicities, canonically sorted.
using GradedBundle = IrrepSum;

bool is_bundle_weight(const ParabolicSetup& setup, const Weight& omega);
void require_bundle_weight(const ParabolicSetup& setup, const Weight& omega);

/// Rank of E_omega: the Weyl dimension over the Levi.
BigInt bundle_rank(const ParabolicSetup& setup, const Weight& omega);
std::shared_ptr<const Character> bundle_character(const ParabolicSetup& setup, const Weight& omega);

Weight bundle_dual(const ParabolicSetup& setup, const Weight& omega);
Weight twist(const ParabolicSetup& setup, const Weight& omega, std::int64_t t);

/// Degree of det E_omega in units of O(1).
std::int64_t bundle_c1(const ParabolicSetup& setup, const Weight& omega);

/// gr(E_a (x) E_b) by Klimyk's algorithm over the Levi.
GradedBundle levi_tensor(const ParabolicSetup& setup, const Weight& a, const Weight& b);

/// Restriction of the G-irreducible V_lambda to the Levi (contains lambda itself).
GradedBundle branch(const ParabolicSetup& setup, const Weight& lambda);

/// gr(V_lambda (x) O_X) in bundle labels. Since H^0(E_omega) is the dual of
/// V_omega, the trivial bundle with fibre V_lambda is labelled by the branching
/// of the dual representation: this is branch(-w_0 lambda).
GradedBundle trivial_bundle_gr(const ParabolicSetup& setup, const Weight& lambda);

}  // namespace bott
