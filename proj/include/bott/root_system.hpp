#pragma once

#include "bott/weight.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bott {

/// Cartan matrix with the convention a(i, j) = <alpha_j, alpha_i^vee>, so the
/// fundamental-basis coordinates of alpha_j are column j.
///
/// The constructor checks the combinatorial invariants (diagonal 2, off-diagonal
/// <= 0, symmetric zero pattern). Finite type is checked by build_root_system.
class CartanMatrix {
 public:
  CartanMatrix(std::size_t rank, std::vector<int> entries);
  CartanMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  const std::vector<int>& entries() const { return entries_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t rank_;
  std::vector<int> entries_;
};

/// A set of simple-root indices (0-based) generating a sub-root-system of the
/// ambient lattice.
class Subsystem {
 public:
  Subsystem() = default;
  Subsystem(std::size_t ambient_rank, std::vector<std::size_t> nodes);

  static Subsystem full(std::size_t rank);
  /// Every node except `crossed`: the Levi of a maximal parabolic.
  static Subsystem all_but(std::size_t rank, std::size_t crossed);

  bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
  const std::vector<std::size_t>& nodes() const { return nodes_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t ambient_rank() const { return ambient_rank_; }

  friend bool operator==(const Subsystem& a, const Subsystem& b) {
    return a.mask_ == b.mask_ && a.ambient_rank_ == b.ambient_rank_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::uint64_t mask_ = 0;
  std::vector<std::size_t> nodes_;
};

struct PositiveRoot {
  Weight weight;                       ///< fundamental-basis coordinates
  std::vector<int> coeffs;             ///< coefficients on simple roots
  std::vector<std::int64_t> coroot;    ///< coefficients of alpha^vee on simple coroots
  int height = 0;
  std::uint64_t support = 0;           ///< bitmask of nodes with nonzero coefficient
};

class RootSystem {
 public:
  /// Enumerates the positive roots by closure under simple reflections.
  /// Throws NotFiniteType if the symmetrized matrix is not positive definite or
  /// the closure grows beyond `root_bound`.
  explicit RootSystem(CartanMatrix cartan, std::size_t root_bound = 20000);

  std::size_t rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  const Weight& simple_root(std::size_t j) const { return simple_roots_[j]; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  const Weight& rho() const { return rho_; }

  /// Positive integer d_i with d_i a(i,j) symmetric; (alpha_i, alpha_i) = 2 d_i.
  std::int64_t symmetrizer(std::size_t i) const { return symmetrizer_[i]; }

  /// Indices into positive_roots() of the roots spanned by `sub`.
  std::vector<std::size_t> positive_roots_of(const Subsystem& sub) const;

  /// <lambda, alpha^vee>
  std::int64_t pairing(const Weight& lambda, const PositiveRoot& root) const;

  /// (lambda, alpha) in the invariant form normalised by the symmetrizer.
  std::int64_t form_with_root(const Weight& lambda, const std::vector<int>& root_coeffs) const;

  /// (beta, beta) for beta given by simple-root coefficients.
  std::int64_t root_norm(const std::vector<std::int64_t>& coeffs) const;

  /// Integer linear functional h with h(alpha_j) = scale > 0 for every j in sub:
  /// the sum of sub-root coordinates of the projection of lambda, scaled by the
  /// common denominator of the inverse Cartan matrix of `sub`.
  const std::vector<std::int64_t>& height_functional(const Subsystem& sub) const;
  std::int64_t height(const Subsystem& sub, const Weight& lambda) const;

  /// Stable textual identity of the Cartan matrix (used as a cache key).
  const std::string& fingerprint() const { return fingerprint_; }

  void check_rank(const Weight& w) const;

 private:
  CartanMatrix cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> positive_roots_;
  Weight rho_;
  std::string fingerprint_;

  mutable std::mutex height_mutex_;
  mutable std::map<std::uint64_t, std::vector<std::int64_t>> height_cache_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(CartanMatrix cartan, std::size_t root_bound = 20000);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i   (i is 0-based)
Weight reflect(const RootSystem& rs, std::size_t i, Weight lambda);

bool is_dominant(const Subsystem& sub, const Weight& lambda);

struct DominantResult {
  int count = 0;
  Weight weight;
};

/// Reflects at the lowest-index negative coordinate inside `sub` until none is left.
DominantResult make_dominant(const RootSystem& rs, const Subsystem& sub, Weight lambda);

struct DottedResult {
  int length = 0;
  Weight weight;
};

/// w . lambda = w(lambda + rho) - rho, with rho the ambient rho. Returns nullopt
/// when lambda + rho is singular for `sub`.
std::optional<DottedResult> dotted_to_dominant(const RootSystem& rs, const Subsystem& sub,
                                               const Weight& lambda);

/// -w_0^{sub}(lambda): highest weight of the dual of the sub-irreducible of
/// highest weight lambda. Throws NotDominant.
Weight dual_dominant(const RootSystem& rs, const Subsystem& sub, const Weight& lambda);

}  // namespace bott
