#pragma once

#include "bott/root_system.hpp"
#include "bott/weight.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bott {

using BigInt = boost::multiprecision::cpp_int;
using Mult = std::int64_t;

/// Overflow-checked multiplicity arithmetic (throws Overflow).
Mult checked_add(Mult a, Mult b);
Mult checked_mul(Mult a, Mult b);

/// Maximum support size of any character (default 10^6 weights).
std::size_t support_guardrail();
void set_support_guardrail(std::size_t limit);

/// Finitely supported map weight -> multiplicity. Zero entries are never stored;
/// negative multiplicities are allowed (virtual characters).
class Character {
 public:
  using map_type = std::unordered_map<Weight, Mult, WeightHash>;
  using const_iterator = map_type::const_iterator;

  explicit Character(std::size_t rank = 0) : rank_(rank) {}

  static Character trivial(std::size_t rank) { return single(Weight::zero(rank)); }
  static Character single(const Weight& w, Mult m = 1);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Mult operator[](const Weight& w) const;
  void add(const Weight& w, Mult m);
  void reserve(std::size_t n) { terms_.reserve(n); }

  /// Sum of all multiplicities (the dimension for a genuine character).
  Mult total() const;
  /// True if every multiplicity is positive.
  bool is_genuine() const;

  /// Canonical order: lexicographic ascending in the weight.
  std::vector<std::pair<Weight, Mult>> sorted() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(Mult k);

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Mult k, Character a) { return a *= k; }
  /// Convolution product (tensor product of representations).
  friend Character operator*(const Character& a, const Character& b);

  friend bool operator==(const Character& a, const Character& b);

  /// Weights shifted by `shift` (tensor with a one-dimensional character).
  Character shifted(const Weight& shift) const;
  /// Weights negated (dual representation).
  Character negated() const;

 private:
  std::size_t rank_;
  map_type terms_;
};

enum class CharOp { add, sub, mul, scale };
Character char_arith(const Character& a, const Character& b, CharOp op, Mult k = 1);

enum class PowerKind { wedge, sym, adams };
/// psi^k: every weight scaled by k.
Character adams(const Character& c, int k);
/// Exterior / symmetric powers via the Newton recursions over Adams operations.
Character power_op(const Character& c, int k, PowerKind kind);

/// Weyl dimension formula over the positive roots of `sub`. Throws NotDominant.
BigInt weyl_dim(const RootSystem& rs, const Subsystem& sub, const Weight& lambda);

/// Character of the `sub`-irreducible with highest weight lambda (Freudenthal).
/// Results are memoised process-wide unless the cache is disabled.
std::shared_ptr<const Character> irrep_character(const RootSystem& rs, const Subsystem& sub,
                                                 const Weight& lambda);

/// Freudenthal multiplicities on the dominant weights only (no orbit expansion).
std::vector<std::pair<Weight, Mult>> dominant_multiplicities(const RootSystem& rs,
                                                             const Subsystem& sub,
                                                             const Weight& lambda);

void set_character_cache_enabled(bool enabled);
bool character_cache_enabled();
void clear_character_cache();
std::size_t character_cache_size();

struct IrrepTerm {
  Weight highest;
  Mult mult = 0;
  friend bool operator==(const IrrepTerm&, const IrrepTerm&) = default;
};

/// Highest weights with multiplicities, sorted by descending height, then
/// descending lexicographic order.
using IrrepSum = std::vector<IrrepTerm>;

void sort_irrep_sum(const RootSystem& rs, const Subsystem& sub, IrrepSum& terms);

/// Strips maximal-height weights. Throws NotDecomposable on a negative
/// multiplicity or a non-dominant maximal weight.
IrrepSum decompose(const RootSystem& rs, const Subsystem& sub, Character c);
/// Same, allowing negative multiplicities (virtual characters).
IrrepSum decompose_virtual(const RootSystem& rs, const Subsystem& sub, Character c);

/// Sum of mult * irrep_character over the terms.
Character compose(const RootSystem& rs, const Subsystem& sub, const IrrepSum& terms);

/// Klimyk: decomposition of V(a) (x) V(b) over `sub`, iterating over the weights of
/// the smaller factor.
IrrepSum tensor_decompose(const RootSystem& rs, const Subsystem& sub, const Weight& a,
                          const Weight& b);

}  // namespace bott
