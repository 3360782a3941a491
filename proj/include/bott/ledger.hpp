#pragma once

#include "bott/character.hpp"
#include "bott/parabolic.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bott::ledger {

// Expression grammar (whitespace insignificant):
//
//   sum      := product ('+' product)*
//   product  := postfix ('*' postfix)*
//   postfix  := primary ('(' int ')')*             twist by O(int)
//   primary  := 'O' | 'E[' ints ']' | 'V[' ints ']'
//             | 'wedge^' int '(' sum ')' | 'sym^' int '(' sum ')'
//             | 'dual(' sum ')' | 'gr(' sum ')' | '(' sum ')'
//
// E[...] is an irreducible homogeneous bundle, V[...] the trivial bundle with
// fibre the G-irreducible of that highest weight.

enum class ExprKind { irr, triv, twist, dual, tensor, oplus, wedge, sym, rep, gr };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Weight weight;             ///< irr, rep
  std::int64_t amount = 0;   ///< twist: t; wedge/sym: k
  std::vector<ExprPtr> args;
};

ExprPtr irr(Weight w);
ExprPtr triv();
ExprPtr rep(Weight w);
ExprPtr twisted(ExprPtr e, std::int64_t t);
ExprPtr dual(ExprPtr e);
ExprPtr tensor(ExprPtr a, ExprPtr b);
ExprPtr oplus(std::vector<ExprPtr> terms);
ExprPtr wedge(int k, ExprPtr e);
ExprPtr sym(int k, ExprPtr e);
ExprPtr gr(ExprPtr e);

/// Throws ParseError(position, expected).
ExprPtr parse_expr(std::string_view text);
/// Canonical text; parse_expr(to_string(e)) reproduces e.
std::string to_string(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

/// Virtual character over the Levi, in the ambient lattice.
Character eval_expr(const ParabolicSetup& setup, const Expr& e);

enum class IdentityKind { iso, exact_seq };

struct Identity {
  std::string name;
  IdentityKind kind = IdentityKind::iso;
  /// iso: lhs and rhs are summed and compared. exact_seq: lhs holds the ordered
  /// terms of 0 -> T_0 -> T_1 -> ... -> 0, rhs is empty.
  std::vector<ExprPtr> lhs;
  std::vector<ExprPtr> rhs;
  std::string note;
};

/// The term strings as stored in ledger files: iso -> [lhs, rhs], exact_seq -> terms.
std::vector<std::string> identity_terms(const Identity& id);
Identity make_identity(std::string name, IdentityKind kind, const std::vector<std::string>& terms,
                       std::string note = {});
/// "A == B" or "0 -> A -> B -> ... -> 0".
Identity parse_identity(std::string name, std::string_view text);

struct CheckResult {
  bool pass = false;
  Character difference;    ///< rhs - lhs, or the alternating sum
  IrrepSum difference_terms;
};

CheckResult check_identity(const ParabolicSetup& setup, const Identity& id);

/// Identities on E6-paper / node 1 (S = E[0,0,0,0,0,1]).
std::vector<Identity> builtin_ledger();

std::string_view kind_name(IdentityKind kind);
IdentityKind kind_from_name(std::string_view name);

}  // namespace bott::ledger
