#include "bott/ledger.hpp"

#include "bott/errors.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace bott::ledger {

// ------------------------------------------------------------------ builders

namespace {

ExprPtr node(ExprKind kind, std::vector<ExprPtr> args = {}, std::int64_t amount = 0, Weight w = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = std::move(args);
  e->amount = amount;
  e->weight = std::move(w);
  return e;
}

}  // namespace

ExprPtr irr(Weight w) { return node(ExprKind::irr, {}, 0, std::move(w)); }
ExprPtr triv() { return node(ExprKind::triv); }
ExprPtr rep(Weight w) { return node(ExprKind::rep, {}, 0, std::move(w)); }
ExprPtr twisted(ExprPtr e, std::int64_t t) { return node(ExprKind::twist, {std::move(e)}, t); }
ExprPtr dual(ExprPtr e) { return node(ExprKind::dual, {std::move(e)}); }
ExprPtr tensor(ExprPtr a, ExprPtr b) { return node(ExprKind::tensor, {std::move(a), std::move(b)}); }
ExprPtr oplus(std::vector<ExprPtr> terms) {
  if (terms.empty()) throw std::invalid_argument("oplus needs at least one term");
  return node(ExprKind::oplus, std::move(terms));
}
ExprPtr wedge(int k, ExprPtr e) { return node(ExprKind::wedge, {std::move(e)}, k); }
ExprPtr sym(int k, ExprPtr e) { return node(ExprKind::sym, {std::move(e)}, k); }
ExprPtr gr(ExprPtr e) { return node(ExprKind::gr, {std::move(e)}); }

// ------------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  ExprPtr parse_all() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("end of input or operator");
    return e;
  }

  // Shared with identity parsing.
  ExprPtr parse_sum() {
    std::vector<ExprPtr> terms{parse_product()};
    while (accept('+')) terms.push_back(parse_product());
    return terms.size() == 1 ? terms.front() : oplus(std::move(terms));
  }

  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(std::string expected) const { throw ParseError(pos_, std::move(expected)); }

 private:
  ExprPtr parse_product() {
    ExprPtr e = parse_postfix();
    while (accept('*')) e = tensor(std::move(e), parse_postfix());
    return e;
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '(') break;
      ++pos_;
      auto t = parse_int();
      expect(')');
      e = twisted(std::move(e), t);
    }
    return e;
  }

  ExprPtr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expression");
    if (accept_word("wedge")) return parse_power(ExprKind::wedge);
    if (accept_word("sym")) return parse_power(ExprKind::sym);
    if (accept_word("dual")) return dual(parse_call_arg());
    if (accept_word("gr")) return gr(parse_call_arg());
    if (accept('(')) {
      auto e = parse_sum();
      expect(')');
      return e;
    }
    if (accept('O')) return triv();
    if (accept('E')) return irr(parse_weight());
    if (accept('V')) return rep(parse_weight());
    fail("'O', 'E[', 'V[', 'wedge^', 'sym^', 'dual(', 'gr(' or '('");
  }

  ExprPtr parse_power(ExprKind kind) {
    expect('^');
    auto k = parse_int();
    if (k < 0) fail("non-negative power");
    auto arg = parse_call_arg();
    return kind == ExprKind::wedge ? wedge(static_cast<int>(k), arg) : sym(static_cast<int>(k), arg);
  }

  ExprPtr parse_call_arg() {
    expect('(');
    auto e = parse_sum();
    expect(')');
    return e;
  }

  Weight parse_weight() {
    expect('[');
    std::vector<Weight::value_type> coords{parse_int()};
    while (accept(',')) coords.push_back(parse_int());
    expect(']');
    return Weight(std::span<const Weight::value_type>(coords));
  }

  std::int64_t parse_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer of reasonable size");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_atomic(const Expr& e) {
  switch (e.kind) {
    case ExprKind::tensor:
    case ExprKind::oplus: return false;
    default: return true;
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::triv: return "O";
    case ExprKind::irr: return "E" + e.weight.to_string();
    case ExprKind::rep: return "V" + e.weight.to_string();
    case ExprKind::twist: {
      const Expr& a = *e.args[0];
      std::string inner = is_atomic(a) ? to_string(a) : "(" + to_string(a) + ")";
      return inner + "(" + std::to_string(e.amount) + ")";
    }
    case ExprKind::dual: return "dual(" + to_string(*e.args[0]) + ")";
    case ExprKind::gr: return "gr(" + to_string(*e.args[0]) + ")";
    case ExprKind::wedge: return "wedge^" + std::to_string(e.amount) + "(" + to_string(*e.args[0]) + ")";
    case ExprKind::sym: return "sym^" + std::to_string(e.amount) + "(" + to_string(*e.args[0]) + ")";
    case ExprKind::tensor: {
      const Expr& a = *e.args[0];
      const Expr& b = *e.args[1];
      std::string left = a.kind == ExprKind::oplus ? "(" + to_string(a) + ")" : to_string(a);
      std::string right = is_atomic(b) ? to_string(b) : "(" + to_string(b) + ")";
      return left + " * " + right;
    }
    case ExprKind::oplus: {
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " + ";
        const Expr& t = *e.args[i];
        out += t.kind == ExprKind::oplus ? "(" + to_string(t) + ")" : to_string(t);
      }
      return out;
    }
  }
  throw std::logic_error("unknown expression kind");
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.amount != b.amount || !(a.weight == b.weight) ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

// --------------------------------------------------------------- evaluation

Character eval_expr(const ParabolicSetup& setup, const Expr& e) {
  const auto& rs = setup.rs();
  switch (e.kind) {
    case ExprKind::triv: return Character::trivial(rs.rank());
    case ExprKind::irr:
      require_bundle_weight(setup, e.weight);
      return *bundle_character(setup, e.weight);
    case ExprKind::rep:
      return compose(rs, setup.levi(), trivial_bundle_gr(setup, e.weight));
    case ExprKind::twist:
      return eval_expr(setup, *e.args[0]).shifted(e.amount * setup.hyperplane());
    case ExprKind::dual: return eval_expr(setup, *e.args[0]).negated();
    case ExprKind::gr: return eval_expr(setup, *e.args[0]);
    case ExprKind::tensor: return eval_expr(setup, *e.args[0]) * eval_expr(setup, *e.args[1]);
    case ExprKind::oplus: {
      Character acc(rs.rank());
      for (const auto& t : e.args) acc += eval_expr(setup, *t);
      return acc;
    }
    case ExprKind::wedge:
      return power_op(eval_expr(setup, *e.args[0]), static_cast<int>(e.amount), PowerKind::wedge);
    case ExprKind::sym:
      return power_op(eval_expr(setup, *e.args[0]), static_cast<int>(e.amount), PowerKind::sym);
  }
  throw std::logic_error("unknown expression kind");
}

// --------------------------------------------------------------- identities

std::string_view kind_name(IdentityKind kind) {
  return kind == IdentityKind::iso ? "Iso" : "ExactSeq";
}

IdentityKind kind_from_name(std::string_view name) {
  if (name == "Iso") return IdentityKind::iso;
  if (name == "ExactSeq") return IdentityKind::exact_seq;
  throw std::invalid_argument("identity kind must be 'Iso' or 'ExactSeq', got '" + std::string(name) + "'");
}

std::vector<std::string> identity_terms(const Identity& id) {
  auto join = [](const std::vector<ExprPtr>& xs) {
    if (xs.size() == 1) return to_string(*xs.front());
    return to_string(*oplus(xs));
  };
  if (id.kind == IdentityKind::iso) return {join(id.lhs), join(id.rhs)};
  std::vector<std::string> out;
  for (const auto& t : id.lhs) out.push_back(to_string(*t));
  return out;
}

Identity make_identity(std::string name, IdentityKind kind, const std::vector<std::string>& terms,
                       std::string note) {
  Identity id;
  id.name = std::move(name);
  id.kind = kind;
  id.note = std::move(note);
  if (kind == IdentityKind::iso) {
    if (terms.size() != 2)
      throw std::invalid_argument("Iso identity '" + id.name + "' needs exactly two terms");
    id.lhs.push_back(parse_expr(terms[0]));
    id.rhs.push_back(parse_expr(terms[1]));
  } else {
    if (terms.size() < 2)
      throw std::invalid_argument("ExactSeq identity '" + id.name + "' needs at least two terms");
    for (const auto& t : terms) id.lhs.push_back(parse_expr(t));
  }
  return id;
}

Identity parse_identity(std::string name, std::string_view text) {
  Parser p(text);
  Identity id;
  id.name = std::move(name);
  p.skip_ws();
  // Exact sequence: 0 -> A -> ... -> 0
  if (p.accept('0')) {
    id.kind = IdentityKind::exact_seq;
    for (;;) {
      if (!p.accept_word("->")) p.fail("'->'");
      p.skip_ws();
      if (p.accept('0')) break;
      id.lhs.push_back(p.parse_sum());
    }
    if (id.lhs.empty()) p.fail("at least one term");
  } else {
    id.kind = IdentityKind::iso;
    id.lhs.push_back(p.parse_sum());
    if (!p.accept_word("==")) p.fail("'=='");
    id.rhs.push_back(p.parse_sum());
  }
  p.skip_ws();
  if (p.pos() != text.size()) p.fail("end of input");
  return id;
}

CheckResult check_identity(const ParabolicSetup& setup, const Identity& id) {
  CheckResult out;
  out.difference = Character(setup.rank());
  if (id.kind == IdentityKind::iso) {
    for (const auto& e : id.lhs) out.difference -= eval_expr(setup, *e);
    for (const auto& e : id.rhs) out.difference += eval_expr(setup, *e);
  } else {
    for (std::size_t i = 0; i < id.lhs.size(); ++i) {
      if (i % 2 == 0)
        out.difference += eval_expr(setup, *id.lhs[i]);
      else
        out.difference -= eval_expr(setup, *id.lhs[i]);
    }
  }
  out.pass = out.difference.empty();
  if (!out.pass) out.difference_terms = decompose_virtual(setup.rs(), setup.levi(), out.difference);
  return out;
}

std::vector<Identity> builtin_ledger() {
  // Shorthand used in the notes: S = E[0,0,0,0,0,1], S* = dual(S), T = E[0,0,0,1,0,0],
  // Omega = E[-2,1,0,0,0,0], S_2 = E[0,0,0,0,0,2], S_3 = E[0,0,0,0,0,3].
  const std::string S = "E[0,0,0,0,0,1]";
  const std::string Sd = "dual(" + S + ")";
  const std::string S2d = "dual(E[0,0,0,0,0,2])";
  const std::string S3d = "dual(E[0,0,0,0,0,3])";
  const std::string T = "E[0,0,0,1,0,0]";
  const std::string Om = "E[-2,1,0,0,0,0]";
  using K = IdentityKind;

  std::vector<Identity> out;
  auto add = [&](std::string name, K kind, std::vector<std::string> terms, std::string note) {
    out.push_back(make_identity(std::move(name), kind, terms, std::move(note)));
  };

  add("L1", K::iso, {"wedge^2(" + S + ")", "E[0,0,0,0,1,0]"}, "E_w5 = wedge^2 S");
  add("L2", K::iso, {"wedge^3(" + S + ")", "E[0,0,1,0,0,0]"}, "E_w3 = wedge^3 S");
  add("L3", K::iso, {"wedge^4(" + S + ")", "E[0,1,0,1,0,0]"}, "wedge^4 S = E_{w2+w4}");
  add("L4", K::iso, {"dual(" + T + ")(2)", "E[0,1,0,0,0,0]"},
      "T_X = E_w4 and Omega_X(2) = E_w2 are dual up to twist");
  add("L5a", K::iso, {"wedge^2(" + T + ")", "E[0,0,1,0,0,0]"}, "wedge^2 T_X = E_w3");
  add("L5b", K::iso, {"wedge^2(" + Om + ")(3)", "E[0,0,1,0,0,0]"}, "Omega^2_X(3) = E_w3");
  add("L5c", K::iso, {"wedge^3(" + S + ")", "wedge^2(" + Om + ")(3)"},
      "wedge^3 S = Omega^2_X(3), twist normalisation");
  add("L6a", K::iso, {"wedge^3(" + T + ")", "E[0,1,0,0,1,0]"}, "wedge^3 T_X = E_{w2+w5}");
  add("L6b", K::iso, {"wedge^3(" + Om + ")(4)", "E[0,0,0,1,1,0]"}, "Omega^3_X(4) = E_{w4+w5}");
  add("L7a", K::exact_seq, {Sd + "(-1) + " + Om, "V[0,0,0,0,0,1] * O(-1)", "O"},
      "cotangent complex with its middle cohomology Omega_X inserted");
  add("L7b", K::exact_seq, {"O", "V[1,0,0,0,0,0] * O(1)", Sd + "(2) + " + T},
      "tangent complex with its middle cohomology T_X inserted");
  add("L8", K::iso,
      {"V[0,0,0,1,0,0] * O", T + " + " + Om + " + wedge^2(" + S + ")(-1) + O"},
      "gr(V_w4 x O) = T_X + Omega_X + wedge^2 S(-1) + O");
  add("L9", K::exact_seq,
      {S2d, "V[0,0,0,0,0,1] * " + Sd, "(V[1,0,0,0,0,0] + V[0,0,0,0,1,0]) * O",
       "(V[0,0,0,0,0,1] + V[0,1,0,0,0,0]) * O(1)", "V[1,0,0,0,0,0] * " + Sd + "(2)", S2d + "(3)"},
      "six-term sequence for S_2^*");
  add("L10", K::iso, {"sym^2(" + Sd + ")", S2d + " + O(-1)"}, "S^2 S^* = S_2^* + O(-1)");
  add("L11", K::iso, {"sym^3(" + S + ")", "E[0,0,0,0,0,3] + " + S + "(1)"},
      "S^3 S = S_3 + S(1), with S_3 = E_{3 w6}");
  add("L12", K::iso,
      {"wedge^2(" + Sd + ") * " + Sd + " + " + S3d, S2d + " * " + Sd + " + wedge^3(" + Sd + ")"},
      "wedge^2 S^* x S^* + S_3^* = S_2^* x S^* + wedge^3 S^*");
  add("L13", K::iso,
      {"gr(E[0,1,0,0,0,0] * " + T + ")", "E[0,1,0,1,0,0] + wedge^2(" + S + ")(1) + O(2)"},
      "gr(E_w2 x E_w4) = E_{w2+w4} + wedge^2 S(1) + O(2)");
  add("L14", K::iso,
      {"gr(" + T + " * E[0,0,0,0,1,0](-1))", "E[0,0,0,1,1,0](-1) + E[0,1,0,0,0,1](-1) + " + T},
      "gr(E_w4 x E_w5(-1)) = E_{w4+w5}(-1) + E_{w2+w6}(-1) + E_w4");
  add("L15", K::iso,
      {"gr(E[0,1,0,0,0,0] * " + S + "(-1))", "E[0,1,0,0,0,1](-1) + " + T},
      "gr(E_w2 x E_w6(-1)) = E_{w2+w6}(-1) + E_w4");
  add("L16", K::iso, {Sd + " * " + Sd, S2d + " + wedge^2(" + Sd + ") + O(-1)"},
      "S^* x S^* = S_2^* + wedge^2 S^* + O(-1)");
  add("L17", K::exact_seq, {Sd, "V[0,0,0,0,0,1] * O", Om + "(1) + O(1)"},
      "0 -> S^* -> V_w6 x O -> Q -> 0 with gr Q = Omega_X(1) + O(1)");
  add("D1", K::iso, {Sd, S + "(-1)"}, "S^* = S(-1)");
  add("D2", K::iso, {S2d, "E[0,0,0,0,0,2](-2)"}, "S_2^* = S_2(-2)");
  add("D3", K::iso, {S3d, "E[0,0,0,0,0,3](-3)"}, "S_3^* = S_3(-3)");
  // gr K from 0 -> V_w1/O(-1) -> K -> wedge^2 Q -> 0: the sub has gr T(-1) + S,
  // the quotient gr Omega^2(2) + Omega(2).
  add("K1", K::iso,
      {S + " + " + T + "(-1) + wedge^2(" + Om + ")(2) + " + Om + "(2)",
       "dual(" + S + " + " + T + "(-1) + wedge^2(" + Om + ")(2) + " + Om + "(2))(1)"},
      "gr K = S + T(-1) + Omega^2(2) + Omega(2) is self-dual up to O(1)");
  return out;
}

}  // namespace bott::ledger
