#include "bott/errors.hpp"
#include "bott/json_io.hpp"
#include "bott/ledger.hpp"
#include "bott/presets.hpp"
#include "support.hpp"

#include <doctest.h>

#include <fstream>

using namespace bott;
using namespace bott::ledger;
using namespace bott::testing;

namespace {

ParabolicSetup cayley() { return make_setup(preset("E6-paper"), 0); }

Character eval(const ParabolicSetup& x, std::string_view text) { return eval_expr(x, *parse_expr(text)); }

ExprPtr random_leaf() {
  static const std::vector<Weight> bundles = {Weight{0, 0, 0, 0, 0, 1}, Weight{-1, 0, 0, 0, 0, 1},
                                              Weight{0, 0, 0, 1, 0, 0}, Weight{2, 0, 0, 0, 0, 0},
                                              Weight{-2, 1, 0, 0, 0, 0}};
  switch (uniform(0, 3)) {
    case 0: return triv();
    case 1: return rep(uniform(0, 1) ? Weight{1, 0, 0, 0, 0, 0} : Weight{0, 0, 0, 0, 0, 1});
    default: return irr(bundles[static_cast<std::size_t>(uniform(0, 4))]);
  }
}

ExprPtr random_expr(int depth) {
  if (depth == 0) return random_leaf();
  switch (uniform(0, 6)) {
    case 0: return twisted(random_expr(depth - 1), uniform(-3, 3));
    case 1: return dual(random_expr(depth - 1));
    case 2: return tensor(random_expr(depth - 1), random_leaf());
    case 3: return oplus({random_expr(depth - 1), random_expr(depth - 1)});
    case 4: return wedge(static_cast<int>(uniform(0, 2)), random_leaf());
    case 5: return sym(static_cast<int>(uniform(0, 2)), random_leaf());
    default: return gr(random_expr(depth - 1));
  }
}

}  // namespace

TEST_CASE("parser") {
  auto o = parse_expr("O");
  CHECK(o->kind == ExprKind::triv);

  auto e = parse_expr("V[0,0,0,1,0,0] * O");
  REQUIRE(e->kind == ExprKind::tensor);
  REQUIRE(e->args.size() == 2);
  CHECK(e->args[0]->kind == ExprKind::rep);
  CHECK(e->args[0]->weight == Weight{0, 0, 0, 1, 0, 0});
  CHECK(e->args[1]->kind == ExprKind::triv);

  auto t = parse_expr("wedge^2(E[0,0,0,0,0,1])(-3)");
  REQUIRE(t->kind == ExprKind::twist);
  CHECK(t->amount == -3);
  CHECK(t->args[0]->kind == ExprKind::wedge);
  CHECK(t->args[0]->amount == 2);
}

TEST_CASE("parse errors report the position") {
  try {
    parse_expr("wedge^2(");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 8);
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("E[0,0"), ParseError);
  CHECK_THROWS_AS(parse_expr("O - O"), ParseError);
  CHECK_THROWS_AS(parse_expr("sym^x(O)"), ParseError);
  CHECK_THROWS_AS(parse_expr("O O"), ParseError);
  CHECK_THROWS_AS(parse_identity("bad", "O =="), ParseError);
}

TEST_CASE("evaluation") {
  auto x = cayley();
  for (int t = -4; t <= 4; ++t)
    CHECK(eval(x, "O(" + std::to_string(t) + ")") == Character::single(Weight{t, 0, 0, 0, 0, 0}));
  CHECK(eval(x, "dual(E[0,0,0,0,0,1])") == eval(x, "E[0,0,0,0,0,1](-1)"));
  CHECK(eval(x, "sym^2(dual(E[0,0,0,0,0,1]))") ==
        *irrep_character(x.rs(), x.levi(), Weight{-2, 0, 0, 0, 0, 2}) +
            *irrep_character(x.rs(), x.levi(), Weight{-1, 0, 0, 0, 0, 0}));
  CHECK(eval(x, "V[0,0,0,0,0,1] * O").total() == 27);
  CHECK(eval(x, "gr(E[0,0,0,1,0,0])") == eval(x, "E[0,0,0,1,0,0]"));
  CHECK_THROWS(eval(x, "E[0,-1,0,0,0,0]"));
  CHECK_THROWS(eval(x, "E[0,1]"));
}

TEST_CASE("identity checks") {
  auto x = cayley();
  CHECK(check_identity(x, parse_identity("w2", "wedge^2(E[0,0,0,0,0,1]) == E[0,0,0,0,1,0]")).pass);

  auto bad = check_identity(x, parse_identity("bad", "O == O(1)"));
  CHECK_FALSE(bad.pass);
  Character expected(6);
  expected.add(Weight{1, 0, 0, 0, 0, 0}, 1);
  expected.add(Weight::zero(6), -1);
  CHECK(bad.difference == expected);
  CHECK(mult_of(bad.difference_terms, Weight{1, 0, 0, 0, 0, 0}) == 1);
  CHECK(mult_of(bad.difference_terms, Weight::zero(6)) == -1);

  auto seq = parse_identity("euler", "0 -> O -> V[1,0,0,0,0,0] * O(1) -> dual(E[0,0,0,0,0,1])(2) + E[0,0,0,1,0,0] -> 0");
  CHECK(seq.kind == IdentityKind::exact_seq);
  CHECK(check_identity(x, seq).pass);
}

TEST_CASE("built-in ledger") {
  auto x = cayley();
  auto ids = builtin_ledger();
  CHECK(ids.size() >= 17);
  for (const auto& id : ids) {
    auto r = check_identity(x, id);
    CHECK_MESSAGE(r.pass, id.name);
    if (id.kind == IdentityKind::iso) {
      auto swapped = id;
      std::swap(swapped.lhs, swapped.rhs);
      CHECK(check_identity(x, swapped).pass == r.pass);
    } else {
      for (const auto& term : id.lhs) CHECK(eval_expr(x, *term).is_genuine());
    }
  }
}

TEST_CASE("the six-term sequence is in the built-in ledger") {
  bool found = false;
  for (const auto& id : builtin_ledger()) {
    if (id.name != "L9") continue;
    found = true;
    CHECK(id.kind == IdentityKind::exact_seq);
    CHECK(id.lhs.size() == 6);
  }
  CHECK(found);
}

TEST_CASE("ledger strings round trip") {
  for (const auto& id : builtin_ledger()) {
    auto terms = identity_terms(id);
    auto back = make_identity(id.name, id.kind, terms, id.note);
    REQUIRE(back.lhs.size() == id.lhs.size());
    REQUIRE(back.rhs.size() == id.rhs.size());
    for (std::size_t i = 0; i < id.lhs.size(); ++i) CHECK(structurally_equal(*back.lhs[i], *id.lhs[i]));
    for (std::size_t i = 0; i < id.rhs.size(); ++i) CHECK(structurally_equal(*back.rhs[i], *id.rhs[i]));
    CHECK(identity_terms(back) == terms);
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto e = random_expr(3);
    auto text = to_string(*e);
    auto back = parse_expr(text);
    CHECK_MESSAGE(structurally_equal(*back, *e), text);
    CHECK(to_string(*back) == text);
  }
}

TEST_CASE("evaluation is a ring homomorphism and dual is an involution") {
  auto x = cayley();
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_expr(1);
    auto b = random_expr(1);
    CHECK(eval_expr(x, *tensor(a, b)) == eval_expr(x, *a) * eval_expr(x, *b));
    CHECK(eval_expr(x, *oplus({a, b})) == eval_expr(x, *a) + eval_expr(x, *b));
    CHECK(eval_expr(x, *dual(dual(a))) == eval_expr(x, *a));
    CHECK(eval_expr(x, *dual(tensor(a, b))) == eval_expr(x, *dual(a)) * eval_expr(x, *dual(b)));
  }
}

TEST_CASE("shipped ledger file matches the built-in identities") {
  std::ifstream in(BOTT_DATA_DIR "/builtin_ledger.json");
  REQUIRE(in);
  auto shipped = io::json::parse(in);
  CHECK(shipped == io::ledger_json(builtin_ledger()));

  auto loaded = io::ledger_from_json(shipped);
  auto x = cayley();
  for (const auto& id : loaded) CHECK_MESSAGE(check_identity(x, id).pass, id.name);
}
