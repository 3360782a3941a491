#include "bott/errors.hpp"
#include "bott/parabolic.hpp"
#include "bott/presets.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bott;
using namespace bott::testing;

namespace {

const Weight kS{0, 0, 0, 0, 0, 1};
const Weight kT{0, 0, 0, 1, 0, 0};

ParabolicSetup cayley() { return make_setup(preset("E6-paper"), 0); }

Weight w(std::initializer_list<Weight::value_type> c) { return Weight(c); }

BigInt rank_sum(const ParabolicSetup& setup, const GradedBundle& g) {
  BigInt sum = 0;
  for (const auto& t : g) sum += bundle_rank(setup, t.highest) * t.mult;
  return sum;
}

// Weights of the 27 collection bundles and a few of their twists.
std::vector<Weight> levi_sample() {
  std::vector<Weight> out;
  for (auto base : {w({0, 0, 0, 0, 0, 2}), kS, Weight::zero(6), kT, w({0, 1, 0, 0, 0, 0}),
                    w({0, 0, 1, 0, 0, 0}), w({0, 0, 0, 0, 1, 0})}) {
    for (int t = -4; t <= 4; t += 2) {
      auto x = base;
      x[0] += t;
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parabolic setups") {
  auto x = cayley();
  CHECK(x.dim_x() == 16);
  CHECK(x.index() == 12);
  CHECK(x.hyperplane() == Weight::fundamental(6, 0));

  auto q = make_setup(preset("B4"), 0);
  CHECK(q.dim_x() == 7);
  CHECK(q.index() == 7);

  auto p2 = make_setup(preset("A2"), 0);
  CHECK(p2.dim_x() == 2);
  CHECK(p2.index() == 3);
}

TEST_CASE("bundle ranks") {
  auto x = cayley();
  CHECK(bundle_rank(x, kS) == 10);
  CHECK(bundle_rank(x, kT) == 16);
  CHECK(bundle_rank(x, w({5, 0, 0, 0, 0, 0})) == 1);
  auto q = make_setup(preset("B4"), 0);
  // Spinor bundle on the 7-dimensional quadric.
  CHECK(bundle_rank(q, w({0, 0, 0, 1})) == 8);
}

TEST_CASE("bundle_dual") {
  auto x = cayley();
  CHECK(bundle_dual(x, kS) == w({-1, 0, 0, 0, 0, 1}));
  CHECK(bundle_dual(x, w({0, 0, 0, 0, 0, 3})) == w({-3, 0, 0, 0, 0, 3}));
  for (int t = -5; t <= 5; ++t) CHECK(bundle_dual(x, w({t, 0, 0, 0, 0, 0})) == w({-t, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(bundle_dual(x, w({0, -1, 0, 0, 0, 0})), NotDominant);

  for (const auto& v : levi_sample()) {
    auto d = bundle_dual(x, v);
    CHECK(bundle_dual(x, d) == v);
    CHECK(bundle_rank(x, d) == bundle_rank(x, v));
    CHECK(bundle_c1(x, d) == -bundle_c1(x, v));
  }
}

TEST_CASE("twist") {
  auto x = cayley();
  CHECK(twist(x, kS, 0) == kS);
  CHECK(twist(x, kS, -1) == bundle_dual(x, kS));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(twist(x, twist(x, kT, a), b) == twist(x, kT, a + b));
}

TEST_CASE("first Chern class") {
  auto x = cayley();
  CHECK(bundle_c1(x, kS) == 5);
  CHECK(bundle_c1(x, w({1, 0, 0, 0, 0, 0})) == 1);
  CHECK(bundle_c1(x, kT) == 12);
  CHECK(bundle_c1(x, kT) == x.index());

  for (const auto& v : levi_sample()) {
    for (int t = -3; t <= 3; ++t) {
      CHECK(BigInt(bundle_c1(x, twist(x, v, t))) == BigInt(bundle_c1(x, v)) + t * bundle_rank(x, v));
    }
  }
}

TEST_CASE("c1 is additive and satisfies the tensor rule") {
  auto x = cayley();
  auto sample = levi_sample();
  for (int trial = 0; trial < 25; ++trial) {
    const auto& a = sample[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sample.size()) - 1))];
    const auto& b = sample[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sample.size()) - 1))];
    BigInt c1 = 0;
    for (const auto& t : levi_tensor(x, a, b)) c1 += BigInt(bundle_c1(x, t.highest)) * t.mult;
    CHECK(c1 == bundle_rank(x, a) * bundle_c1(x, b) + bundle_rank(x, b) * bundle_c1(x, a));
  }
}

TEST_CASE("levi_tensor examples") {
  auto x = cayley();
  CHECK(levi_tensor(x, kT, Weight::zero(6)) == GradedBundle{{kT, 1}});

  auto sd = w({-1, 0, 0, 0, 0, 1});
  auto g = levi_tensor(x, sd, sd);
  CHECK(g.size() == 3);
  CHECK(mult_of(g, w({-2, 0, 0, 0, 0, 2})) == 1);
  CHECK(mult_of(g, w({-2, 0, 0, 0, 1, 0})) == 1);
  CHECK(mult_of(g, w({-1, 0, 0, 0, 0, 0})) == 1);

  g = levi_tensor(x, w({0, 1, 0, 0, 0, 0}), kT);
  CHECK(g.size() == 3);
  CHECK(mult_of(g, w({0, 1, 0, 1, 0, 0})) == 1);
  CHECK(mult_of(g, w({1, 0, 0, 0, 1, 0})) == 1);
  CHECK(mult_of(g, w({2, 0, 0, 0, 0, 0})) == 1);

  CHECK_THROWS_AS(levi_tensor(x, w({0, -1, 0, 0, 0, 0}), kT), NotDominant);
}

TEST_CASE("levi_tensor matches the brute-force product and preserves rank") {
  auto x = cayley();
  auto sample = levi_sample();
  for (int trial = 0; trial < 25; ++trial) {
    const auto& a = sample[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sample.size()) - 1))];
    const auto& b = sample[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(sample.size()) - 1))];
    auto g = levi_tensor(x, a, b);
    auto oracle = decompose(x.rs(), x.levi(), *bundle_character(x, a) * *bundle_character(x, b));
    CHECK(g == oracle);
    for (const auto& t : g) CHECK(t.mult > 0);
    CHECK(rank_sum(x, g) == bundle_rank(x, a) * bundle_rank(x, b));
  }
}

TEST_CASE("branch") {
  auto x = cayley();
  CHECK(branch(x, Weight::zero(6)) == GradedBundle{{Weight::zero(6), 1}});

  auto adj = branch(x, kT);
  CHECK(adj.size() == 4);
  CHECK(mult_of(adj, kT) == 1);
  CHECK(mult_of(adj, w({-2, 1, 0, 0, 0, 0})) == 1);
  CHECK(mult_of(adj, w({-1, 0, 0, 0, 1, 0})) == 1);
  CHECK(mult_of(adj, Weight::zero(6)) == 1);
  CHECK(rank_sum(x, adj) == 78);

  auto b6 = branch(x, kS);
  CHECK(mult_of(b6, kS) == 1);
  CHECK(rank_sum(x, b6) == 27);

  CHECK_THROWS_AS(branch(x, w({-1, 0, 0, 0, 0, 1})), NotDominant);
}

TEST_CASE("trivial bundle with fibre V_w6 splits as O(1), Omega(1) and the dual of S") {
  auto x = cayley();
  auto g = trivial_bundle_gr(x, kS);
  CHECK(g.size() == 3);
  CHECK(mult_of(g, w({1, 0, 0, 0, 0, 0})) == 1);
  CHECK(mult_of(g, w({-1, 1, 0, 0, 0, 0})) == 1);
  CHECK(mult_of(g, w({-1, 0, 0, 0, 0, 1})) == 1);
  CHECK(g == branch(x, w({1, 0, 0, 0, 0, 0})));
}

TEST_CASE("branching reproduces the full character") {
  auto x = cayley();
  for (std::size_t i = 0; i < 6; ++i) {
    auto lambda = Weight::fundamental(6, i);
    auto g = branch(x, lambda);
    CHECK(compose(x.rs(), x.levi(), g) == *irrep_character(x.rs(), x.full(), lambda));
    CHECK(rank_sum(x, g) == weyl_dim(x.rs(), x.full(), lambda));
    CHECK(mult_of(g, lambda) == 1);
  }
  auto q = make_setup(preset("B4"), 0);
  for (std::size_t i = 0; i < 4; ++i) {
    auto lambda = Weight::fundamental(4, i);
    CHECK(compose(q.rs(), q.levi(), branch(q, lambda)) == *irrep_character(q.rs(), q.full(), lambda));
  }
}
