#include "bott/character.hpp"

#include "bott/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

namespace bott {

namespace {

std::atomic<std::size_t> g_guardrail{1'000'000};
std::atomic<bool> g_cache_enabled{true};

struct CacheKey {
  std::string fingerprint;
  std::uint64_t mask;
  Weight lambda;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    return std::hash<std::string>{}(k.fingerprint) ^ (k.mask * 0x9e3779b97f4a7c15ULL) ^
           (k.lambda.hash() << 1);
  }
};

struct CharacterCache {
  std::shared_mutex mutex;
  std::unordered_map<CacheKey, std::shared_ptr<const Character>, CacheKeyHash> entries;
};

CharacterCache& cache() {
  static CharacterCache c;
  return c;
}

void require_dominant(const RootSystem& rs, const Subsystem& sub, const Weight& lambda,
                      const char* what) {
  rs.check_rank(lambda);
  if (!is_dominant(sub, lambda))
    throw NotDominant(std::string(what) + ": " + lambda.to_string() + " is not dominant");
}

void require_same_rank(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) throw RankMismatch("characters of different rank");
}

Character build_irrep_character(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  auto dominant = dominant_multiplicities(rs, sub, lambda);
  Character out(rs.rank());
  std::unordered_set<Weight, WeightHash> orbit;
  std::vector<Weight> stack;
  for (const auto& [mu, m] : dominant) {
    orbit.clear();
    orbit.insert(mu);
    stack.assign(1, mu);
    while (!stack.empty()) {
      Weight nu = std::move(stack.back());
      stack.pop_back();
      out.add(nu, m);
      for (auto i : sub.nodes()) {
        if (nu[i] <= 0) continue;
        Weight next = nu;
        next.add_scaled(rs.simple_root(i), -nu[i]);
        if (orbit.insert(next).second) stack.push_back(std::move(next));
      }
    }
  }
  return out;
}

IrrepSum decompose_impl(const RootSystem& rs, const Subsystem& sub, Character c, bool allow_virtual) {
  IrrepSum terms;
  while (!c.empty()) {
    const Weight* best = nullptr;
    std::int64_t best_h = 0;
    for (const auto& [w, m] : c) {
      auto h = rs.height(sub, w);
      if (!best || h > best_h || (h == best_h && *best < w)) {
        best = &w;
        best_h = h;
      }
    }
    Weight top = *best;
    Mult m = c[top];
    if (!is_dominant(sub, top))
      throw NotDecomposable("character is not Weyl-symmetric: maximal weight " + top.to_string() +
                            " is not dominant");
    if (m < 0 && !allow_virtual)
      throw NotDecomposable("negative multiplicity " + std::to_string(m) + " at highest weight " +
                            top.to_string());
    auto irrep = irrep_character(rs, sub, top);
    for (const auto& [w, k] : *irrep) c.add(w, checked_mul(-m, k));
    terms.push_back({std::move(top), m});
  }
  sort_irrep_sum(rs, sub, terms);
  return terms;
}

}  // namespace

Mult checked_add(Mult a, Mult b) {
  Mult r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("multiplicity overflow in addition");
  return r;
}

Mult checked_mul(Mult a, Mult b) {
  Mult r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("multiplicity overflow in multiplication");
  return r;
}

std::size_t support_guardrail() { return g_guardrail.load(); }
void set_support_guardrail(std::size_t limit) { g_guardrail.store(limit); }

// ------------------------------------------------------------------- Character

Character Character::single(const Weight& w, Mult m) {
  Character c(w.size());
  c.add(w, m);
  return c;
}

Mult Character::operator[](const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, Mult m) {
  if (m == 0) return;
  if (w.size() != rank_) throw RankMismatch("weight " + w.to_string() + " has wrong rank");
  auto [it, inserted] = terms_.try_emplace(w, m);
  if (!inserted) {
    it->second = checked_add(it->second, m);
    if (it->second == 0) terms_.erase(it);
  } else if (terms_.size() > g_guardrail.load()) {
    throw GuardrailExceeded("character support exceeds " + std::to_string(g_guardrail.load()) +
                            " weights");
  }
}

Mult Character::total() const {
  Mult s = 0;
  for (const auto& [w, m] : terms_) s = checked_add(s, m);
  return s;
}

bool Character::is_genuine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<std::pair<Weight, Mult>> Character::sorted() const {
  std::vector<std::pair<Weight, Mult>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Character& Character::operator+=(const Character& o) {
  require_same_rank(*this, o);
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  require_same_rank(*this, o);
  for (const auto& [w, m] : o.terms_) add(w, checked_mul(-1, m));
  return *this;
}

Character& Character::operator*=(Mult k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m = checked_mul(m, k);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  require_same_rank(a, b);
  const Character& outer = a.size() <= b.size() ? a : b;
  const Character& inner = a.size() <= b.size() ? b : a;
  Character out(a.rank());
  for (const auto& [w1, m1] : outer) {
    for (const auto& [w2, m2] : inner) out.add(w1 + w2, checked_mul(m1, m2));
  }
  return out;
}

bool operator==(const Character& a, const Character& b) {
  return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

Character Character::shifted(const Weight& shift) const {
  Character out(rank_);
  out.reserve(terms_.size());
  for (const auto& [w, m] : terms_) out.terms_.emplace(w + shift, m);
  return out;
}

Character Character::negated() const {
  Character out(rank_);
  out.reserve(terms_.size());
  for (const auto& [w, m] : terms_) out.terms_.emplace(-w, m);
  return out;
}

Character char_arith(const Character& a, const Character& b, CharOp op, Mult k) {
  switch (op) {
    case CharOp::add: return a + b;
    case CharOp::sub: return a - b;
    case CharOp::mul: return a * b;
    case CharOp::scale: return k * a;
  }
  throw std::logic_error("unknown CharOp");
}

// ------------------------------------------------------------------ plethysms

Character adams(const Character& c, int k) {
  Character out(c.rank());
  for (const auto& [w, m] : c) out.add(static_cast<Weight::value_type>(k) * w, m);
  return out;
}

Character power_op(const Character& c, int k, PowerKind kind) {
  if (k < 0) throw std::invalid_argument("power_op: k must be >= 0");
  if (kind == PowerKind::adams) return adams(c, k);
  if (!c.is_genuine())
    throw std::invalid_argument("power_op: wedge/sym need a genuine character");

  std::vector<Character> psi(k + 1, Character(c.rank()));
  for (int i = 1; i <= k; ++i) psi[i] = adams(c, i);
  std::vector<Character> e;
  e.reserve(k + 1);
  e.push_back(Character::trivial(c.rank()));
  for (int j = 1; j <= k; ++j) {
    Character acc(c.rank());
    for (int i = 1; i <= j; ++i) {
      Character term = psi[i] * e[j - i];
      if (kind == PowerKind::wedge && i % 2 == 0) term *= -1;
      acc += term;
    }
    Character next(c.rank());
    for (const auto& [w, m] : acc) {
      if (m % j != 0)
        throw NonIntegralPlethysm("Newton recursion: multiplicity " + std::to_string(m) +
                                  " not divisible by " + std::to_string(j));
      next.add(w, m / j);
    }
    e.push_back(std::move(next));
  }
  return e[k];
}

// --------------------------------------------------------- irreducible characters

BigInt weyl_dim(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  require_dominant(rs, sub, lambda, "weyl_dim");
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (auto k : rs.positive_roots_of(sub)) {
    const auto& root = rs.positive_roots()[k];
    num *= rs.pairing(shifted, root);
    den *= rs.pairing(rs.rho(), root);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula did not divide exactly");
  return num / den;
}

std::vector<std::pair<Weight, Mult>> dominant_multiplicities(const RootSystem& rs,
                                                             const Subsystem& sub,
                                                             const Weight& lambda) {
  require_dominant(rs, sub, lambda, "irrep_character");
  const auto root_ids = rs.positive_roots_of(sub);
  const auto& roots = rs.positive_roots();
  const std::size_t n = rs.rank();

  struct Entry {
    std::vector<std::int64_t> depth;  // lambda - mu in simple-root coordinates
    std::int64_t level = 0;
    Mult mult = 0;
  };
  // Dominant weights below lambda: closed under subtracting positive roots
  // while staying dominant.
  std::unordered_map<Weight, Entry, WeightHash> dom;
  std::vector<Weight> order{lambda};
  dom.emplace(lambda, Entry{std::vector<std::int64_t>(n, 0), 0, 1});
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Weight mu = order[head];
    const Entry base = dom.at(mu);
    for (auto k : root_ids) {
      Weight nu = mu - roots[k].weight;
      if (!is_dominant(sub, nu) || dom.count(nu)) continue;
      Entry e{base.depth, base.level + roots[k].height, 0};
      for (std::size_t j = 0; j < n; ++j) e.depth[j] += roots[k].coeffs[j];
      dom.emplace(nu, std::move(e));
      order.push_back(std::move(nu));
      if (order.size() > g_guardrail.load())
        throw GuardrailExceeded("too many dominant weights below " + lambda.to_string());
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return dom.at(a).level < dom.at(b).level;
  });

  // Freudenthal:
  // ((lambda+rho,lambda+rho) - (mu+rho,mu+rho)) m(mu)
  //     = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)
  Weight lambda_rho = lambda + rs.rho();
  for (const Weight& mu : order) {
    Entry& entry = dom.at(mu);
    if (entry.level == 0) continue;
    Mult num = 0;
    for (auto k : root_ids) {
      const auto& root = roots[k];
      Weight nu = mu;
      for (std::int64_t step = 1; entry.level - step * root.height >= 0; ++step) {
        nu += root.weight;
        Weight rep = make_dominant(rs, sub, nu).weight;
        auto it = dom.find(rep);
        if (it == dom.end() || it->second.mult == 0) break;  // alpha-strings are unbroken
        num = checked_add(num, checked_mul(it->second.mult, rs.form_with_root(nu, root.coeffs)));
      }
    }
    num = checked_mul(num, 2);
    std::int64_t lr_beta = 0;
    for (std::size_t j = 0; j < n; ++j) lr_beta += entry.depth[j] * rs.symmetrizer(j) * lambda_rho[j];
    const std::int64_t den = 2 * lr_beta - rs.root_norm(entry.depth);
    if (den <= 0 || num % den != 0)
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " +
                             mu.to_string());
    entry.mult = num / den;
  }

  std::vector<std::pair<Weight, Mult>> out;
  out.reserve(order.size());
  for (const Weight& mu : order) {
    Mult m = dom.at(mu).mult;
    if (m != 0) out.emplace_back(mu, m);
  }
  return out;
}

std::shared_ptr<const Character> irrep_character(const RootSystem& rs, const Subsystem& sub,
                                                 const Weight& lambda) {
  require_dominant(rs, sub, lambda, "irrep_character");
  if (!g_cache_enabled.load())
    return std::make_shared<const Character>(build_irrep_character(rs, sub, lambda));

  auto& c = cache();
  CacheKey key{rs.fingerprint(), sub.mask(), lambda};
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  auto built = std::make_shared<const Character>(build_irrep_character(rs, sub, lambda));
  std::unique_lock lock(c.mutex);
  return c.entries.try_emplace(std::move(key), std::move(built)).first->second;
}

void set_character_cache_enabled(bool enabled) { g_cache_enabled.store(enabled); }
bool character_cache_enabled() { return g_cache_enabled.load(); }

void clear_character_cache() {
  auto& c = cache();
  std::unique_lock lock(c.mutex);
  c.entries.clear();
}

std::size_t character_cache_size() {
  auto& c = cache();
  std::shared_lock lock(c.mutex);
  return c.entries.size();
}

// --------------------------------------------------------------- decomposition

void sort_irrep_sum(const RootSystem& rs, const Subsystem& sub, IrrepSum& terms) {
  std::sort(terms.begin(), terms.end(), [&](const IrrepTerm& a, const IrrepTerm& b) {
    auto ha = rs.height(sub, a.highest), hb = rs.height(sub, b.highest);
    if (ha != hb) return ha > hb;
    return b.highest < a.highest;
  });
}

IrrepSum decompose(const RootSystem& rs, const Subsystem& sub, Character c) {
  return decompose_impl(rs, sub, std::move(c), false);
}

IrrepSum decompose_virtual(const RootSystem& rs, const Subsystem& sub, Character c) {
  return decompose_impl(rs, sub, std::move(c), true);
}

Character compose(const RootSystem& rs, const Subsystem& sub, const IrrepSum& terms) {
  Character out(rs.rank());
  for (const auto& t : terms) {
    auto irrep = irrep_character(rs, sub, t.highest);
    for (const auto& [w, m] : *irrep) out.add(w, checked_mul(m, t.mult));
  }
  return out;
}

IrrepSum tensor_decompose(const RootSystem& rs, const Subsystem& sub, const Weight& a,
                          const Weight& b) {
  require_dominant(rs, sub, a, "tensor");
  require_dominant(rs, sub, b, "tensor");
  const bool a_smaller = weyl_dim(rs, sub, a) <= weyl_dim(rs, sub, b);
  const Weight& top = a_smaller ? b : a;
  auto small = irrep_character(rs, sub, a_smaller ? a : b);

  std::map<Weight, Mult> acc;
  for (const auto& [nu, m] : *small) {
    auto r = dotted_to_dominant(rs, sub, top + nu);
    if (!r) continue;
    Mult signed_m = (r->length % 2 == 0) ? m : -m;
    acc[r->weight] = checked_add(acc[r->weight], signed_m);
  }
  IrrepSum out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("Klimyk produced a negative multiplicity at " + w.to_string());
    if (m > 0) out.push_back({w, m});
  }
  sort_irrep_sum(rs, sub, out);
  return out;
}

}  // namespace bott
