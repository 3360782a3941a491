#pragma once

// Shared generators and brute-force oracles for the unit and acceptance tests.
// Oracles here must not call the code paths they are used to check.

#include "bott/character.hpp"
#include "bott/root_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace bott::testing {

using Rational = boost::multiprecision::cpp_rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0xB077u);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random weight, dominant on `sub`, coordinates in [0, max] on sub nodes and
/// [off_lo, off_hi] elsewhere.
inline Weight random_weight(const Subsystem& sub, std::size_t rank, std::int64_t max,
                            std::int64_t off_lo = 0, std::int64_t off_hi = 0) {
  Weight w = Weight::zero(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = sub.contains(i) ? uniform(0, max) : uniform(off_lo, off_hi);
  return w;
}

/// Arbitrary (not necessarily dominant) weight.
inline Weight random_any(std::size_t rank, std::int64_t bound) {
  Weight w = Weight::zero(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = uniform(-bound, bound);
  return w;
}

/// Simple-root coordinates of a weight, or nullopt when it is outside the root lattice.
class RootCoordinates {
 public:
  explicit RootCoordinates(const CartanMatrix& a) : n_(a.rank()), inv_(n_ * n_) {
    // Gauss-Jordan on [A | I] over the rationals; column j of A is alpha_j.
    std::vector<Rational> m(n_ * 2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) m[i * 2 * n_ + j] = a(i, j);
      m[i * 2 * n_ + n_ + i] = 1;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (m[p * 2 * n_ + c] == 0) ++p;
      for (std::size_t k = 0; k < 2 * n_; ++k) std::swap(m[c * 2 * n_ + k], m[p * 2 * n_ + k]);
      Rational piv = m[c * 2 * n_ + c];
      for (std::size_t k = 0; k < 2 * n_; ++k) m[c * 2 * n_ + k] /= piv;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == c || m[r * 2 * n_ + c] == 0) continue;
        Rational f = m[r * 2 * n_ + c];
        for (std::size_t k = 0; k < 2 * n_; ++k) m[r * 2 * n_ + k] -= f * m[c * 2 * n_ + k];
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) inv_[i * n_ + j] = m[i * 2 * n_ + n_ + j];
  }

  std::optional<std::vector<std::int64_t>> operator()(const Weight& w) const {
    std::vector<std::int64_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += inv_[i * n_ + j] * w[j];
      if (boost::multiprecision::denominator(s) != 1) return std::nullopt;
      out[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(s));
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Rational> inv_;
};

/// Weyl group of the full system as reduced words, enumerated through the
/// regular orbit of rho.
inline std::vector<std::vector<std::size_t>> weyl_words(const RootSystem& rs) {
  std::map<Weight, std::vector<std::size_t>> seen{{rs.rho(), {}}};
  std::vector<Weight> frontier{rs.rho()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Weight r = w;
        r.add_scaled(rs.simple_root(i), -w[i]);
        if (seen.count(r)) continue;
        auto word = seen[w];
        word.insert(word.begin(), i);  // r = s_i w rho
        seen.emplace(r, std::move(word));
        next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [_, word] : seen) out.push_back(word);
  return out;
}

inline Weight apply_word(const RootSystem& rs, const std::vector<std::size_t>& word, Weight w) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) w.add_scaled(rs.simple_root(*it), -w[*it]);
  return w;
}

/// Kostant's multiplicity formula m(mu) = sum_w sgn(w) P(w(lambda+rho) - (mu+rho)),
/// with the partition function P counted by memoised recursion over positive roots.
class KostantOracle {
 public:
  explicit KostantOracle(const RootSystem& rs) : rs_(rs), coords_(rs.cartan()), words_(weyl_words(rs)) {}

  std::size_t weyl_order() const { return words_.size(); }

  std::int64_t multiplicity(const Weight& lambda, const Weight& mu) {
    std::int64_t m = 0;
    for (const auto& word : words_) {
      Weight nu = apply_word(rs_, word, lambda + rs_.rho()) - (mu + rs_.rho());
      auto c = coords_(nu);
      if (!c) continue;
      const std::int64_t sign = (word.size() % 2 == 0) ? 1 : -1;
      m += sign * partitions(*c, 0);
    }
    return m;
  }

  /// All dominant weights mu <= lambda with their multiplicities (zeros omitted).
  std::map<Weight, std::int64_t> dominant_character(const Weight& lambda) {
    std::map<Weight, std::int64_t> out;
    std::vector<Weight> frontier{lambda};
    std::map<Weight, bool> seen{{lambda, true}};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& mu : frontier) {
        if (is_dominant(Subsystem::full(rs_.rank()), mu)) {
          if (auto m = multiplicity(lambda, mu); m != 0) out[mu] = m;
        }
        for (std::size_t i = 0; i < rs_.rank(); ++i) {
          Weight d = mu - rs_.simple_root(i);
          if (height_below(lambda, d) && !seen.count(d)) {
            seen[d] = true;
            next.push_back(d);
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

 private:
  bool height_below(const Weight& lambda, const Weight& mu) {
    // Weights of V_lambda satisfy 0 <= lambda - mu <= lambda - w0(lambda) in root coordinates.
    if (!bound_ || bound_lambda_ != lambda) {
      bound_lambda_ = lambda;
      Weight low = lambda;  // reflect until antidominant: w0(lambda)
      for (;;) {
        std::size_t i = 0;
        while (i < low.size() && low[i] <= 0) ++i;
        if (i == low.size()) break;
        low.add_scaled(rs_.simple_root(i), -low[i]);
      }
      bound_ = *coords_(lambda - low);
    }
    auto c = coords_(lambda - mu);
    if (!c) return false;
    for (std::size_t i = 0; i < c->size(); ++i)
      if ((*c)[i] < 0 || (*c)[i] > (*bound_)[i]) return false;
    return true;
  }

  std::int64_t partitions(const std::vector<std::int64_t>& nu, std::size_t k) {
    for (auto x : nu)
      if (x < 0) return 0;
    const auto& roots = rs_.positive_roots();
    if (k == roots.size()) {
      for (auto x : nu)
        if (x != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(nu, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = 0;
    std::vector<std::int64_t> rest = nu;
    while (true) {
      bool ok = true;
      for (auto x : rest)
        if (x < 0) ok = false;
      if (!ok) break;
      total += partitions(rest, k + 1);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= roots[k].coeffs[i];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  const RootSystem& rs_;
  RootCoordinates coords_;
  std::vector<std::vector<std::size_t>> words_;
  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, std::int64_t> memo_;
  std::optional<std::vector<std::int64_t>> bound_;
  Weight bound_lambda_;
};

/// Weyl dimension formula evaluated with exact rationals from the positive roots of `sub`.
inline BigInt weyl_dimension_oracle(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  Rational d = 1;
  for (auto idx : rs.positive_roots_of(sub)) {
    const auto& root = rs.positive_roots()[idx];
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      num += root.coroot[i] * (lambda[i] + 1);
      den += root.coroot[i];
    }
    d *= Rational(num, den);
  }
  return boost::multiprecision::numerator(d);
}

/// Number of positive roots of `sub` on which lambda + rho pairs negatively:
/// the length of the Weyl element carrying lambda + rho into the dominant chamber.
inline int negative_pairings(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  int n = 0;
  for (auto idx : rs.positive_roots_of(sub)) {
    const auto& root = rs.positive_roots()[idx];
    std::int64_t p = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) p += root.coroot[i] * (lambda[i] + 1);
    if (p < 0) ++n;
  }
  return n;
}

inline bool singular_for(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  for (auto idx : rs.positive_roots_of(sub)) {
    const auto& root = rs.positive_roots()[idx];
    std::int64_t p = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) p += root.coroot[i] * (lambda[i] + 1);
    if (p == 0) return true;
  }
  return false;
}

inline Mult mult_of(const IrrepSum& terms, const Weight& w) {
  for (const auto& t : terms)
    if (t.highest == w) return t.mult;
  return 0;
}

}  // namespace bott::testing
