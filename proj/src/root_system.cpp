#include "bott/root_system.hpp"

#include "bott/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bott {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

void check_node(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
}

// Positive rationals d_i with d_i a(i,j) = d_j a(j,i), scaled to coprime integers.
std::vector<std::int64_t> symmetrize(const CartanMatrix& a) {
  const std::size_t n = a.rank();
  std::vector<cpp_rational> d(n, cpp_rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        cpp_rational dj = d[i] * a(i, j) / a(j, i);
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw NotFiniteType("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  cpp_int lcm_den = 1;
  for (auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<cpp_int> scaled;
  cpp_int g = 0;
  for (auto& x : d) {
    cpp_int v = numerator(x) * (lcm_den / denominator(x));
    scaled.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  std::vector<std::int64_t> out;
  for (auto& v : scaled) out.push_back(static_cast<std::int64_t>(v / g));
  return out;
}

// Leading principal minors of the symmetrized matrix (exact, fraction free).
bool positive_definite(const CartanMatrix& a, const std::vector<std::int64_t>& d) {
  const std::size_t n = a.rank();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cpp_rational(d[i] * a(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      cpp_rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- CartanMatrix

CartanMatrix::CartanMatrix(std::size_t rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ == 0 || rank_ > 64) throw std::invalid_argument("Cartan rank must be in 1..64");
  if (entries_.size() != rank_ * rank_)
    throw std::invalid_argument("Cartan matrix must have rank*rank entries");
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      int aij = (*this)(i, j);
      if (i == j && aij != 2) throw std::invalid_argument("Cartan diagonal entries must be 2");
      if (i != j && aij > 0) throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
      if (i != j && (aij == 0) != ((*this)(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
}

CartanMatrix::CartanMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : CartanMatrix(rows.size(), [&] {
        std::vector<int> e;
        for (auto& r : rows) {
          if (r.size() != rows.size()) throw std::invalid_argument("Cartan matrix must be square");
          e.insert(e.end(), r.begin(), r.end());
        }
        return e;
      }()) {}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    out[i].assign(entries_.begin() + i * rank_, entries_.begin() + (i + 1) * rank_);
  return out;
}

// ------------------------------------------------------------------- Subsystem

Subsystem::Subsystem(std::size_t ambient_rank, std::vector<std::size_t> nodes)
    : ambient_rank_(ambient_rank) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (auto i : nodes) {
    if (i >= ambient_rank) throw std::out_of_range("subsystem node out of range");
    mask_ |= std::uint64_t{1} << i;
  }
  nodes_ = std::move(nodes);
}

Subsystem Subsystem::full(std::size_t rank) {
  std::vector<std::size_t> nodes(rank);
  std::iota(nodes.begin(), nodes.end(), 0);
  return Subsystem(rank, std::move(nodes));
}

Subsystem Subsystem::all_but(std::size_t rank, std::size_t crossed) {
  if (crossed >= rank) throw std::out_of_range("crossed node out of range");
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < rank; ++i)
    if (i != crossed) nodes.push_back(i);
  return Subsystem(rank, std::move(nodes));
}

// ------------------------------------------------------------------ RootSystem

RootSystem::RootSystem(CartanMatrix cartan, std::size_t root_bound) : cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.rank();
  symmetrizer_ = symmetrize(cartan_);
  if (!positive_definite(cartan_, symmetrizer_))
    throw NotFiniteType("symmetrized Cartan matrix is not positive definite");

  simple_roots_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Weight a = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = cartan_(i, j);
    simple_roots_.push_back(std::move(a));
  }
  rho_ = Weight::zero(n);
  for (std::size_t i = 0; i < n; ++i) rho_[i] = 1;

  // Closure: s_i maps positive roots other than alpha_i to positive roots.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> c(n, 0);
    c[j] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  auto to_weight = [&](const std::vector<int>& c) {
    Weight w = Weight::zero(n);
    for (std::size_t j = 0; j < n; ++j)
      if (c[j]) w.add_scaled(simple_roots_[j], c[j]);
    return w;
  };
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    Weight w = to_weight(c);
    for (std::size_t i = 0; i < n; ++i) {
      auto r = w[i];
      if (r == 0) continue;
      auto next = c;
      next[i] -= static_cast<int>(r);
      if (next[i] < 0) continue;  // only alpha_i itself goes negative
      if (seen.insert(next).second) {
        if (seen.size() > root_bound) throw NotFiniteType("root closure exceeded bound");
        queue.push_back(std::move(next));
      }
    }
  }

  for (const auto& c : seen) {
    PositiveRoot root;
    root.coeffs = c;
    root.weight = to_weight(c);
    root.height = std::accumulate(c.begin(), c.end(), 0);
    std::vector<std::int64_t> c64(c.begin(), c.end());
    const std::int64_t norm = root_norm(c64);  // (alpha, alpha)
    root.coroot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t num = 2 * c[i] * symmetrizer_[i];
      if (num % norm != 0) throw NotFiniteType("non-integral coroot");
      root.coroot[i] = num / norm;
      if (c[i]) root.support |= std::uint64_t{1} << i;
    }
    positive_roots_.push_back(std::move(root));
  }
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [](const PositiveRoot& a, const PositiveRoot& b) {
                     if (a.height != b.height) return a.height < b.height;
                     return a.coeffs > b.coeffs;
                   });

  fingerprint_ = std::to_string(n) + ":";
  for (auto e : cartan_.entries()) fingerprint_ += std::to_string(e) + ",";
}

std::vector<std::size_t> RootSystem::positive_roots_of(const Subsystem& sub) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if ((positive_roots_[k].support & ~sub.mask()) == 0) out.push_back(k);
  return out;
}

std::int64_t RootSystem::pairing(const Weight& lambda, const PositiveRoot& root) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += root.coroot[i] * lambda[i];
  return s;
}

std::int64_t RootSystem::form_with_root(const Weight& lambda, const std::vector<int>& coeffs) const {
  // (omega_i, alpha_j) = d_j delta_ij
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += coeffs[j] * symmetrizer_[j] * lambda[j];
  return s;
}

std::int64_t RootSystem::root_norm(const std::vector<std::int64_t>& c) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (!c[i]) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += c[i] * c[j] * symmetrizer_[i] * cartan_(i, j);
  }
  return s;
}

const std::vector<std::int64_t>& RootSystem::height_functional(const Subsystem& sub) const {
  std::lock_guard lock(height_mutex_);
  if (auto it = height_cache_.find(sub.mask()); it != height_cache_.end()) return it->second;

  const auto& nodes = sub.nodes();
  const std::size_t m = nodes.size();
  // Invert the sub Cartan matrix (rows i, cols j restricted to sub): a weight's
  // sub coordinates are A_sub * (root coordinates).
  std::vector<std::vector<cpp_rational>> aug(m, std::vector<cpp_rational>(2 * m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = cartan_(nodes[r], nodes[c]);
    aug[r][m + r] = 1;
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (aug[p][k] == 0) ++p;
    std::swap(aug[p], aug[k]);
    cpp_rational piv = aug[k][k];
    for (auto& x : aug[k]) x /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k || aug[r][k] == 0) continue;
      cpp_rational f = aug[r][k];
      for (std::size_t c = 0; c < 2 * m; ++c) aug[r][c] -= f * aug[k][c];
    }
  }
  // h(lambda) = sum_j (A_sub^{-1} lambda_sub)_j ; column sums of the inverse.
  std::vector<cpp_rational> col(m, cpp_rational(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) col[c] += aug[r][m + c];
  cpp_int den = 1;
  for (auto& x : col) den = boost::multiprecision::lcm(den, denominator(x));
  std::vector<std::int64_t> h(rank(), 0);
  for (std::size_t c = 0; c < m; ++c)
    h[nodes[c]] = static_cast<std::int64_t>(numerator(col[c]) * (den / denominator(col[c])));
  return height_cache_.emplace(sub.mask(), std::move(h)).first->second;
}

std::int64_t RootSystem::height(const Subsystem& sub, const Weight& lambda) const {
  const auto& h = height_functional(sub);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += h[i] * lambda[i];
  return s;
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.size() != rank())
    throw RankMismatch("weight " + w.to_string() + " has length " + std::to_string(w.size()) +
                       ", root system has rank " + std::to_string(rank()));
}

RootSystemPtr build_root_system(CartanMatrix cartan, std::size_t root_bound) {
  return std::make_shared<const RootSystem>(std::move(cartan), root_bound);
}

// ------------------------------------------------------------------ Weyl group

Weight reflect(const RootSystem& rs, std::size_t i, Weight lambda) {
  check_node(rs, i);
  rs.check_rank(lambda);
  const auto r = lambda[i];
  if (r != 0) lambda.add_scaled(rs.simple_root(i), -r);
  return lambda;
}

bool is_dominant(const Subsystem& sub, const Weight& lambda) {
  for (auto i : sub.nodes())
    if (lambda[i] < 0) return false;
  return true;
}

DominantResult make_dominant(const RootSystem& rs, const Subsystem& sub, Weight lambda) {
  rs.check_rank(lambda);
  DominantResult out;
  for (;;) {
    std::size_t pick = rs.rank();
    for (auto i : sub.nodes()) {
      if (lambda[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick == rs.rank()) break;
    lambda.add_scaled(rs.simple_root(pick), -lambda[pick]);
    ++out.count;
  }
  out.weight = std::move(lambda);
  return out;
}

std::optional<DottedResult> dotted_to_dominant(const RootSystem& rs, const Subsystem& sub,
                                               const Weight& lambda) {
  auto moved = make_dominant(rs, sub, lambda + rs.rho());
  for (auto i : sub.nodes())
    if (moved.weight[i] == 0) return std::nullopt;
  return DottedResult{moved.count, moved.weight - rs.rho()};
}

Weight dual_dominant(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!is_dominant(sub, lambda))
    throw NotDominant("dual_dominant: " + lambda.to_string() + " is not dominant");
  // -w_0(lambda) is the dominant element of the orbit of -lambda.
  return make_dominant(rs, sub, -lambda).weight;
}

}  // namespace bott
