#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace bott {

/// Integral weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
/// Roots are stored the same way (alpha_j is column j of the Cartan matrix).
class Weight {
 public:
  using value_type = std::int64_t;
  using storage_type = boost::container::small_vector<value_type, 8>;

  Weight() = default;
  Weight(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit Weight(std::span<const value_type> coords)
      : coords_(coords.begin(), coords.end()) {}

  static Weight zero(std::size_t rank) {
    Weight w;
    w.coords_.assign(rank, 0);
    return w;
  }

  /// omega_i, 0-based.
  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w = zero(rank);
    w.coords_.at(i) = 1;
    return w;
  }

  std::size_t size() const { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  std::span<const value_type> coords() const { return {coords_.data(), coords_.size()}; }

  bool is_zero() const {
    for (auto c : coords_)
      if (c != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(value_type k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }
  /// this += k * o
  Weight& add_scaled(const Weight& o, value_type k) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += k * o.coords_[i];
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  /// "[a1,a2,...]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + "]";
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ coords_.size();
    for (auto c : coords_) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  storage_type coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

}  // namespace bott
