#include "bott/presets.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bott {

namespace {

// Simply-laced matrix from 1-based edges.
CartanMatrix simply_laced(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<int> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 2;
  for (auto [a, b] : edges) {
    e[(a - 1) * n + (b - 1)] = -1;
    e[(b - 1) * n + (a - 1)] = -1;
  }
  return CartanMatrix(n, std::move(e));
}

// B_n with alpha_n short: a(n-1, n) = -1, a(n, n-1) = -2 (1-based).
CartanMatrix type_b(std::size_t n) {
  std::vector<int> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 2;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e[i * n + i + 1] = -1;
    e[(i + 1) * n + i] = -1;
  }
  e[(n - 1) * n + (n - 2)] = -2;
  return CartanMatrix(n, std::move(e));
}

const std::map<std::string, CartanMatrix, std::less<>>& registry() {
  static const std::map<std::string, CartanMatrix, std::less<>> presets = {
      {"A1", CartanMatrix{{2}}},
      {"A2", simply_laced(2, {{1, 2}})},
      {"B3", type_b(3)},
      {"B4", type_b(4)},
      {"D5", simply_laced(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}})},
      {"E6-paper", simply_laced(6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}})},
      {"E6-bourbaki", simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}})},
  };
  return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

CartanMatrix preset_cartan(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  return it->second;
}

RootSystemPtr preset(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, RootSystemPtr, std::less<>> built;
  std::lock_guard lock(mutex);
  if (auto it = built.find(name); it != built.end()) return it->second;
  auto rs = build_root_system(preset_cartan(name));
  built.emplace(std::string(name), rs);
  return rs;
}

CartanMatrix cartan_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  const auto rank = j.at("rank").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != rank)
    throw std::invalid_argument("Cartan JSON: 'entries' must have 'rank' rows");
  std::vector<int> e;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rank)
      throw std::invalid_argument("Cartan JSON: every row must have 'rank' entries");
    for (const auto& x : row) e.push_back(x.get<int>());
  }
  return CartanMatrix(rank, std::move(e));
}

CartanMatrix load_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Cartan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return cartan_from_json_text(ss.str());
}

}  // namespace bott
