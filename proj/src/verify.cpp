#include "bott/verify.hpp"

#include "bott/errors.hpp"
#include "bott/presets.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bott {

namespace {

Weight e6(std::initializer_list<Weight::value_type> a) { return Weight(a); }

}  // namespace

Collection cayley27() {
  auto setup = make_setup(preset("E6-paper"), 0);
  const Weight s2_dual = e6({-2, 0, 0, 0, 0, 2});
  const Weight s_dual = e6({-1, 0, 0, 0, 0, 1});
  const Weight trivial = Weight::zero(6);
  std::vector<Weight> bundles;
  for (int t = 0; t <= 2; ++t) {
    bundles.push_back(twist(setup, s2_dual, t));
    bundles.push_back(twist(setup, s_dual, t));
    bundles.push_back(twist(setup, trivial, t));
  }
  for (int t = 3; t <= 11; ++t) {
    bundles.push_back(twist(setup, s_dual, t));
    bundles.push_back(twist(setup, trivial, t));
  }
  return Collection{"cayley27", "E6-paper", std::move(setup), std::move(bundles)};
}

Collection kapranov_q7() {
  auto setup = make_setup(preset("B4"), 0);
  const Weight spinor{0, 0, 0, 1};
  std::vector<Weight> bundles;
  auto line = [&](int t) { return twist(setup, Weight::zero(4), t); };
  bundles.push_back(line(5));
  bundles.push_back(line(6));
  bundles.push_back(twist(setup, spinor, 6));
  for (int t = 7; t <= 11; ++t) bundles.push_back(line(t));
  return Collection{"kapranovQ7", "B4", std::move(setup), std::move(bundles)};
}

Collection builtin_collection(const std::string& name) {
  if (name == "cayley27") return cayley27();
  if (name == "kapranovQ7") return kapranov_q7();
  throw std::invalid_argument("unknown built-in collection '" + name + "'");
}

std::vector<std::string> builtin_collection_names() { return {"cayley27", "kapranovQ7"}; }

void validate_collection(const Collection& c) {
  if (c.bundles.empty()) throw std::invalid_argument("collection '" + c.name + "' is empty");
  for (const auto& w : c.bundles) require_bundle_weight(c.setup, w);
}

std::vector<ExtTable> ext_tables(const Collection& c, unsigned jobs) {
  validate_collection(c);
  const std::size_t n = c.bundles.size();
  std::vector<ExtTable> tables(n * n);
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n * n));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::string error_pair;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= n * n) return;
      try {
        tables[k] = ext_table(c.setup, c.bundles[k / n], c.bundles[k % n]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
          error_pair = "(" + std::to_string(k / n + 1) + "," + std::to_string(k % n + 1) + ")";
        }
        next.store(n * n);
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      throw Error("Ext computation failed at pair " + error_pair + ": " + e.what());
    }
  }
  return tables;
}

VerificationReport verify_strong_exceptional(const Collection& c, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.size = c.bundles.size();
  report.tables = ext_tables(c, jobs);

  const std::size_t n = report.size;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& table = report.table(i, j);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const BigInt& d = table[k].dim;
        const int degree = static_cast<int>(k);
        if (i == j) {
          if (k == 0 && d != 1)
            report.violations.push_back({i, j, degree, d, "End(E_i) must be one-dimensional"});
          else if (k > 0 && d != 0)
            report.violations.push_back({i, j, degree, d, "Ext^k(E_i,E_i) must vanish for k>0"});
        } else if (i < j) {
          if (k > 0 && d != 0)
            report.violations.push_back({i, j, degree, d, "Ext^k(E_i,E_j) must vanish for k>0, i<j"});
        } else if (d != 0) {
          report.violations.push_back({i, j, degree, d, "Ext^k(E_i,E_j) must vanish for all k, i>j"});
        }
      }
    }
  }
  report.pass = report.violations.empty();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::vector<BigInt>> hom_matrix(const VerificationReport& report) {
  std::vector<std::vector<BigInt>> out(report.size, std::vector<BigInt>(report.size));
  for (std::size_t i = 0; i < report.size; ++i)
    for (std::size_t j = 0; j < report.size; ++j) out[i][j] = report.table(i, j).at(0).dim;
  return out;
}

std::vector<std::vector<BigInt>> hom_matrix(const Collection& c, unsigned jobs) {
  VerificationReport r;
  r.size = c.bundles.size();
  r.tables = ext_tables(c, jobs);
  return hom_matrix(r);
}

}  // namespace bott
