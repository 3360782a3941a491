#pragma once

#include "bott/bbw.hpp"

#include <string>
#include <vector>

namespace bott {

/// An ordered list of irreducible homogeneous bundles on one G/P.
struct Collection {
  std::string name;
  std::string preset;  ///< preset name, empty when built from an explicit Cartan matrix
  ParabolicSetup setup;
  std::vector<Weight> bundles;
};

/// (S_2^*, S^*, O)(t) for t = 0,1,2 then (S^*, O)(t) for t = 3..11 on E6/P1.
Collection cayley27();
/// O(5), O(6), Sigma(6), O(7), ..., O(11) on the 7-dimensional quadric B4/P1.
Collection kapranov_q7();
/// "cayley27" or "kapranovQ7".
Collection builtin_collection(const std::string& name);
std::vector<std::string> builtin_collection_names();

void validate_collection(const Collection& c);

struct Violation {
  std::size_t row = 0;  ///< 0-based
  std::size_t col = 0;
  int degree = 0;
  BigInt dim;
  std::string rule;
};

struct VerificationReport {
  std::size_t size = 0;
  std::vector<ExtTable> tables;  ///< row-major, tables[i * size + j] = Ext^*(E_i, E_j)
  std::vector<Violation> violations;
  bool pass = false;
  double seconds = 0.0;

  const ExtTable& table(std::size_t i, std::size_t j) const { return tables.at(i * size + j); }
};

/// All |c|^2 Ext tables, computed on `jobs` threads (0 = hardware concurrency).
std::vector<ExtTable> ext_tables(const Collection& c, unsigned jobs = 0);

/// Strong exceptionality: Ext^*(E_i,E_i) = C in degree 0; Ext^{>0}(E_i,E_j) = 0
/// for i < j; Ext^*(E_i,E_j) = 0 for i > j. Violations are collected exhaustively.
VerificationReport verify_strong_exceptional(const Collection& c, unsigned jobs = 0);

/// Ext^0 dimensions.
std::vector<std::vector<BigInt>> hom_matrix(const Collection& c, unsigned jobs = 0);
std::vector<std::vector<BigInt>> hom_matrix(const VerificationReport& report);

}  // namespace bott
