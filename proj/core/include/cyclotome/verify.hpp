#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotome/cyclo_eval.hpp"
#include "cyclotome/oracle.hpp"

namespace cyclotome {

struct Mismatch {
  Residue i = 0;
  Residue j = 0;
  std::uint64_t got = 0;
  std::uint64_t want = 0;
};

struct CheckReport {
  std::uint64_t checks = 0;
  std::vector<Mismatch> mismatches;  // empty for identity checks
  std::vector<std::string> failures;
  bool ok() const { return mismatches.empty() && failures.empty(); }
};

/// Compares every (i,j) of `table` against the oracle's count. Both sides
/// are sparse, so only the union of their supports is walked; the report
/// still counts order^2 pairs.
CheckReport compare_with_oracle(const CycloTable& table, const Oracle& oracle);

/// Reflection, Frobenius, symmetry (when p = 2 or f even) and column sums
/// f - delta_{0j}. Each map is a bijection, so checking it over the nonzero
/// entries covers the zeros as well.
CheckReport check_storer(const CycloTable& table, std::uint64_t p);

}  // namespace cyclotome
