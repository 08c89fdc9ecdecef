#include "cyclotome/verify.hpp"

#include <set>
#include <string>
#include <utility>

#include "cyclotome/number_theory.hpp"

namespace cyclotome {

CheckReport compare_with_oracle(const CycloTable& table, const Oracle& oracle) {
  CheckReport r;
  const auto want = oracle.table(table.order);
  std::set<std::pair<Residue, Residue>> keys;
  for (const auto& [ij, c] : table.entries) keys.insert({ij.i, ij.j});
  for (const auto& [ij, c] : want) keys.insert(ij);
  for (const auto& [i, j] : keys) {
    const auto got = table.at(i, j);
    const auto it = want.find({i, j});
    const auto w = it == want.end() ? 0 : it->second;
    if (got != w) r.mismatches.push_back({i, j, got, w});
  }
  r.checks = table.order * table.order;
  return r;
}

CheckReport check_storer(const CycloTable& t, std::uint64_t p) {
  CheckReport r;
  const Residue m = t.order;
  const bool symmetric = p == 2 || t.f % 2 == 0;
  auto fail = [&](const std::string& what, Residue i, Residue j) {
    r.failures.push_back(what + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  };
  for (const auto& [ij, c] : t.entries) {
    const Residue i = ij.i, j = ij.j;
    ++r.checks;
    if (t.at((m - i) % m, (j + m - i) % m) != c) fail("reflection", i, j);
    ++r.checks;
    if (t.at(mulmod(i, p, m), mulmod(j, p, m)) != c) fail("frobenius", i, j);
    if (symmetric) {
      ++r.checks;
      if (t.at(j, i) != c) fail("symmetry", i, j);
    }
  }
  for (Residue j = 0; j < m; ++j) {
    ++r.checks;
    const std::uint64_t want = t.f - (j == 0 ? 1 : 0);
    if (t.column_sum(j) != want) fail("column sum " + std::to_string(t.column_sum(j)), 0, j);
  }
  return r;
}

}  // namespace cyclotome
