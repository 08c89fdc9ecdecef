#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/residue_set.hpp"

namespace cyclotome {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Field-size ceiling for brute force. CYCLOTOME_ORACLE_BUDGET overrides
/// the default when set to a positive integer.
std::uint64_t oracle_budget();

/// Brute-force reference for cyclotomic numbers and line sets.
///
/// Elements of GF(q^n) are packed as sum c_i q^i over their coordinates in
/// the basis 1, alpha, ..., alpha^(n-1). A full discrete-log table is built
/// by walking the powers of alpha, so nothing here depends on Singer sets,
/// lines or the evaluation formulas.
class Oracle {
 public:
  /// Throws OracleBudgetExceeded when q^n > oracle_budget().
  explicit Oracle(const CycloCtx& ctx);

  std::uint64_t field_order() const noexcept { return order_; }
  /// Discrete log of a packed nonzero element.
  std::uint64_t log(std::uint64_t packed) const { return log_[packed]; }
  std::uint64_t pack_power(std::uint64_t t) const { return exp_[t % (order_ - 1)]; }

  /// (i,j)_m counted straight from the definition. m must divide q^n - 1.
  std::uint64_t cyclo(std::uint64_t m, std::uint64_t i, std::uint64_t j) const;
  /// Every nonzero (i,j)_m, keyed by (i, j).
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> table(std::uint64_t m) const;
  /// {log(a + b alpha^k) mod e : (a, b) != (0, 0)}.
  ResidueSet line(Residue k) const;

 private:
  std::uint64_t minus_one(std::uint64_t packed) const;
  void check_order(std::uint64_t m) const;

  FieldPtr base_;
  std::uint64_t q_ = 0;
  unsigned n_ = 0;
  std::uint64_t order_ = 0;
  Residue e_ = 0;
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> exp_;
};

std::uint64_t oracle_cyclo(const CycloCtx& ctx, std::uint64_t m, std::uint64_t i, std::uint64_t j);
ResidueSet oracle_Sk(const CycloCtx& ctx, Residue k);

}  // namespace cyclotome
