#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/residue_set.hpp"

namespace cyclotome {

struct IndexPair {
  Residue i = 0;
  Residue j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Orders entries by j, then i.
struct ByColumn {
  bool operator()(const IndexPair& a, const IndexPair& b) const {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  }
};

/// Sparse table of cyclotomic numbers (i,j)_order; absent keys are zero.
struct CycloTable {
  std::uint64_t q = 0;
  unsigned n = 0;
  Residue order = 0;
  std::uint64_t f = 0;  // (q^n - 1) / order
  std::map<IndexPair, std::uint64_t, ByColumn> entries;

  std::uint64_t at(Residue i, Residue j) const;
  /// sum_i (i,j)
  std::uint64_t column_sum(Residue j) const;
  friend bool operator==(const CycloTable&, const CycloTable&) = default;
};

/// Multiset of cyclotomic classes of order e.
struct ClassMultiset {
  Residue modulus = 0;
  std::map<Residue, std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const ClassMultiset&, const ClassMultiset&) = default;
};

/// (i,j)_e for e = (q^n-1)/(q-1): f-1 at (0,0); 0 on the axes and the
/// diagonal; otherwise 1 exactly when i lies on S_j.
std::uint64_t cyclo_full(const CycloCtx& ctx, Residue i, Residue j);

/// The classes of Delta(C_i, C_j) = {x - y : x in C_i, y in C_j} (x != y
/// when i == j), with multiplicity.
ClassMultiset delta_decomposition(const CycloCtx& ctx, Residue i, Residue j);

/// (i,j)_eps for a divisor eps >= 2 of e, summed from order-e values over
/// the classes C_r^e with r = i mod eps. Throws NotADivisor, IndexOutOfRange.
std::uint64_t cyclo_divisor(const CycloCtx& ctx, Residue eps, Residue i, Residue j);

/// Order-eps numbers over GF(q^2) for eps | q+1, in closed form.
std::uint64_t uniform_closed_form(std::uint64_t q, Residue eps, Residue i, Residue j);

/// Whether order-e numbers over GF(p^(2s)) are uniform: some t | s has
/// e | p^t + 1. Throws InvalidParams unless p prime, s >= 1, e >= 3 and
/// e | p^(2s) - 1.
bool is_uniform_order(std::uint64_t p, unsigned s, std::uint64_t e);

/// Data for the classical uniform-cyclotomy formulas over GF(r^2).
struct UniformParams {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t e = 0;
  std::int64_t r = 0;    // +-p^s with r = 1 mod e
  std::int64_t eta = 0;  // (r - 1) / e
};

/// nullopt when neither sign of p^s is 1 mod e. Same preconditions as
/// is_uniform_order.
std::optional<UniformParams> uniform_params(std::uint64_t p, unsigned s, std::uint64_t e);

/// (0,0) = eta^2 - (e-3) eta - 1, (i,0) = (0,i) = (i,i) = eta^2 + eta,
/// (i,j) = eta^2 otherwise.
std::int64_t uniform_value(const UniformParams& u, Residue i, Residue j);

struct StorerOrbit {
  IndexPair canonical;            // lexicographically least by (i, j)
  std::vector<IndexPair> orbit;   // sorted by (i, j)
};

/// Orbit of (i,j) under (i,j) -> (-i, j-i), (i,j) -> (p i, p j) and, when
/// p = 2 or f_order is even, (i,j) -> (j,i). Indices are reduced mod order.
StorerOrbit storer_reduce(Residue order, std::uint64_t p, std::uint64_t f_order, Residue i, Residue j);

/// Every nonzero (i,j)_eps for eps | e (eps = e allowed).
CycloTable cyclo_table(const CycloCtx& ctx, Residue eps);

/// Visits (k, S_k) for every 1 <= k < e. Each Frobenius orbit k, pk, p^2 k,
/// ... is resolved once and the rest follow from S_{pk} = p S_k.
void for_each_line(const CycloCtx& ctx, const std::function<void(Residue, const ResidueSet&)>& visit);

}  // namespace cyclotome
