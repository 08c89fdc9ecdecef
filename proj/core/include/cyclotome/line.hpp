#pragma once

#include <optional>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/residue_set.hpp"

namespace cyclotome {

/// S_k: the exponents j (mod e) with alpha^j in Span_GF(q)(1, alpha^k),
/// i.e. the projective line through points 0 and k. Always q+1 residues
/// containing 0 and k. Results are memoized in the context.
///
/// Dispatch: n = 2 gives all of Z_e; alpha^k in a proper subfield GF(q^d)
/// goes through line_subfield with the least such d; everything else goes
/// through line_general. Throws KOutOfRange unless 1 <= k < e.
ResidueSet line_set(const CycloCtx& ctx, Residue k);

/// Least d with 1 < d < n, d | n and g_d | k, if any.
std::optional<unsigned> subfield_degree(const CycloCtx& ctx, Residue k);

struct GeneralLine {
  ResidueSet intersection;  // L, the meet of the n-2 translates -ik + I
  Residue shift = 0;        // the unique x with x, x+k in L
  ResidueSet line;          // -x + L
};

/// Intersection route, for alpha^k outside every proper subfield (n >= 3).
/// Throws DegenerateIntersection if |L| != q+1 or the difference k does not
/// occur exactly once inside L.
GeneralLine line_general_traced(const CycloCtx& ctx, Residue k);
ResidueSet line_general(const CycloCtx& ctx, Residue k);

/// Subfield route: k = x * g_d, S_k = g_d * S'_x computed in GF(q^d).
ResidueSet line_subfield(const CycloCtx& ctx, Residue k, unsigned d);

/// S_{i,j}: the line through points i and j, equal to j + S_{i-j}.
/// Throws EqualIndices for i == j, IndexOutOfRange unless both are < e.
ResidueSet line_pair(const CycloCtx& ctx, Residue i, Residue j);

}  // namespace cyclotome
