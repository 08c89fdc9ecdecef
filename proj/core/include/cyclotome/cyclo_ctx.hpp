#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "cyclotome/field.hpp"
#include "cyclotome/poly.hpp"
#include "cyclotome/residue_set.hpp"
#include "cyclotome/singer.hpp"

namespace cyclotome {

class CycloCtx;
using CycloPtr = std::shared_ptr<const CycloCtx>;

/// GF(q^n) over GF(q) with a fixed primitive element alpha (a root of
/// prim_poly), e = (q^n-1)/(q-1) projective points and f = q-1 scalars.
///
/// Immutable apart from two internal caches (line sets keyed by k, and
/// subfield contexts keyed by degree). Both are guarded so any number of
/// threads may query one context concurrently.
class CycloCtx {
 public:
  struct Options {
    /// Degree-n primitive polynomial over GF(q). Defaults to the minimal
    /// polynomial over GF(q) of the Conway root of C(p, s*n).
    std::optional<PolyGF> prim_poly;
    /// Alternative Singer set for the same alpha; must be a translate of
    /// the recurrence output.
    std::optional<ResidueSet> singer_set;
  };

  /// Throws NotPrimePower, NoDefaultModulus, NotPrimitive, DegreeMismatch,
  /// InvalidDifferenceSet.
  static CycloPtr create(std::uint64_t q, unsigned n, Options opts = {});
  /// Base field taken from the polynomial.
  static CycloPtr create(PolyGF prim_poly, std::optional<ResidueSet> singer_set = std::nullopt);

  std::uint64_t q() const noexcept { return params_.q; }
  std::uint64_t p() const noexcept { return base_->p(); }
  unsigned n() const noexcept { return params_.n; }
  Residue e() const noexcept { return params_.v; }
  std::uint64_t f() const noexcept { return params_.q - 1; }
  /// q^n
  std::uint64_t field_order() const noexcept { return params_.v * (params_.q - 1) + 1; }
  const SingerParams& params() const noexcept { return params_; }

  const FieldPtr& base() const noexcept { return base_; }
  const PolyGF& prim_poly() const noexcept { return prim_poly_; }
  const ResidueSet& ds() const noexcept { return ds_; }
  bool in_ds(Residue r) const noexcept { return ds_mask_[r]; }

  /// g_d = (q^n-1)/(q^d-1) for d | n.
  Residue subfield_index(unsigned d) const;
  /// Context for GF(q^d) over GF(q) whose primitive element is alpha^g_d.
  /// Built on first use. Requires 1 < d < n, d | n.
  CycloPtr subfield(unsigned d) const;

  std::optional<ResidueSet> cached_line(Residue k) const;
  void cache_line(Residue k, const ResidueSet& s) const;

 private:
  CycloCtx() = default;
  static CycloPtr build(PolyGF prim_poly, std::optional<ResidueSet> singer_set);

  SingerParams params_;
  FieldPtr base_;
  PolyGF prim_poly_;
  ResidueSet ds_;
  std::vector<bool> ds_mask_;

  mutable std::shared_mutex line_mutex_;
  mutable std::unordered_map<Residue, ResidueSet> lines_;
  mutable std::mutex sub_mutex_;
  mutable std::map<unsigned, CycloPtr> subfields_;
};

/// Minimal polynomial over GF(q) = GF(p^s) of the Conway root of C(p, s*n),
/// with coefficients encoded against the Conway presentation of GF(q).
/// Throws NoDefaultModulus outside the bundled table.
PolyGF default_primitive_poly(const FieldPtr& base, unsigned n);

}  // namespace cyclotome
