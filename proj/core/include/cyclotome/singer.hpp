#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclotome/poly.hpp"
#include "cyclotome/residue_set.hpp"

namespace cyclotome {

/// Parameters (v, k, lambda) of the Singer difference set of PG(n-1, q).
struct SingerParams {
  std::uint64_t q = 0;
  unsigned n = 0;
  Residue v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;

  /// Throws OutOfRange when q^n overflows, InvalidParams for q < 2 or n < 2.
  static SingerParams of(std::uint64_t q, unsigned n);
};

/// First `length` terms of gamma_r = -sum_i a_i gamma_{r-i} for
/// f = x^n + a_1 x^(n-1) + ... + a_n, started from (0, ..., 0, 1).
std::vector<Elem> singer_sequence(const PolyGF& f, std::size_t length);

/// Zero positions of the recurrence over one period (q^n-1)/(q-1).
/// Throws NotPrimitive unless f is primitive of degree n >= 2.
ResidueSet singer_ds(const PolyGF& f);

ResidueSet translate(const ResidueSet& s, std::int64_t t);

/// True iff every nonzero residue occurs exactly `lambda` times as x - y.
bool verify_difference_set(const ResidueSet& s, std::uint64_t lambda);

/// Translates t + s containing every point in `pts`, ordered by t.
std::vector<ResidueSet> blocks_through(const ResidueSet& s, std::span<const Residue> pts);

/// Some t with t + b == a, if one exists.
std::optional<Residue> translate_offset(const ResidueSet& a, const ResidueSet& b);

}  // namespace cyclotome
