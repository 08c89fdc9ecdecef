#pragma once

// Contexts for the worked fields used across the suites.

#include <string>
#include <vector>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/number_theory.hpp"
#include "cyclotome/poly.hpp"

namespace fixtures {

using namespace cyclotome;

inline FieldPtr gf(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  return field_new(pp->p, pp->s);
}

inline CycloPtr ctx(std::uint64_t q, const std::string& poly) { return CycloCtx::create(parse_poly(gf(q), poly)); }

// x^3 + 2x^2 + 1 over GF(3)
inline CycloPtr gf27() { return ctx(3, "1,0,2,1"); }
// x^3 + x^2 + x + g^2 over GF(4), g^2 = g + 1 encoded as 3
inline CycloPtr gf64() { return ctx(4, "3,1,1,1"); }
// x^4 + 2x^3 + 2 over GF(3)
inline CycloPtr gf81() { return ctx(3, "2,0,0,2,1"); }
// x^4 + 4x^2 + 4x + 2 over GF(5)
inline CycloPtr gf625() { return ctx(5, "2,4,4,0,1"); }
// x^6 + 2x^4 + x^3 + x^2 + x + 2 over GF(3)
inline CycloPtr gf729_over3() { return ctx(3, "2,1,1,1,2,0,1"); }
// x^3 + x + w over GF(9), w a root of y^2 + 2y + 2 (encoded 3)
inline CycloPtr gf729_over9() { return ctx(9, "3,1,0,1"); }

// x^5 + x^3 + 2x^2 + 2x + 1 over GF(3), with the tabulated Singer set that
// sits at offset +80 from the recurrence output.
inline const std::vector<Residue> kTabulated243 = {1,  3,  4,  7,  9,  11, 12,  13,  21,  25,  27,  33,  34, 36,
                                                  39, 44, 55, 63, 64, 67, 68,  70,  71,  75,  80,  81,  82, 83,
                                                  85, 89, 92, 99, 102, 103, 104, 108, 109, 115, 117, 119};
inline CycloPtr gf243() {
  return CycloCtx::create(parse_poly(gf(3), "1,2,2,1,0,1"), ResidueSet(121, kTabulated243));
}

inline ResidueSet rs(Residue v, std::vector<Residue> m) { return ResidueSet(v, std::move(m)); }

/// Every (q, n) with q^n <= bound, q a prime power, n >= 2.
inline std::vector<std::pair<std::uint64_t, unsigned>> sweep(std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= bound; ++q) {
    if (!as_prime_power(q)) continue;
    std::uint64_t qn = q * q;
    for (unsigned n = 2; qn <= bound; ++n, qn *= q) out.emplace_back(q, n);
  }
  return out;
}

}  // namespace fixtures
