#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclotome {

/// Bundled data covers every p^m up to this order.
inline constexpr std::uint64_t kConwayBound = std::uint64_t{1} << 16;

/// Conway polynomial C(p,m) as m+1 coefficients over GF(p), low degree
/// first. m == 1 is computed for any prime; m >= 2 comes from the bundled
/// table and is nullopt outside it.
std::optional<std::vector<std::uint64_t>> conway_polynomial(std::uint64_t p, unsigned m);

/// Every (p, m), m >= 2, present in the bundled table.
std::vector<std::pair<std::uint64_t, unsigned>> bundled_conway_index();

/// Computes C(p,m) from its definition: the first primitive polynomial in
/// Conway order whose root r satisfies C(p,d)(r^((p^m-1)/(p^d-1))) = 0 for
/// every proper divisor d of m. Lower-degree polynomials are taken from the
/// bundled table when present and computed recursively otherwise.
std::vector<std::uint64_t> conway_search(std::uint64_t p, unsigned m);

}  // namespace cyclotome
