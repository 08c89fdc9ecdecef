#include "cyclotome/conway.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <string>

#include "cyclotome/error.hpp"
#include "cyclotome/field.hpp"
#include "cyclotome/number_theory.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

namespace {

struct ConwayRecord {
  std::uint32_t p;
  std::uint8_t m;
  std::array<std::uint16_t, 16> c;  // c[0..m-1]; the x^m coefficient is 1
};

constexpr ConwayRecord kConwayTable[] = {
#include "conway_data.inc"
};

const ConwayRecord* find_record(std::uint64_t p, unsigned m) {
  auto it = std::lower_bound(std::begin(kConwayTable), std::end(kConwayTable), std::pair{p, m},
                             [](const ConwayRecord& r, const std::pair<std::uint64_t, unsigned>& key) {
                               return std::pair<std::uint64_t, unsigned>{r.p, r.m} < key;
                             });
  if (it == std::end(kConwayTable) || it->p != p || it->m != m) return nullptr;
  return &*it;
}

std::vector<std::uint64_t> search(std::uint64_t p, unsigned m,
                                  std::map<unsigned, std::vector<std::uint64_t>>& lower) {
  const std::uint64_t order = *checked_pow(p, m);
  auto gfp = field_new(p, 1);

  std::vector<unsigned> subdegrees;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    subdegrees.push_back(d);
    if (!lower.contains(d)) {
      if (auto known = conway_polynomial(p, d)) {
        lower[d] = *known;
      } else {
        lower[d] = search(p, d, lower);
      }
    }
  }

  std::vector<std::uint64_t> a(m, 0);  // a[i] pairs with x^i
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    // Conway order compares (a_{m-1}, ..., a_0) lexicographically, which is
    // numeric order of idx read with a_0 as the least significant digit.
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      a[i] = rest % p;
      rest /= p;
    }
    std::vector<Elem> coeffs(m + 1);
    for (unsigned i = 0; i < m; ++i) {
      coeffs[i] = ((m - i) % 2 == 0) ? a[i] : (p - a[i]) % p;
    }
    coeffs[m] = 1;
    if (coeffs[0] == 0) continue;
    PolyGF f(gfp, coeffs);
    if (!is_primitive_poly(f)) continue;

    bool compatible = true;
    for (unsigned d : subdegrees) {
      const std::uint64_t exponent = (order - 1) / (*checked_pow(p, d) - 1);
      const PolyGF h = powmod(PolyGF::monomial(gfp, 1), exponent, f);
      const auto& sub = lower[d];
      PolyGF acc(gfp, {});
      for (std::size_t k = sub.size(); k-- > 0;) {
        acc = mulmod(acc, h, f) + PolyGF(gfp, {sub[k]});
      }
      if (!(acc % f).is_zero()) {
        compatible = false;
        break;
      }
    }
    if (compatible) return std::vector<std::uint64_t>(coeffs.begin(), coeffs.end());
  }
  throw Error(ErrorCode::InvalidParams,
              "no Conway polynomial found for (" + std::to_string(p) + "," + std::to_string(m) + ")");
}

}  // namespace

std::optional<std::vector<std::uint64_t>> conway_polynomial(std::uint64_t p, unsigned m) {
  if (!is_prime(p) || m == 0) return std::nullopt;
  if (m == 1) {
    return std::vector<std::uint64_t>{(p - least_primitive_root(p)) % p, 1};
  }
  const auto* rec = find_record(p, m);
  if (!rec) return std::nullopt;
  std::vector<std::uint64_t> out(rec->c.begin(), rec->c.begin() + m);
  out.push_back(1);
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> bundled_conway_index() {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& r : kConwayTable) out.emplace_back(r.p, r.m);
  return out;
}

std::vector<std::uint64_t> conway_search(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::DegreeMismatch, "degree must be >= 1");
  if (!checked_pow(p, m)) throw Error(ErrorCode::OutOfRange, "p^m exceeds 2^63");
  std::map<unsigned, std::vector<std::uint64_t>> lower;
  return search(p, m, lower);
}

}  // namespace cyclotome
