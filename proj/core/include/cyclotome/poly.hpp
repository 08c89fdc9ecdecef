#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotome/field.hpp"

namespace cyclotome {

/// Polynomial with coefficients in a FieldCtx, low degree first. The
/// coefficient vector is kept trimmed: the zero polynomial is empty.
class PolyGF {
 public:
  PolyGF() = default;
  PolyGF(FieldPtr base, std::vector<Elem> coeffs);

  static PolyGF monomial(FieldPtr base, unsigned degree, Elem c = 1);

  const FieldPtr& base() const noexcept { return base_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Elem eval(Elem x) const;

  friend bool operator==(const PolyGF& a, const PolyGF& b) {
    return a.coeffs_ == b.coeffs_ && a.base_ == b.base_;
  }

 private:
  void trim();

  FieldPtr base_;
  std::vector<Elem> coeffs_;
};

PolyGF operator+(const PolyGF& a, const PolyGF& b);
PolyGF operator-(const PolyGF& a, const PolyGF& b);
PolyGF operator*(const PolyGF& a, const PolyGF& b);

struct DivMod {
  PolyGF quot;
  PolyGF rem;
};
DivMod divmod(const PolyGF& a, const PolyGF& b);
PolyGF operator%(const PolyGF& a, const PolyGF& b);

PolyGF make_monic(const PolyGF& a);
/// Monic gcd (zero when both inputs are zero).
PolyGF gcd(const PolyGF& a, const PolyGF& b);
PolyGF mulmod(const PolyGF& a, const PolyGF& b, const PolyGF& f);
PolyGF powmod(const PolyGF& a, std::uint64_t e, const PolyGF& f);

/// Rabin's test: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/l)) - x, f) = 1 for every prime l | n.
bool is_irreducible(const PolyGF& f);

/// True iff f is irreducible over its base GF(q) and x has multiplicative
/// order q^n - 1 modulo f. Throws NotMonic, and DegreeMismatch when f has
/// degree < 1 or differs from `expected_degree`.
bool is_primitive_poly(const PolyGF& f, std::optional<unsigned> expected_degree = std::nullopt);

/// "1,0,2,1" <-> x^3 + 2x^2 + 1: encoded coefficients, low degree first.
PolyGF parse_poly(FieldPtr base, std::string_view text);
std::string format_poly(const PolyGF& f);
/// Human-readable form, e.g. "x^3 + 2x^2 + 1" (coefficients as codes).
std::string pretty_poly(const PolyGF& f);

/// GF(q^n) presented as GF(q)[x]/(f) for an irreducible f over GF(q).
/// Elements are PolyGF residues of degree < n.
class ExtensionField {
 public:
  explicit ExtensionField(PolyGF modulus);

  const FieldPtr& base() const noexcept { return modulus_.base(); }
  const PolyGF& modulus() const noexcept { return modulus_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.degree()); }
  std::uint64_t order() const noexcept { return order_; }

  PolyGF x() const { return PolyGF::monomial(base(), 1); }
  PolyGF mul(const PolyGF& a, const PolyGF& b) const { return mulmod(a, b, modulus_); }
  PolyGF pow(const PolyGF& a, std::uint64_t e) const { return powmod(a, e, modulus_); }
  /// x^t, i.e. alpha^t when the modulus is primitive.
  PolyGF power_of_x(std::uint64_t t) const { return powmod(x(), t, modulus_); }

  /// Coordinates over GF(q) in the basis 1, x, ..., x^(n-1).
  std::vector<Elem> coords(const PolyGF& a) const;

 private:
  PolyGF modulus_;
  std::uint64_t order_;
};

/// Monic minimal polynomial over GF(q) of x^t in `big`, found as the first
/// GF(q)-linear dependency among 1, x^t, x^(2t), ... Requires 0 < t < q^n - 1.
PolyGF minimal_poly_of_power(const ExtensionField& big, std::uint64_t t);

}  // namespace cyclotome
