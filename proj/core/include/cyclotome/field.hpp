#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cyclotome {

/// Encoded field element: the integer whose base-p digits are the element's
/// polynomial coefficients, constant term least significant.
using Elem = std::uint64_t;

/// log/exp tables are built only for fields of at most this many elements.
inline constexpr std::uint64_t kTableBudget = std::uint64_t{1} << 24;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// GF(p^m) presented as GF(p)[x]/(modulus). Immutable once built.
class FieldCtx {
 public:
  std::uint64_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return order_; }

  /// Monic modulus over GF(p), m+1 coefficients, low degree first.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  bool modulus_is_primitive() const noexcept { return modulus_primitive_; }

  /// Smallest-code generator of the multiplicative group, or x itself when
  /// the modulus is primitive.
  Elem primitive_element() const noexcept { return primitive_; }

  bool has_tables() const noexcept { return !exp_.empty(); }

  bool contains(Elem a) const noexcept { return a < order_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Discrete log to base primitive_element(). Throws TableUnavailable when
  /// the field exceeds the table budget, ZeroInverse for 0.
  std::uint64_t log(Elem a) const;
  /// primitive_element()^i.
  Elem exp(std::uint64_t i) const;

  std::vector<std::uint64_t> decode(Elem a) const;
  Elem encode(std::span<const std::uint64_t> digits) const;

 private:
  friend FieldPtr field_new(std::uint64_t, unsigned, std::optional<std::vector<std::uint64_t>>,
                            std::uint64_t);
  FieldCtx() = default;

  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> modulus_;
  bool modulus_primitive_ = false;
  Elem primitive_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Builds GF(p^m). Without a modulus the bundled Conway polynomial is used
/// (m == 1 falls back to x - g, g the least primitive root, for any prime).
/// Errors: NonPrimeCharacteristic, ReducibleModulus, NoDefaultModulus,
/// NotMonic / DegreeMismatch for a malformed modulus, OutOfRange when p^m
/// exceeds 2^63.
FieldPtr field_new(std::uint64_t p, unsigned m,
                   std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                   std::uint64_t table_budget = kTableBudget);

enum class ArithOp { add, sub, mul, inv, pow };

/// Checked entry point: validates operands, then dispatches. For pow, `b`
/// is the exponent; for inv it is ignored.
Elem arith(const FieldCtx& ctx, ArithOp op, Elem a, std::uint64_t b = 0);

}  // namespace cyclotome
