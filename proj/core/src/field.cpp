#include "cyclotome/field.hpp"

#include <algorithm>
#include <string>

#include "cyclotome/conway.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"
#include "cyclotome/poly.hpp"

namespace cyclotome {

namespace {

bool has_full_order(const FieldCtx& f, Elem a, const std::vector<std::uint64_t>& primes) {
  if (a == 0) return false;
  const std::uint64_t n = f.order() - 1;
  if (f.pow(a, n) != 1) return false;
  return std::all_of(primes.begin(), primes.end(),
                     [&](std::uint64_t l) { return f.pow(a, n / l) != 1; });
}

}  // namespace

FieldPtr field_new(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus,
                   std::uint64_t table_budget) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
  const auto order = checked_pow(p, m);
  if (!order) throw Error(ErrorCode::OutOfRange, "field order exceeds 2^63");

  if (!modulus) {
    if (m == 1) {
      modulus = std::vector<std::uint64_t>{(p - least_primitive_root(p)) % p, 1};
    } else {
      modulus = conway_polynomial(p, m);
      if (!modulus) {
        throw Error(ErrorCode::NoDefaultModulus, "no bundled modulus for GF(" + std::to_string(p) +
                                                     "^" + std::to_string(m) + ")");
      }
    }
  }
  auto& mod = *modulus;
  while (mod.size() > 1 && mod.back() == 0) mod.pop_back();
  if (mod.size() != m + 1) {
    throw Error(ErrorCode::DegreeMismatch, "modulus must have degree " + std::to_string(m));
  }
  for (auto c : mod) {
    if (c >= p) throw Error(ErrorCode::OutOfRange, "modulus coefficient out of range");
  }
  if (mod.back() != 1) throw Error(ErrorCode::NotMonic, "modulus must be monic");

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->m_ = m;
  ctx->order_ = *order;
  ctx->modulus_ = mod;

  if (m > 1) {
    auto prime_field = field_new(p, 1, std::nullopt, table_budget);
    std::vector<Elem> coeffs(mod.begin(), mod.end());
    if (!is_irreducible(PolyGF(prime_field, std::move(coeffs)))) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" +
                                                   std::to_string(p) + ")");
    }
  }

  const Elem x = (m == 1) ? (p - mod[0]) % p : p;
  const auto primes = prime_divisors(std::max<std::uint64_t>(ctx->order_ - 1, 1));
  ctx->modulus_primitive_ = has_full_order(*ctx, x, primes);
  if (ctx->modulus_primitive_) {
    ctx->primitive_ = x;
  } else {
    Elem g = 1;
    while (!has_full_order(*ctx, g, primes)) ++g;
    ctx->primitive_ = g;
  }
  if (ctx->order_ <= table_budget) ctx->build_tables();
  return ctx;
}

void FieldCtx::build_tables() {
  const std::uint64_t n = order_ - 1;
  exp_.resize(n);
  log_.assign(order_, 0);
  const bool by_shift = modulus_primitive_ && m_ > 1;
  Elem cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    if (by_shift) {
      // Multiply by x: shift digits up one place and fold the overflow back.
      auto d = decode(cur);
      const std::uint64_t top = d.back();
      for (unsigned k = m_ - 1; k > 0; --k) d[k] = d[k - 1];
      d[0] = 0;
      if (top != 0) {
        for (unsigned k = 0; k < m_; ++k) d[k] = (d[k] + (p_ - top) * modulus_[k] % p_) % p_;
      }
      cur = encode(d);
    } else {
      cur = mul_slow(cur, primitive_);
    }
  }
}

Elem FieldCtx::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem out = 0, place = 1;
  for (unsigned k = 0; k < m_; ++k) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem FieldCtx::neg(Elem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, place = 1;
  for (unsigned k = 0; k < m_; ++k) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return mulmod(a, b, p_);
  if (has_tables()) {
    const std::uint64_t n = order_ - 1;
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    if (s >= n) s -= n;
    return exp_[s];
  }
  return mul_slow(a, b);
}

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
  if (m_ == 1) return mulmod(a, b, p_);
  const auto da = decode(a);
  const auto db = decode(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
    }
  }
  for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned t = 0; t < m_; ++t) {
      prod[k - m_ + t] = (prod[k - m_ + t] + (p_ - mulmod(c, modulus_[t], p_))) % p_;
    }
  }
  prod.resize(m_);
  return encode(prod);
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse");
  const std::uint64_t n = order_ - 1;
  if (has_tables()) return exp_[(n - log_[a]) % n];
  return pow(a, n - 1);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t n = order_ - 1;
  e %= n;
  if (has_tables()) return exp_[mulmod(log_[a], e, n)];
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldCtx::log(Elem a) const {
  if (!has_tables()) {
    throw Error(ErrorCode::TableUnavailable,
                "GF(" + std::to_string(order_) + ") exceeds the log-table budget");
  }
  if (a == 0 || a >= order_) throw Error(ErrorCode::OutOfRange, "log of zero or invalid element");
  return log_[a];
}

Elem FieldCtx::exp(std::uint64_t i) const {
  const std::uint64_t n = order_ - 1;
  if (has_tables()) return exp_[i % n];
  return pow(primitive_, i);
}

std::vector<std::uint64_t> FieldCtx::decode(Elem a) const {
  std::vector<std::uint64_t> d(m_);
  if (m_ == 1) {
    d[0] = a;
    return d;
  }
  for (unsigned k = 0; k < m_; ++k) {
    d[k] = a % p_;
    a /= p_;
  }
  return d;
}

Elem FieldCtx::encode(std::span<const std::uint64_t> digits) const {
  Elem out = 0, place = 1;
  for (std::size_t k = 0; k < digits.size() && k < m_; ++k) {
    out += (digits[k] % p_) * place;
    place *= p_;
  }
  return out;
}

Elem arith(const FieldCtx& ctx, ArithOp op, Elem a, std::uint64_t b) {
  if (!ctx.contains(a)) throw Error(ErrorCode::OutOfRange, "element code out of range");
  if (op != ArithOp::pow && op != ArithOp::inv && !ctx.contains(b)) {
    throw Error(ErrorCode::OutOfRange, "element code out of range");
  }
  switch (op) {
    case ArithOp::add: return ctx.add(a, b);
    case ArithOp::sub: return ctx.sub(a, b);
    case ArithOp::mul: return ctx.mul(a, b);
    case ArithOp::inv: return ctx.inv(a);
    case ArithOp::pow: return ctx.pow(a, b);
  }
  throw Error(ErrorCode::InvalidParams, "unknown arithmetic operation");
}

}  // namespace cyclotome
