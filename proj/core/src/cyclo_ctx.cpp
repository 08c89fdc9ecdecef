#include "cyclotome/cyclo_ctx.hpp"

#include <string>

#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

PolyGF default_primitive_poly(const FieldPtr& base, unsigned n) {
  const std::uint64_t p = base->p();
  const unsigned s = base->m();
  const std::uint64_t q = base->order();
  if (s > 1 && !base->modulus_is_primitive()) {
    throw Error(ErrorCode::NoDefaultModulus, "base field has no primitive modulus");
  }
  auto big = field_new(p, s * n);  // Conway modulus, so alpha = x is primitive
  if (!big->has_tables()) throw Error(ErrorCode::TableUnavailable, "field too large for default");
  const std::uint64_t big_order = big->order();
  const std::uint64_t g = (big_order - 1) / (q - 1);

  // prod_{i<n} (X - alpha^(q^i)) over GF(q^n); its coefficients lie in GF(q).
  const Elem alpha = big->primitive_element();
  std::vector<Elem> prod{1};
  Elem root = alpha;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Elem> next(prod.size() + 1, 0);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] = big->add(next[k + 1], prod[k]);
      next[k] = big->sub(next[k], big->mul(prod[k], root));
    }
    prod = std::move(next);
    root = big->pow(root, q);
  }
  // alpha^g is the Conway root of the subfield, i.e. the generator of base.
  std::vector<Elem> coeffs(prod.size(), 0);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const std::uint64_t t = big->log(prod[k]);
    if (t % g != 0) throw Error(ErrorCode::InvalidParams, "coefficient outside the subfield");
    coeffs[k] = base->exp(t / g);
  }
  return PolyGF(base, std::move(coeffs));
}

CycloPtr CycloCtx::create(std::uint64_t q, unsigned n, Options opts) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "extension degree must be >= 2");
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (opts.prim_poly) {
    const auto& b = opts.prim_poly->base();
    if (!b || b->order() != q) throw Error(ErrorCode::FieldMismatch, "polynomial is not over GF(q)");
    if (opts.prim_poly->degree() != static_cast<int>(n)) {
      throw Error(ErrorCode::DegreeMismatch, "polynomial must have degree " + std::to_string(n));
    }
    return build(std::move(*opts.prim_poly), std::move(opts.singer_set));
  }
  auto base = field_new(pp->p, pp->s);
  return build(default_primitive_poly(base, n), std::move(opts.singer_set));
}

CycloPtr CycloCtx::create(PolyGF prim_poly, std::optional<ResidueSet> singer_set) {
  return build(std::move(prim_poly), std::move(singer_set));
}

CycloPtr CycloCtx::build(PolyGF prim_poly, std::optional<ResidueSet> singer_set) {
  if (prim_poly.degree() < 2) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 2");
  auto ctx = std::shared_ptr<CycloCtx>(new CycloCtx());
  ctx->base_ = prim_poly.base();
  ctx->params_ = SingerParams::of(ctx->base_->order(), static_cast<unsigned>(prim_poly.degree()));
  ctx->ds_ = singer_ds(prim_poly);  // throws NotPrimitive
  ctx->prim_poly_ = std::move(prim_poly);
  if (singer_set) {
    if (!translate_offset(*singer_set, ctx->ds_)) {
      throw Error(ErrorCode::InvalidDifferenceSet,
                  "supplied set is not a translate of the Singer set for this polynomial");
    }
    ctx->ds_ = std::move(*singer_set);
  }
  ctx->ds_mask_.assign(ctx->params_.v, false);
  for (auto r : ctx->ds_) ctx->ds_mask_[r] = true;
  return ctx;
}

Residue CycloCtx::subfield_index(unsigned d) const {
  if (d == 0 || n() % d != 0) throw Error(ErrorCode::InvalidParams, "degree must divide n");
  const std::uint64_t qd = *checked_pow(q(), d);
  return (field_order() - 1) / (qd - 1);
}

CycloPtr CycloCtx::subfield(unsigned d) const {
  if (d <= 1 || d >= n() || n() % d != 0) {
    throw Error(ErrorCode::InvalidParams, "subfield degree must be a proper divisor > 1 of n");
  }
  std::lock_guard lock(sub_mutex_);
  if (auto it = subfields_.find(d); it != subfields_.end()) return it->second;
  ExtensionField big(prim_poly_);
  auto sub = build(minimal_poly_of_power(big, subfield_index(d)), std::nullopt);
  subfields_.emplace(d, sub);
  return sub;
}

std::optional<ResidueSet> CycloCtx::cached_line(Residue k) const {
  std::shared_lock lock(line_mutex_);
  if (auto it = lines_.find(k); it != lines_.end()) return it->second;
  return std::nullopt;
}

void CycloCtx::cache_line(Residue k, const ResidueSet& s) const {
  std::unique_lock lock(line_mutex_);
  lines_.try_emplace(k, s);
}

}  // namespace cyclotome
