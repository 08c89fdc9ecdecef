#include "cyclotome/line.hpp"

#include <string>

#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

namespace {

void check_k(const CycloCtx& ctx, Residue k) {
  if (k == 0 || k >= ctx.e()) {
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(ctx.e() - 1) + "]");
  }
}

}  // namespace

std::optional<unsigned> subfield_degree(const CycloCtx& ctx, Residue k) {
  for (unsigned d = 2; d < ctx.n(); ++d) {
    if (ctx.n() % d == 0 && k % ctx.subfield_index(d) == 0) return d;
  }
  return std::nullopt;
}

ResidueSet line_set(const CycloCtx& ctx, Residue k) {
  check_k(ctx, k);
  if (ctx.n() == 2) return ResidueSet::full(ctx.e());
  if (auto hit = ctx.cached_line(k)) return *hit;
  ResidueSet s;
  if (auto d = subfield_degree(ctx, k)) {
    s = line_subfield(ctx, k, *d);
  } else {
    s = line_general(ctx, k);
  }
  ctx.cache_line(k, s);
  // Frobenius: S_{pk} = p S_k, so one resolution fills the whole orbit.
  const Residue e = ctx.e();
  const Residue p = ctx.p() % e;
  ResidueSet img = s;
  for (Residue j = mulmod(k, p, e); j != k; j = mulmod(j, p, e)) {
    img = img.scale(p, e);
    ctx.cache_line(j, img);
  }
  return s;
}

GeneralLine line_general_traced(const CycloCtx& ctx, Residue k) {
  check_k(ctx, k);
  if (ctx.n() < 3) throw Error(ErrorCode::InvalidParams, "intersection route needs n >= 3");
  const Residue e = ctx.e();
  const unsigned extra = ctx.n() - 3;  // translates beyond I itself

  // x is in -ik + I exactly when x + ik is in I.
  std::vector<Residue> meet;
  for (auto x : ctx.ds()) {
    bool keep = true;
    Residue shifted = x;
    for (unsigned i = 1; i <= extra && keep; ++i) {
      shifted += k;
      if (shifted >= e) shifted -= e;
      keep = ctx.in_ds(shifted);
    }
    if (keep) meet.push_back(x);
  }
  ResidueSet l(e, std::move(meet));
  if (l.size() != ctx.q() + 1) {
    throw Error(ErrorCode::DegenerateIntersection,
                "|L| = " + std::to_string(l.size()) + " for k = " + std::to_string(k) +
                    ", expected " + std::to_string(ctx.q() + 1));
  }
  std::optional<Residue> shift;
  for (auto x : l) {
    if (!l.contains((x + k) % e)) continue;
    if (shift) {
      throw Error(ErrorCode::DegenerateIntersection,
                  "difference " + std::to_string(k) + " occurs more than once in L");
    }
    shift = x;
  }
  if (!shift) {
    throw Error(ErrorCode::DegenerateIntersection,
                "difference " + std::to_string(k) + " does not occur in L");
  }
  auto line = l.translate(-static_cast<std::int64_t>(*shift));
  return GeneralLine{std::move(l), *shift, std::move(line)};
}

ResidueSet line_general(const CycloCtx& ctx, Residue k) { return line_general_traced(ctx, k).line; }

ResidueSet line_subfield(const CycloCtx& ctx, Residue k, unsigned d) {
  check_k(ctx, k);
  if (d <= 1 || d >= ctx.n() || ctx.n() % d != 0) {
    throw Error(ErrorCode::InvalidParams, "d must be a proper divisor of n greater than 1");
  }
  const Residue g = ctx.subfield_index(d);
  if (k % g != 0) {
    throw Error(ErrorCode::InvalidParams,
                std::to_string(k) + " is not a multiple of " + std::to_string(g));
  }
  const auto sub = ctx.subfield(d);
  auto s = line_set(*sub, k / g).scale(g, ctx.e());
  if (s.size() != ctx.q() + 1 || !s.contains(0) || !s.contains(k)) {
    throw Error(ErrorCode::IncompatibleSubfieldModulus,
                "subfield line does not pass through 0 and " + std::to_string(k));
  }
  return s;
}

ResidueSet line_pair(const CycloCtx& ctx, Residue i, Residue j) {
  if (i >= ctx.e() || j >= ctx.e()) throw Error(ErrorCode::IndexOutOfRange, "index not below e");
  if (i == j) throw Error(ErrorCode::EqualIndices, "a line needs two distinct points");
  const Residue k = (i + ctx.e() - j) % ctx.e();
  return line_set(ctx, k).translate(static_cast<std::int64_t>(j));
}

}  // namespace cyclotome
