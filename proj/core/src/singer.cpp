#include "cyclotome/singer.hpp"

#include <algorithm>

#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

namespace {

constexpr Residue kScanLimit = 1'000'000;

bool contains_all(const ResidueSet& s, std::span<const Residue> pts) {
  return std::all_of(pts.begin(), pts.end(), [&](Residue r) { return s.contains(r); });
}

}  // namespace

SingerParams SingerParams::of(std::uint64_t q, unsigned n) {
  if (q < 2 || n < 2) throw Error(ErrorCode::InvalidParams, "need q >= 2 and n >= 2");
  const auto qn = checked_pow(q, n);
  if (!qn) throw Error(ErrorCode::OutOfRange, "q^n exceeds 2^63");
  SingerParams sp;
  sp.q = q;
  sp.n = n;
  sp.v = (*qn - 1) / (q - 1);
  sp.k = (*qn / q - 1) / (q - 1);
  sp.lambda = (*qn / q / q - 1) / (q - 1);
  return sp;
}

std::vector<Elem> singer_sequence(const PolyGF& f, std::size_t length) {
  if (f.degree() < 2) throw Error(ErrorCode::DegreeMismatch, "recurrence needs degree >= 2");
  const auto& field = *f.base();
  const auto n = static_cast<std::size_t>(f.degree());
  // minus_a[i-1] = -a_i, the multiplier of gamma_{r-i}
  std::vector<Elem> minus_a(n);
  for (std::size_t i = 1; i <= n; ++i) minus_a[i - 1] = field.neg(f.coeff(n - i));

  std::vector<Elem> seq(std::max(length, n), 0);
  seq[n - 1] = 1;
  for (std::size_t r = n; r < seq.size(); ++r) {
    Elem acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (minus_a[i - 1] != 0) acc = field.add(acc, field.mul(minus_a[i - 1], seq[r - i]));
    }
    seq[r] = acc;
  }
  seq.resize(length);
  return seq;
}

ResidueSet singer_ds(const PolyGF& f) {
  if (f.degree() < 2) throw Error(ErrorCode::DegreeMismatch, "Singer construction needs degree >= 2");
  if (!is_primitive_poly(f)) {
    throw Error(ErrorCode::NotPrimitive, pretty_poly(f) + " is not primitive");
  }
  const auto params = SingerParams::of(f.base()->order(), static_cast<unsigned>(f.degree()));
  const auto seq = singer_sequence(f, params.v);
  std::vector<Residue> zeros;
  zeros.reserve(params.k);
  for (Residue r = 0; r < params.v; ++r) {
    if (seq[r] == 0) zeros.push_back(r);
  }
  if (zeros.size() != params.k) {
    throw Error(ErrorCode::InvalidDifferenceSet, "recurrence produced " + std::to_string(zeros.size()) +
                                                     " zeros, expected " + std::to_string(params.k));
  }
  return ResidueSet(params.v, std::move(zeros));
}

ResidueSet translate(const ResidueSet& s, std::int64_t t) { return s.translate(t); }

bool verify_difference_set(const ResidueSet& s, std::uint64_t lambda) {
  const Residue v = s.modulus();
  std::vector<std::uint64_t> hits(v, 0);
  for (auto x : s) {
    for (auto y : s) {
      if (x != y) ++hits[(x + v - y) % v];
    }
  }
  return std::all_of(hits.begin() + 1, hits.end(), [&](std::uint64_t h) { return h == lambda; });
}

std::vector<ResidueSet> blocks_through(const ResidueSet& s, std::span<const Residue> pts) {
  const Residue v = s.modulus();
  std::vector<ResidueSet> out;
  if (v <= kScanLimit || pts.empty()) {
    for (Residue t = 0; t < v; ++t) {
      auto block = s.translate(static_cast<std::int64_t>(t));
      if (contains_all(block, pts)) out.push_back(std::move(block));
    }
    return out;
  }
  // t + s contains pts[0] only for t = pts[0] - x, x in s.
  std::vector<Residue> shifts;
  for (auto x : s) shifts.push_back((pts[0] % v + v - x) % v);
  std::sort(shifts.begin(), shifts.end());
  for (auto t : shifts) {
    auto block = s.translate(static_cast<std::int64_t>(t));
    if (contains_all(block, pts)) out.push_back(std::move(block));
  }
  return out;
}

std::optional<Residue> translate_offset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus() || a.size() != b.size()) return std::nullopt;
  if (a.empty()) return Residue{0};
  const Residue v = a.modulus();
  // b[0] must land on some member of a.
  for (auto x : a) {
    const Residue t = (x + v - b.members().front()) % v;
    if (b.translate(static_cast<std::int64_t>(t)) == a) return t;
  }
  return std::nullopt;
}

}  // namespace cyclotome
