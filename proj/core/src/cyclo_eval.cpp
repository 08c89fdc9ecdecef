#include "cyclotome/cyclo_eval.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "cyclotome/error.hpp"
#include "cyclotome/line.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

namespace {

void check_index(Residue bound, Residue i, Residue j) {
  if (i >= bound || j >= bound) {
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(i) + "," + std::to_string(j) +
                                                ") outside order " + std::to_string(bound));
  }
}

void check_divisor(const CycloCtx& ctx, Residue eps) {
  if (eps < 2 || ctx.e() % eps != 0) {
    throw Error(ErrorCode::NotADivisor,
                std::to_string(eps) + " is not a divisor >= 2 of e = " + std::to_string(ctx.e()));
  }
}

/// Number of r in S_col \ {0, col} with r = residue mod eps.
std::uint64_t count_on_line(const CycloCtx& ctx, Residue col, Residue eps, Residue residue) {
  std::uint64_t c = 0;
  for (auto r : line_set(ctx, col)) {
    if (r != 0 && r != col && r % eps == residue) ++c;
  }
  return c;
}

}  // namespace

std::uint64_t CycloTable::at(Residue i, Residue j) const {
  auto it = entries.find(IndexPair{i, j});
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t CycloTable::column_sum(Residue j) const {
  std::uint64_t s = 0;
  for (auto it = entries.lower_bound(IndexPair{0, j}); it != entries.end() && it->first.j == j; ++it) {
    s += it->second;
  }
  return s;
}

std::uint64_t ClassMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& [cls, c] : counts) t += c;
  return t;
}

std::uint64_t cyclo_full(const CycloCtx& ctx, Residue i, Residue j) {
  check_index(ctx.e(), i, j);
  if (i == 0 && j == 0) return ctx.f() - 1;
  if (i == 0 || j == 0 || i == j) return 0;
  return line_set(ctx, j).contains(i) ? 1 : 0;
}

ClassMultiset delta_decomposition(const CycloCtx& ctx, Residue i, Residue j) {
  check_index(ctx.e(), i, j);
  ClassMultiset out;
  out.modulus = ctx.e();
  if (i == j) {
    // C_j u {0} is alpha^j GF(q), closed under subtraction.
    if (ctx.f() > 1) out.counts[j] = ctx.f() - 1;
    return out;
  }
  for (auto h : line_pair(ctx, i, j)) {
    if (h != i && h != j) out.counts[h] = 1;
  }
  return out;
}

std::uint64_t cyclo_divisor(const CycloCtx& ctx, Residue eps, Residue i, Residue j) {
  check_divisor(ctx, eps);
  check_index(eps, i, j);
  const Residue blocks = ctx.e() / eps;
  if (i == 0 && j == 0) {
    std::uint64_t total = ctx.f() - 1;
    for (Residue s = 1; s < blocks; ++s) total += count_on_line(ctx, eps * s, eps, 0);
    return total;
  }
  if (j == 0 || i == 0 || i == j) {
    // (0,i) = (i,0) and (i,i) = (-i,0); reduce everything to a column-0 entry.
    const Residue row = (j == 0) ? i : (i == 0 ? j : eps - i);
    std::uint64_t total = 0;
    for (Residue s = 1; s < blocks; ++s) total += count_on_line(ctx, eps * s, eps, row);
    return total;
  }
  std::uint64_t total = 0;
  for (Residue s = 0; s < blocks; ++s) total += count_on_line(ctx, eps * s + j, eps, i);
  return total;
}

std::uint64_t uniform_closed_form(std::uint64_t q, Residue eps, Residue i, Residue j) {
  if (!as_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (eps < 2 || (q + 1) % eps != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(eps) + " does not divide q+1");
  }
  check_index(eps, i, j);
  const auto m = static_cast<std::int64_t>((q + 1) / eps);
  const auto ep = static_cast<std::int64_t>(eps);
  std::int64_t v;
  if (i == 0 && j == 0) {
    v = m * m + (ep - 3) * m - 1;
  } else if (i == 0 || j == 0 || i == j) {
    v = m * (m - 1);
  } else {
    v = m * m;
  }
  return static_cast<std::uint64_t>(v);
}

namespace {

void check_uniform_args(std::uint64_t p, unsigned s, std::uint64_t e) {
  if (!is_prime(p) || s == 0 || e < 3) {
    throw Error(ErrorCode::InvalidParams, "need p prime, s >= 1, e >= 3");
  }
  const auto q = checked_pow(p, 2 * s);
  if (!q) throw Error(ErrorCode::OutOfRange, "p^(2s) exceeds 2^63");
  if ((*q - 1) % e != 0) throw Error(ErrorCode::InvalidParams, "e does not divide p^(2s) - 1");
}

}  // namespace

bool is_uniform_order(std::uint64_t p, unsigned s, std::uint64_t e) {
  check_uniform_args(p, s, e);
  for (unsigned t = 1; t <= s; ++t) {
    if (s % t == 0 && (powmod(p, t, e) + 1) % e == 0) return true;
  }
  return false;
}

std::optional<UniformParams> uniform_params(std::uint64_t p, unsigned s, std::uint64_t e) {
  check_uniform_args(p, s, e);
  const auto ps = static_cast<std::int64_t>(*checked_pow(p, s));
  const auto ee = static_cast<std::int64_t>(e);
  for (std::int64_t r : {ps, -ps}) {
    if (((r - 1) % ee + ee) % ee == 0) return UniformParams{p, s, e, r, (r - 1) / ee};
  }
  return std::nullopt;
}

std::int64_t uniform_value(const UniformParams& u, Residue i, Residue j) {
  const std::int64_t eta = u.eta;
  const auto e = static_cast<std::int64_t>(u.e);
  i %= u.e;
  j %= u.e;
  if (i == 0 && j == 0) return eta * eta - (e - 3) * eta - 1;
  if (i == 0 || j == 0 || i == j) return eta * eta + eta;
  return eta * eta;
}

StorerOrbit storer_reduce(Residue order, std::uint64_t p, std::uint64_t f_order, Residue i, Residue j) {
  if (order == 0) throw Error(ErrorCode::InvalidParams, "order must be positive");
  const bool symmetric = (p == 2) || (f_order % 2 == 0);
  auto key = [](const IndexPair& a, const IndexPair& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; };
  std::set<IndexPair, decltype(key)> seen(key);
  std::deque<IndexPair> todo{IndexPair{i % order, j % order}};
  seen.insert(todo.front());
  while (!todo.empty()) {
    const IndexPair cur = todo.front();
    todo.pop_front();
    std::vector<IndexPair> next{
        {(order - cur.i) % order, (cur.j + order - cur.i) % order},
        {mulmod(cur.i, p, order), mulmod(cur.j, p, order)},
    };
    if (symmetric) next.push_back({cur.j, cur.i});
    for (const auto& nb : next) {
      if (seen.insert(nb).second) todo.push_back(nb);
    }
  }
  StorerOrbit out;
  out.orbit.assign(seen.begin(), seen.end());
  out.canonical = out.orbit.front();
  return out;
}

void for_each_line(const CycloCtx& ctx, const std::function<void(Residue, const ResidueSet&)>& visit) {
  const Residue e = ctx.e();
  const std::uint64_t p = ctx.p() % e;
  std::vector<bool> done(e, false);
  for (Residue k = 1; k < e; ++k) {
    if (done[k]) continue;
    ResidueSet s = line_set(ctx, k);
    Residue cur = k;
    do {
      visit(cur, s);
      done[cur] = true;
      cur = mulmod(cur, p, e);
      s = s.scale(p, e);
    } while (cur != k);
  }
}

CycloTable cyclo_table(const CycloCtx& ctx, Residue eps) {
  if (eps != ctx.e()) check_divisor(ctx, eps);
  CycloTable t;
  t.q = ctx.q();
  t.n = ctx.n();
  t.order = eps;
  t.f = (ctx.field_order() - 1) / eps;

  if (eps == ctx.e()) {
    if (ctx.f() > 1) t.entries[IndexPair{0, 0}] = ctx.f() - 1;
    for_each_line(ctx, [&](Residue j, const ResidueSet& s) {
      for (auto i : s) {
        if (i != 0 && i != j) t.entries[IndexPair{i, j}] = 1;
      }
    });
    return t;
  }

  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  acc[0] += ctx.f() - 1;
  for_each_line(ctx, [&](Residue j, const ResidueSet& s) {
    const Residue col = j % eps;
    for (auto i : s) {
      if (i != 0 && i != j) ++acc[(i % eps) * eps + col];
    }
  });
  for (const auto& [key, count] : acc) {
    if (count != 0) t.entries[IndexPair{key / eps, key % eps}] = count;
  }
  return t;
}

}  // namespace cyclotome
