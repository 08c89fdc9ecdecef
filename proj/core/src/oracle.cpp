#include "cyclotome/oracle.hpp"

#include <cstdlib>
#include <string>

#include "cyclotome/error.hpp"

namespace cyclotome {

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("CYCLOTOME_ORACLE_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultOracleBudget;
}

Oracle::Oracle(const CycloCtx& ctx)
    : base_(ctx.base()), q_(ctx.q()), n_(ctx.n()), order_(ctx.field_order()), e_(ctx.e()) {
  if (order_ > oracle_budget() || order_ > (std::uint64_t{1} << 32)) {
    throw Error(ErrorCode::OracleBudgetExceeded,
                "field of order " + std::to_string(order_) + " exceeds oracle budget " +
                    std::to_string(oracle_budget()));
  }
  // alpha^n = -sum_{i<n} c_i alpha^i for the monic prim_poly.
  std::vector<Elem> tail(n_);
  for (unsigned i = 0; i < n_; ++i) tail[i] = base_->neg(ctx.prim_poly().coeff(i));

  log_.assign(order_, 0);
  exp_.assign(order_ - 1, 0);
  std::vector<Elem> v(n_, 0);
  v[0] = 1;
  for (std::uint64_t t = 0; t + 1 < order_; ++t) {
    std::uint64_t packed = 0;
    for (unsigned i = n_; i-- > 0;) packed = packed * q_ + v[i];
    if (packed == 0 || (t > 0 && packed == 1)) {
      throw Error(ErrorCode::NotPrimitive, "alpha has order " + std::to_string(t));
    }
    log_[packed] = static_cast<std::uint32_t>(t);
    exp_[t] = static_cast<std::uint32_t>(packed);
    // multiply by alpha
    const Elem top = v[n_ - 1];
    for (unsigned i = n_ - 1; i > 0; --i) v[i] = base_->add(v[i - 1], base_->mul(top, tail[i]));
    v[0] = base_->mul(top, tail[0]);
  }
}

std::uint64_t Oracle::minus_one(std::uint64_t packed) const {
  const std::uint64_t c0 = packed % q_;
  return packed - c0 + base_->sub(c0, 1);
}

void Oracle::check_order(std::uint64_t m) const {
  if (m == 0 || (order_ - 1) % m != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(m) + " does not divide q^n - 1");
  }
}

std::uint64_t Oracle::cyclo(std::uint64_t m, std::uint64_t i, std::uint64_t j) const {
  check_order(m);
  if (i >= m || j >= m) throw Error(ErrorCode::IndexOutOfRange, "index outside order");
  std::uint64_t count = 0;
  for (std::uint64_t t = j; t + 1 < order_; t += m) {
    const std::uint64_t z = exp_[t];
    if (z == 1) continue;  // z - 1 = 0 lies in no class
    if (log_[minus_one(z)] % m == i) ++count;
  }
  return count;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> Oracle::table(std::uint64_t m) const {
  check_order(m);
  std::vector<std::uint64_t> dense;
  const bool use_dense = m <= 4096;
  if (use_dense) dense.assign(m * m, 0);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> out;
  for (std::uint64_t t = 1; t + 1 < order_; ++t) {
    const std::uint64_t z = exp_[t];
    if (z == 1) continue;
    const std::uint64_t i = log_[minus_one(z)] % m;
    const std::uint64_t j = t % m;
    if (use_dense) {
      ++dense[i * m + j];
    } else {
      ++out[{i, j}];
    }
  }
  if (use_dense) {
    for (std::uint64_t i = 0; i < m; ++i) {
      for (std::uint64_t j = 0; j < m; ++j) {
        if (dense[i * m + j] != 0) out[{i, j}] = dense[i * m + j];
      }
    }
  }
  return out;
}

ResidueSet Oracle::line(Residue k) const {
  if (k == 0 || k >= e_) throw Error(ErrorCode::KOutOfRange, "k must satisfy 1 <= k < e");
  std::vector<Elem> ak(n_);
  std::uint64_t packed = exp_[k];
  for (unsigned i = 0; i < n_; ++i) {
    ak[i] = packed % q_;
    packed /= q_;
  }
  std::vector<Residue> members;
  members.reserve(q_ * q_);
  for (Elem a = 0; a < q_; ++a) {
    for (Elem b = 0; b < q_; ++b) {
      if (a == 0 && b == 0) continue;
      std::uint64_t w = 0;
      for (unsigned i = n_; i-- > 0;) {
        Elem c = base_->mul(b, ak[i]);
        if (i == 0) c = base_->add(c, a);
        w = w * q_ + c;
      }
      members.push_back(log_[w] % e_);
    }
  }
  return ResidueSet(e_, std::move(members));
}

std::uint64_t oracle_cyclo(const CycloCtx& ctx, std::uint64_t m, std::uint64_t i, std::uint64_t j) {
  return Oracle(ctx).cyclo(m, i, j);
}

ResidueSet oracle_Sk(const CycloCtx& ctx, Residue k) { return Oracle(ctx).line(k); }

}  // namespace cyclotome
