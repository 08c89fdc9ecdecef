#include "cyclotome/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

namespace {

const FieldCtx& common_base(const PolyGF& a, const PolyGF& b) {
  if (!a.base() || a.base() != b.base()) {
    // Distinct contexts describing the same field are still rejected: codes
    // are only meaningful relative to one modulus.
    throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
  return *a.base();
}

/// Solves sum_i c_i * cols[i] = rhs over GF(q); nullopt when inconsistent.
/// The columns are assumed linearly independent.
std::optional<std::vector<Elem>> solve_columns(const FieldCtx& f,
                                               const std::vector<std::vector<Elem>>& cols,
                                               const std::vector<Elem>& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t ncols = cols.size();
  // Augmented row-major matrix.
  std::vector<std::vector<Elem>> a(rows, std::vector<Elem>(ncols + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) a[r][c] = cols[c][r];
    a[r][ncols] = rhs[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(ncols, rows);
  for (std::size_t c = 0; c < ncols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    const Elem inv = f.inv(a[pivot_row][c]);
    for (auto& v : a[pivot_row]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      const Elem factor = a[r][c];
      for (std::size_t k = 0; k <= ncols; ++k) {
        a[r][k] = f.sub(a[r][k], f.mul(factor, a[pivot_row][k]));
      }
    }
    pivot_of_col[c] = pivot_row++;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (a[r][ncols] != 0) return std::nullopt;
  }
  std::vector<Elem> sol(ncols, 0);
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] < rows) sol[c] = a[pivot_of_col[c]][ncols];
  }
  return sol;
}

}  // namespace

PolyGF::PolyGF(FieldPtr base, std::vector<Elem> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (!base_) throw Error(ErrorCode::InvalidParams, "polynomial without a base field");
  for (auto c : coeffs_) {
    if (!base_->contains(c)) throw Error(ErrorCode::OutOfRange, "coefficient not a field element");
  }
  trim();
}

PolyGF PolyGF::monomial(FieldPtr base, unsigned degree, Elem c) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return PolyGF(std::move(base), std::move(coeffs));
}

void PolyGF::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem PolyGF::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = base_->add(base_->mul(acc, x), *it);
  return acc;
}

PolyGF operator+(const PolyGF& a, const PolyGF& b) {
  const auto& f = common_base(a, b);
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return PolyGF(a.base(), std::move(out));
}

PolyGF operator-(const PolyGF& a, const PolyGF& b) {
  const auto& f = common_base(a, b);
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return PolyGF(a.base(), std::move(out));
}

PolyGF operator*(const PolyGF& a, const PolyGF& b) {
  const auto& f = common_base(a, b);
  if (a.is_zero() || b.is_zero()) return PolyGF(a.base(), {});
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return PolyGF(a.base(), std::move(out));
}

DivMod divmod(const PolyGF& a, const PolyGF& b) {
  const auto& f = common_base(a, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroInverse, "polynomial division by zero");
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {PolyGF(a.base(), {}), a};
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = f.inv(b.lead());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem c = f.mul(rem[k], lead_inv);
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t t = 0; t <= db; ++t) {
      rem[k - db + t] = f.sub(rem[k - db + t], f.mul(c, b.coeffs()[t]));
    }
  }
  rem.resize(db);
  return {PolyGF(a.base(), std::move(quot)), PolyGF(a.base(), std::move(rem))};
}

PolyGF operator%(const PolyGF& a, const PolyGF& b) { return divmod(a, b).rem; }

PolyGF make_monic(const PolyGF& a) {
  if (a.is_zero() || a.is_monic()) return a;
  const auto& f = *a.base();
  const Elem inv = f.inv(a.lead());
  std::vector<Elem> out = a.coeffs();
  for (auto& c : out) c = f.mul(c, inv);
  return PolyGF(a.base(), std::move(out));
}

PolyGF gcd(const PolyGF& a, const PolyGF& b) {
  PolyGF x = a, y = b;
  while (!y.is_zero()) {
    PolyGF r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

PolyGF mulmod(const PolyGF& a, const PolyGF& b, const PolyGF& f) { return (a * b) % f; }

PolyGF powmod(const PolyGF& a, std::uint64_t e, const PolyGF& f) {
  PolyGF result = PolyGF::monomial(f.base(), 0) % f;
  PolyGF base = a % f;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, f);
  }
  return result;
}

bool is_irreducible(const PolyGF& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint64_t q = f.base()->order();
  const PolyGF x = PolyGF::monomial(f.base(), 1);
  // frob[k] = x^(q^k) mod f
  std::vector<PolyGF> frob{x % f};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, f));
  if (!(frob[static_cast<std::size_t>(n)] == x % f)) return false;
  for (auto l : prime_divisors(static_cast<std::uint64_t>(n))) {
    const auto& h = frob[static_cast<std::size_t>(n) / l];
    if (gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

bool is_primitive_poly(const PolyGF& f, std::optional<unsigned> expected_degree) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeMismatch, "polynomial degree must be >= 1");
  if (expected_degree && static_cast<unsigned>(f.degree()) != *expected_degree) {
    throw Error(ErrorCode::DegreeMismatch, "expected degree " + std::to_string(*expected_degree) +
                                               ", got " + std::to_string(f.degree()));
  }
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial must be monic");
  if (!is_irreducible(f)) return false;
  const auto order = checked_pow(f.base()->order(), static_cast<unsigned>(f.degree()));
  if (!order) throw Error(ErrorCode::OutOfRange, "q^n exceeds 2^63");
  const std::uint64_t n = *order - 1;
  const PolyGF x = PolyGF::monomial(f.base(), 1);
  const PolyGF one = PolyGF::monomial(f.base(), 0);
  if (!(powmod(x, n, f) == one)) return false;
  for (auto l : prime_divisors(n)) {
    if (powmod(x, n / l, f) == one) return false;
  }
  return true;
}

PolyGF parse_poly(FieldPtr base, std::string_view text) {
  std::vector<Elem> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad coefficient '" + std::string(tok) + "'");
    }
    coeffs.push_back(v);
    pos = end + 1;
  }
  return PolyGF(std::move(base), std::move(coeffs));
}

std::string format_poly(const PolyGF& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out << ',';
    out << f.coeffs()[i];
  }
  return out.str();
}

std::string pretty_poly(const PolyGF& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Elem c = f.coeffs()[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c != 1 || k == 0) out << c;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

ExtensionField::ExtensionField(PolyGF modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  if (!modulus_.is_monic()) throw Error(ErrorCode::NotMonic, "modulus must be monic");
  if (!is_irreducible(modulus_)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
  const auto order = checked_pow(base()->order(), degree());
  if (!order) throw Error(ErrorCode::OutOfRange, "q^n exceeds 2^63");
  order_ = *order;
}

std::vector<Elem> ExtensionField::coords(const PolyGF& a) const {
  const PolyGF r = a % modulus_;
  std::vector<Elem> out(degree(), 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

PolyGF minimal_poly_of_power(const ExtensionField& big, std::uint64_t t) {
  if (t == 0 || t >= big.order() - 1) {
    throw Error(ErrorCode::OutOfRange, "exponent must satisfy 0 < t < q^n - 1");
  }
  const auto& f = *big.base();
  const PolyGF beta = big.power_of_x(t);
  std::vector<std::vector<Elem>> cols{big.coords(PolyGF::monomial(big.base(), 0))};
  PolyGF cur = beta;
  for (unsigned r = 1; r <= big.degree(); ++r) {
    auto target = big.coords(cur);
    if (auto sol = solve_columns(f, cols, target)) {
      std::vector<Elem> coeffs(r + 1, 0);
      for (unsigned i = 0; i < r; ++i) coeffs[i] = f.neg((*sol)[i]);
      coeffs[r] = 1;
      return PolyGF(big.base(), std::move(coeffs));
    }
    cols.push_back(std::move(target));
    cur = big.mul(cur, beta);
  }
  // Unreachable: 1, b, ..., b^n are n+1 vectors in an n-dimensional space.
  throw Error(ErrorCode::InvalidParams, "no linear dependency found");
}

}  // namespace cyclotome
