#include "cyclotome/residue_set.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>

#include "cyclotome/error.hpp"
#include "cyclotome/number_theory.hpp"

namespace cyclotome {

ResidueSet::ResidueSet(Residue modulus, std::vector<Residue> members)
    : modulus_(modulus), members_(std::move(members)) {
  if (modulus_ == 0) throw Error(ErrorCode::InvalidParams, "modulus must be positive");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= modulus_) {
    throw Error(ErrorCode::OutOfRange, "residue " + std::to_string(members_.back()) +
                                           " not below modulus " + std::to_string(modulus_));
  }
}

ResidueSet ResidueSet::full(Residue modulus) {
  std::vector<Residue> all(modulus);
  for (Residue r = 0; r < modulus; ++r) all[r] = r;
  return ResidueSet(modulus, std::move(all));
}

bool ResidueSet::contains(Residue r) const {
  return std::binary_search(members_.begin(), members_.end(), r);
}

ResidueSet ResidueSet::translate(std::int64_t t) const {
  const auto v = static_cast<std::int64_t>(modulus_);
  const auto shift = static_cast<Residue>(((t % v) + v) % v);
  std::vector<Residue> out;
  out.reserve(members_.size());
  // Rotating keeps the result sorted without a full sort.
  auto split = std::lower_bound(members_.begin(), members_.end(), modulus_ - shift);
  for (auto it = split; it != members_.end(); ++it) out.push_back(*it + shift - modulus_);
  for (auto it = members_.begin(); it != split; ++it) out.push_back(*it + shift);
  ResidueSet r;
  r.modulus_ = modulus_;
  r.members_ = std::move(out);
  return r;
}

ResidueSet ResidueSet::scale(Residue g, Residue new_modulus) const {
  std::vector<Residue> out;
  out.reserve(members_.size());
  for (auto s : members_) {
    out.push_back(mulmod(s, g, new_modulus));
  }
  return ResidueSet(new_modulus, std::move(out));
}

ResidueSet intersect(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::InvalidParams, "moduli differ");
  std::vector<Residue> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ResidueSet(a.modulus(), std::move(out));
}

std::string to_list(const ResidueSet& s) {
  std::ostringstream out;
  bool first = true;
  for (auto r : s) {
    if (!first) out << ',';
    first = false;
    out << r;
  }
  return out.str();
}

std::string to_display(const ResidueSet& s) {
  return "{" + to_list(s) + "} mod " + std::to_string(s.modulus());
}

ResidueSet parse_residue_list(Residue modulus, const std::string& text) {
  std::vector<Residue> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto first = tok.find_first_not_of(' ');
    auto last = tok.find_last_not_of(' ');
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty residue");
    tok = tok.substr(first, last - first + 1);
    Residue v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::ParseError, "bad residue '" + tok + "'");
    }
    out.push_back(v);
  }
  return ResidueSet(modulus, std::move(out));
}

}  // namespace cyclotome
