#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclotome {

using Residue = std::uint64_t;

/// Sorted set of residues modulo v. Holds difference sets, their
/// translates, and projective lines alike.
class ResidueSet {
 public:
  ResidueSet() = default;
  /// Members may arrive unsorted or repeated; each must be < modulus.
  ResidueSet(Residue modulus, std::vector<Residue> members);

  /// All of Z_v.
  static ResidueSet full(Residue modulus);

  Residue modulus() const noexcept { return modulus_; }
  const std::vector<Residue>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Residue r) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// {(s + t) mod v}.
  ResidueSet translate(std::int64_t t) const;
  /// {g * s mod new_modulus}.
  ResidueSet scale(Residue g, Residue new_modulus) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Residue modulus_ = 0;
  std::vector<Residue> members_;
};

/// Linear merge of two sets over the same modulus.
ResidueSet intersect(const ResidueSet& a, const ResidueSet& b);

/// "0,1,5,11"
std::string to_list(const ResidueSet& s);
/// "{0,1,5,11} mod 13"
std::string to_display(const ResidueSet& s);
/// Parses "0,1,5,11" against a modulus.
ResidueSet parse_residue_list(Residue modulus, const std::string& text);

}  // namespace cyclotome
