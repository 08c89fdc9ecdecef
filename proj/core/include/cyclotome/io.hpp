#pragma once

#include <string>

#include "cyclotome/cyclo_eval.hpp"
#include "cyclotome/residue_set.hpp"

namespace cyclotome {

/// {"modulus": v, "members": [...]}
std::string to_json(const ResidueSet& s);
ResidueSet residue_set_from_json(const std::string& text);

/// {"q", "n", "order", "f", "entries": [{"i", "j", "count"}, ...]}, entries
/// sorted by (j, i).
std::string to_json(const CycloTable& t);
CycloTable cyclo_table_from_json(const std::string& text);

/// Header "i,j,count", rows in the same order as the JSON entries.
std::string to_csv(const CycloTable& t);

/// Dense e x e grid, rows indexed by i and columns by j.
std::string to_pretty(const CycloTable& t);

}  // namespace cyclotome
