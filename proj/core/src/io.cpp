#include "cyclotome/io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cyclotome/error.hpp"

namespace cyclotome {

using nlohmann::json;

std::string to_json(const ResidueSet& s) {
  return json{{"modulus", s.modulus()}, {"members", s.members()}}.dump();
}

ResidueSet residue_set_from_json(const std::string& text) {
  try {
    const auto j = json::parse(text);
    return ResidueSet(j.at("modulus").get<Residue>(), j.at("members").get<std::vector<Residue>>());
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

std::string to_json(const CycloTable& t) {
  json entries = json::array();
  for (const auto& [ij, count] : t.entries) {
    entries.push_back({{"i", ij.i}, {"j", ij.j}, {"count", count}});
  }
  return json{{"q", t.q}, {"n", t.n}, {"order", t.order}, {"f", t.f}, {"entries", std::move(entries)}}.dump(1);
}

CycloTable cyclo_table_from_json(const std::string& text) {
  try {
    const auto j = json::parse(text);
    CycloTable t;
    t.q = j.at("q").get<std::uint64_t>();
    t.n = j.at("n").get<unsigned>();
    t.order = j.at("order").get<Residue>();
    t.f = j.at("f").get<std::uint64_t>();
    for (const auto& e : j.at("entries")) {
      const IndexPair ij{e.at("i").get<Residue>(), e.at("j").get<Residue>()};
      if (ij.i >= t.order || ij.j >= t.order) throw Error(ErrorCode::IndexOutOfRange, "entry outside order");
      t.entries[ij] = e.at("count").get<std::uint64_t>();
    }
    return t;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

std::string to_csv(const CycloTable& t) {
  std::ostringstream out;
  out << "i,j,count\n";
  for (const auto& [ij, count] : t.entries) out << ij.i << ',' << ij.j << ',' << count << '\n';
  return out.str();
}

std::string to_pretty(const CycloTable& t) {
  std::ostringstream out;
  out << "order " << t.order << " over GF(" << t.q << "^" << t.n << "), f = " << t.f << "\n";
  std::uint64_t widest = 1;
  for (const auto& [ij, count] : t.entries) widest = std::max(widest, count);
  const int w = std::max<int>(static_cast<int>(std::to_string(std::max<std::uint64_t>(widest, t.order)).size()), 1) + 1;
  out << std::setw(w + 2) << "i\\j";
  for (Residue j = 0; j < t.order; ++j) out << std::setw(w) << j;
  out << '\n';
  for (Residue i = 0; i < t.order; ++i) {
    out << std::setw(w + 2) << i;
    for (Residue j = 0; j < t.order; ++j) out << std::setw(w) << t.at(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace cyclotome
