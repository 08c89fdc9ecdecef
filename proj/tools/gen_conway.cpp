// Regenerates core/src/conway_data.inc:
//   gen_conway > core/src/conway_data.inc
#include <cstdint>
#include <iostream>

#include "cyclotome/conway.hpp"
#include "cyclotome/number_theory.hpp"

int main() {
  using namespace cyclotome;
  std::cout << "// Conway polynomials C(p,m), 2 <= m, p^m <= 2^16.\n"
            << "// {p, m, {c_0, ..., c_{m-1}}}; generated by tools/gen_conway.\n";
  for (std::uint64_t p = 2; p * p <= kConwayBound; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned m = 2; checked_pow(p, m, kConwayBound); ++m) {
      const auto c = conway_search(p, m);
      std::cout << '{' << p << ", " << m << ", {";
      for (unsigned i = 0; i < m; ++i) std::cout << (i ? ", " : "") << c[i];
      std::cout << "}},\n";
    }
  }
}
