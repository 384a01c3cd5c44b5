// Prints the polynomiality verdict for every semistable indecomposable
// character of a few small types.
#include <iostream>

#include "coxinv/coxinv.hpp"

int main() {
  using namespace coxinv;
  for (const char* name : {"A2", "B2", "A3", "A4", "B3", "C3", "D4"}) {
    const auto rs = build(name[0], name[1] - '0');
    std::cout << rs.spec().name() << "\n";
    for (const auto& found : enumerate_semistable_indecomposables(rs, 16)) {
      const auto v = verdict(rs, found);
      std::cout << "  chi =";
      for (auto a : v.chi.root_coords.coeffs) std::cout << ' ' << a;
      std::cout << "  h =";
      for (auto h : v.hilbert.values) std::cout << ' ' << h;
      std::cout << "  krull " << v.krull_dim << (v.polynomial_by_theorem ? "  polynomial" : "  not polynomial") << "  via "
                << word_string(v.witnesses.front().word()) << "\n";
    }
  }
}
