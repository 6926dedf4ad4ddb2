// Prints B_L, F_L and the sector census for sl(3) at L = 4, then checks
// the polynomial identity for every (j, k).

#include <iostream>

#include "slnq/slnq.hpp"

int main() {
  using namespace slnq;
  const int n = 3, L = 4;

  std::cout << "B_4(2L0, L0) = " << bosonic_B(n, L, 0, 0, 0).to_string() << "\n";
  std::cout << "F_4(L0+L1, L2) = " << fermionic_F(n, L, 1, 2).to_string() << "\n";

  Census c = sector_census(n, L, 0);
  std::cout << c.graphs << " K-graphs in " << c.sectors.size() << " sectors\n";
  for (const auto& row : c.sectors)
    std::cout << "  m=" << row.label.to_string() << "  " << row.closed_form.to_string() << "\n";

  for (const auto& g : enumerate_graphs(n, L, 0))
    if (node_count(g) > 0) {
      std::cout << render_ascii(g);
      break;
    }

  int bad = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      bad += verify_identity(n, L, j, k).verdict != Verdict::equal;
  std::cout << (bad ? "identity FAILED" : "identity holds for all (j, k)") << "\n";
  return bad ? 1 : 0;
}
