// Which monomials z^j integrate to zero over cycles of z^6.
#include <iostream>

#include "zerocycle/zerocycle.hpp"

using namespace zerocycle;

int main() {
  for (const char* text : {"1,-1,1,-1,1,-1", "1,-1,0,1,-1,0", "1,0,-1,1,0,-1", "1,1,-1,-1,0,0"}) {
    const ZeroCycle c = parse_cycle(text);
    const bool balanced = is_balanced(c, {Permutation::shift(6)}).balanced;
    std::cout << "C = (" << text << ")" << (balanced ? "" : ", unbalanced") << ": allowed residues mod 6:";
    for (int r : zm_allowed_residues(c)) std::cout << " " << r;
    std::cout << "\n";
  }
}
