// Moments of q against powers of f = z^2 (z-1)^2 on [0, 1], next to the cycle test on C_f.
#include <iostream>

#include "zerocycle/zerocycle.hpp"

using namespace zerocycle;

int main() {
  const Poly f = parse_poly("z^2*(z-1)^2");
  const MomentCycleReport rep = moment_cycle(f);
  BranchSystem bs(f);

  std::cout << "f = " << f.to_string() << "\nC_f weights:";
  for (long w : rep.cycle.weights()) std::cout << " " << w;
  std::cout << "\n\n";

  for (const char* text : {"1", "z", "4*z^3-6*z^2+2*z", "(2*z-1)*(z^2-z)"}) {
    const Poly q = parse_poly(text);
    const auto moments = moment_oracle(f, q, 6);
    const auto ev = is_identically_zero(bs, q.antiderivative(), rep.cycle);
    std::cout << "q = " << q.to_string() << "\n  moments:";
    for (const auto& v : moments) std::cout << " " << v.get_str();
    std::cout << "\n  cycle test: " << (ev.pass ? "vanishes" : "does not vanish") << "\n";
  }
}
