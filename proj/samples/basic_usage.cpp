// Builds a maximal antichain of a requested size, checks it, and prints how
// it was assembled.

#include <cstdlib>
#include <iostream>

#include "flatac/flatac.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const long long m = argc > 2 ? std::atoll(argv[2]) : 63;

  try {
    const flatac::Construction c = flatac::construct_main(n, m);
    const flatac::FlatAntichain& a = c.antichain;
    std::cout << "n=" << n << " size=" << a.size() << " on levels " << a.l << "," << a.l + 1 << " ("
              << a.lower.size() << " " << a.l << "-sets, " << a.upper.size() << " " << a.l + 1 << "-sets)\n";

    const flatac::VerifyReport rep = flatac::check_maximal_flat(a);
    std::cout << "maximal antichain: " << (rep.is_maximal ? "yes" : "no") << "\n";

    std::cout << "steps:\n";
    for (const flatac::TraceStep& s : c.trace.steps)
      std::cout << "  " << flatac::to_string(s.kind) << "  n=" << s.n << " l=" << s.l << " size=" << s.size << "\n";
  } catch (const flatac::error& e) {
    std::cerr << e.what() << "\n";
    if (e.nearest().below) std::cerr << "  nearest below: " << *e.nearest().below << "\n";
    if (e.nearest().above) std::cerr << "  nearest above: " << *e.nearest().above << "\n";
    return 1;
  }
  return 0;
}
