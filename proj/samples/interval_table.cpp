// Prints, for one ground size, the size interval realised on each pair of
// levels and checks that together they cover the whole target range.

#include <cstdlib>
#include <iostream>

#include "flatac/flatac.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 15;
  if (n < 6 || n > 40) {
    std::cerr << "n must lie in [6,40]\n";
    return 1;
  }
  const flatac::SizeInterval target = flatac::theorem_interval(n);
  std::cout << "target range for n=" << n << ": [" << target.lo << "," << target.hi << "]\n";
  for (int l = 2; 2 * l + 2 <= n; ++l) {
    const flatac::SizeInterval f = flatac::interval_flat(n, l);
    const flatac::SizeInterval g = flatac::interval_large(n, l);
    std::cout << "  l=" << l << "  flat [" << f.lo << "," << f.hi << "]  large [" << g.lo << "," << g.hi << "]";
    if (const auto gap = flatac::gap_filler_interval(n, l)) std::cout << "  extra [" << gap->lo << "," << gap->hi << "]";
    std::cout << "\n";
  }

  long long uncovered = 0;
  for (long long m = target.lo; m <= target.hi; ++m) {
    bool hit = false;
    for (int l = 2; 2 * l + 2 <= n && !hit; ++l) hit = flatac::level_covers(n, l, m);
    if (!hit) ++uncovered;
  }
  std::cout << (uncovered == 0 ? "every size is covered\n" : "uncovered sizes: " + std::to_string(uncovered) + "\n");
  return uncovered == 0 ? 0 : 1;
}
