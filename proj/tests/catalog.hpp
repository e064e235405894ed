#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flatac/antichain.hpp"

namespace testcat {

using flatac::Family;
using flatac::FlatAntichain;
using flatac::SubsetMask;

// A maximal flat antichain from a random D inside level l: the upper part is
// every (l+1)-set whose shadow lies in D.
inline FlatAntichain from_random_downset(int n, int l, std::mt19937_64& rng) {
  const unsigned density = static_cast<unsigned>(rng() % 7) + 2;
  std::vector<SubsetMask> d;
  flatac::for_each_subset(n, l, [&](SubsetMask s) {
    if (rng() % 8 < density) d.push_back(s);
  });
  const Family down(n, l, d);
  std::vector<SubsetMask> upper;
  flatac::for_each_subset(n, l + 1, [&](SubsetMask s) {
    bool inside = true;
    for (int e : s.elements()) inside = inside && down.contains(s.without(e));
    if (inside) upper.push_back(s);
  });
  return flatac::assemble_from_upper(n, l, Family(n, l + 1, upper));
}

inline std::vector<FlatAntichain> catalog(int n, int l, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FlatAntichain> out;
  for (int i = 0; i < count; ++i) out.push_back(from_random_downset(n, l, rng));
  out.emplace_back(n, l, Family(n, l + 1, {}), Family::level(n, l));
  out.emplace_back(n, l, Family::level(n, l + 1), Family(n, l, {}));
  return out;
}

}  // namespace testcat
