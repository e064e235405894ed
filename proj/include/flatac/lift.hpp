#pragma once

// The three recursions that build antichains in B_n from antichains in
// B_{n-1} and B_{n-2}. Each part of the result lives in a different block of
// the colex order (by which of the new elements it contains), so the member
// lists are produced by concatenation and stay sorted without a sort.
//
// Inputs are not re-verified; callers certify the final antichain.

#include <cstdint>
#include <vector>

#include "flatac/antichain.hpp"
#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

namespace detail {

inline void append_level(std::vector<SubsetMask>& out, int n, int card, std::uint64_t extra) {
  for_each_subset(n, card, [&](SubsetMask s) { out.push_back(SubsetMask{s.bits | extra}); });
}

inline void append_shifted(std::vector<SubsetMask>& out, const Family& f, std::uint64_t extra) {
  for (SubsetMask s : f) out.push_back(SubsetMask{s.bits | extra});
}

inline std::uint64_t element_bit(int e) { return std::uint64_t{1} << (e - 1); }

}  // namespace detail

/// A over [n-1] on levels (l, l+1)  ->  A plus {B + n : |B| = l-1} over [n].
/// Size grows by C(n-1, l-1).
inline FlatAntichain lift_add_isolated(FlatAntichain a) {
  const int n = a.n + 1;
  const int l = a.l;
  if (l < 2 || l > n - 1 || n > max_ground) throw error(errc::level_range, "lift_add_isolated needs 2 <= l <= n-1");
  std::vector<SubsetMask> upper = std::move(a.upper).take();
  std::vector<SubsetMask> lower = std::move(a.lower).take();
  lower.reserve(lower.size() + static_cast<std::size_t>(binom(n - 1, l - 1)));
  detail::append_level(lower, n - 1, l - 1, detail::element_bit(n));
  return FlatAntichain(n, l, Family::from_sorted(n, l + 1, std::move(upper)),
                       Family::from_sorted(n, l, std::move(lower)));
}

/// A over [n-1] on levels (l-1, l)  ->  {B + n : B in A} plus C([n-1], l+1),
/// on levels (l, l+1) of [n]. Size grows by C(n-1, l+1).
inline FlatAntichain lift_join_element(FlatAntichain a) {
  const int n = a.n + 1;
  const int l = a.l + 1;
  if (l < 3 || l > n - 2 || n > max_ground) throw error(errc::level_range, "lift_join_element needs 3 <= l <= n-2");
  const std::uint64_t bit_n = detail::element_bit(n);
  std::vector<SubsetMask> upper;
  upper.reserve(static_cast<std::size_t>(binom(n - 1, l + 1)) + a.upper.size());
  detail::append_level(upper, n - 1, l + 1, 0);
  detail::append_shifted(upper, a.upper, bit_n);
  std::vector<SubsetMask> lower = std::move(a.lower).take();
  for (SubsetMask& s : lower) s.bits |= bit_n;
  return FlatAntichain(n, l, Family::from_sorted(n, l + 1, std::move(upper)),
                       Family::from_sorted(n, l, std::move(lower)));
}

/// A1, A2 over [n-2] on levels (l-1, l)  ->  antichain on levels (l, l+1) of
/// [n] made of A1 + {n-1}, A2 + {n}, C([n-2], l+1) and C([n-2], l-2) + {n-1, n}.
/// Size is |A1| + |A2| + C(n-2, l+1) + C(n-2, l-2). A1 and A2 may coincide.
inline FlatAntichain lift_pair(const FlatAntichain& a1, const FlatAntichain& a2) {
  if (a1.n != a2.n || a1.l != a2.l) throw error(errc::ground_mismatch, "lift_pair inputs differ in ground size or level");
  const int n = a1.n + 2;
  const int l = a1.l + 1;
  if (l < 3 || l > n - 3 || n > max_ground) throw error(errc::level_range, "lift_pair needs 3 <= l <= n-3");
  const std::uint64_t bit_a = detail::element_bit(n - 1);
  const std::uint64_t bit_b = detail::element_bit(n);

  std::vector<SubsetMask> upper;
  upper.reserve(static_cast<std::size_t>(binom(n - 2, l + 1)) + a1.upper.size() + a2.upper.size());
  detail::append_level(upper, n - 2, l + 1, 0);
  detail::append_shifted(upper, a1.upper, bit_a);
  detail::append_shifted(upper, a2.upper, bit_b);

  std::vector<SubsetMask> lower;
  lower.reserve(a1.lower.size() + a2.lower.size() + static_cast<std::size_t>(binom(n - 2, l - 2)));
  detail::append_shifted(lower, a1.lower, bit_a);
  detail::append_shifted(lower, a2.lower, bit_b);
  detail::append_level(lower, n - 2, l - 2, bit_a | bit_b);

  return FlatAntichain(n, l, Family::from_sorted(n, l + 1, std::move(upper)),
                       Family::from_sorted(n, l, std::move(lower)));
}

}  // namespace flatac
