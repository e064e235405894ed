#pragma once

// Closed-form membership tests for sizes of maximal antichains in B_n.
//
// All searches below run over (t, a, b, c) with t <= k and a+b <= t, which is
// a few thousand candidates at most for n <= 64.

#include <cstdint>
#include <string>

#include "flatac/error.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

namespace detail {

constexpr int half_up(int n) { return (n + 1) / 2; }

inline void check_size_range(int n, std::int64_t m) {
  if (n < 1 || n > max_ground) throw error(errc::size_range, "n outside [1,64]");
  const std::int64_t top = binom(n, half_up(n));
  if (m < 1 || m > top)
    throw error(errc::size_range, "m=" + std::to_string(m) + " outside [1," + std::to_string(top) + "]");
}

/// Is there a >= b >= c >= 0 with a_plus_b_min <= a+b <= t and
/// C(a,2) + C(b,2) + c == target?
inline bool pair_sum_form(std::int64_t target, int t, int a_plus_b_min) {
  if (target < 0) return false;
  for (int a = 0; a <= t; ++a) {
    for (int b = 0; b <= a && a + b <= t; ++b) {
      if (a + b < a_plus_b_min) continue;
      const std::int64_t c = target - binom(a, 2) - binom(b, 2);
      if (c >= 0 && c <= b) return true;
    }
  }
  return false;
}

}  // namespace detail

/// m = C(n,k) - t*l + C(a,2) + C(b,2) + c with l in {k, n-k}, 0 <= t <= k,
/// a >= b >= c >= 0, a+b <= t.
inline bool has_top_quadruple_form(int n, std::int64_t m) {
  const int k = detail::half_up(n);
  const std::int64_t top = binom(n, k);
  for (int l : {k, n - k})
    for (int t = 0; t <= k; ++t)
      if (detail::pair_sum_form(m - top + static_cast<std::int64_t>(t) * l, t, 0)) return true;
  return false;
}

/// C(n,k) - k ceil((k+1)/2): every size up to here is a maximal antichain size.
inline std::int64_t mac_dense_limit(int n) {
  const int k = detail::half_up(n);
  return binom(n, k) - static_cast<std::int64_t>(k) * ceil_div(k + 1, 2);
}

inline bool is_mac_size(int n, std::int64_t m) {
  detail::check_size_range(n, m);
  return m <= mac_dense_limit(n) || has_top_quadruple_form(n, m);
}

struct FlatConditions {
  bool main_interval = false;  // (i)
  bool top_form = false;       // (ii)
  bool levels12 = false;       // (iii)
  [[nodiscard]] bool any() const { return main_interval || top_form || levels12; }
};

inline FlatConditions flat_conditions(int n, std::int64_t m) {
  detail::check_size_range(n, m);
  FlatConditions c;
  const std::int64_t lo = binom(n, 2) - static_cast<std::int64_t>(n + 1) * (n + 1) / 8;
  c.main_interval = lo <= m && m <= mac_dense_limit(n);
  c.top_form = has_top_quadruple_form(n, m);
  for (int t = 0; t <= n && !c.levels12; ++t) c.levels12 = binom(t, 2) + n - t == m;
  return c;
}

inline bool is_flat_mac_size(int n, std::int64_t m) { return flat_conditions(n, m).any(); }

/// For C(n,l+1) - (n-l-1) ceil((n-l)/2) < m < C(n,l+1): is
/// m = C(n,l+1) - t(n-l-1) + C(a,2) + C(b,2) + c with 1 <= t <= n-l+1,
/// a >= b >= c >= 0 and 1 <= a+b <= t? This is the necessary form near the
/// top of a level; for l in {2,3} it is not known to be sufficient.
inline bool near_top_gap_form(int n, int l, std::int64_t m) {
  if (n < 2 || n > max_ground || l < 0 || l + 1 > n) throw error(errc::not_near_top, "levels outside [0,n]");
  const std::int64_t top = binom(n, l + 1);
  const std::int64_t floor_ = top - static_cast<std::int64_t>(n - l - 1) * ceil_div(n - l, 2);
  if (m <= floor_ || m >= top)
    throw error(errc::not_near_top, "m=" + std::to_string(m) + " outside (" + std::to_string(floor_) + "," +
                                        std::to_string(top) + ")");
  for (int t = 1; t <= n - l + 1; ++t)
    if (detail::pair_sum_form(m - top + static_cast<std::int64_t>(t) * (n - l - 1), t, 1)) return true;
  return false;
}

}  // namespace flatac
